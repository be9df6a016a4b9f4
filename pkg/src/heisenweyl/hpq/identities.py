"""Named elements of H_{p,q} and the identity, centrality and twist checks."""

from __future__ import annotations

from math import gcd

from ..params import Numeric, Quotient, Scalar
from ..report import Entry, run_check
from .algebra import HeisenbergAlgebra, PBWElement, commutator, quommutator


def _alg(alg):
    return HeisenbergAlgebra() if alg is None else alg


def theta(alg: HeisenbergAlgebra | None = None) -> PBWElement:
    """``(1 - pq) yx - z``; normal, with ``theta x = q x theta``."""
    alg = _alg(alg)
    return (1 - alg.p * alg.q) * (alg.y * alg.x) - alg.z


def omega(r: int, s: int, alg: HeisenbergAlgebra | None = None) -> PBWElement:
    """``(yx - p^-1 xy)^r z^s``, central exactly when ``q^r = p^s``."""
    if r < 1 or s < 1:
        raise ValueError("omega needs positive r, s")
    if gcd(r, s) != 1:
        raise ValueError(f"omega needs gcd(r, s) = 1, got ({r}, {s})")
    alg = _alg(alg)
    base = quommutator(alg.y, alg.x, alg.p.inverse())
    return base ** r * alg.z ** s


# ---------------------------------------------------------------------------
# reordering identities
# ---------------------------------------------------------------------------

def ident_closed_form(n: int, which: str, alg: HeisenbergAlgebra | None = None) -> PBWElement:
    """``y x^n`` (``ident1``) or ``y^n x`` (``ident2``) written down directly."""
    alg = _alg(alg)
    num = alg.number(n)
    qn = alg.qpow(n)
    if which == "ident1":
        return alg.element({(n, 1, 0): qn, (n - 1, 0, 1): num})
    if which == "ident2":
        # [n] z y^(n-1) = [n] p^(n-1) y^(n-1) z
        return alg.element({(1, n, 0): qn, (0, n - 1, 1): num * alg.ppow(n - 1)})
    raise ValueError(f"unknown identity {which!r}")


def ident_by_multiplication(n: int, which: str, alg: HeisenbergAlgebra | None = None) -> PBWElement:
    """Same products built one generator at a time."""
    alg = _alg(alg)
    if which == "ident1":
        out = alg.y
        for _ in range(n):
            out = out * alg.x
        return out
    if which == "ident2":
        out = alg.x
        for _ in range(n):
            out = alg.y * out
        return out
    raise ValueError(f"unknown identity {which!r}")


def verify_ident(n: int, which: str = "ident1", alg: HeisenbergAlgebra | None = None) -> Entry:
    if n < 1:
        raise ValueError("n must be positive")
    alg = _alg(alg)

    def check():
        diff = ident_by_multiplication(n, which, alg) - ident_closed_form(n, which, alg)
        return not diff, diff

    anchor = "y x^n reordering" if which == "ident1" else "y^n x reordering"
    return run_check("identities", which, anchor, {"n": n}, check)


# ---------------------------------------------------------------------------
# centrality and normality
# ---------------------------------------------------------------------------

def _vanishes(value, tol):
    if isinstance(value, complex):
        return abs(value) <= tol
    return not value


def specialized_terms(f: PBWElement, spec) -> dict:
    """Coefficients of ``f`` pushed through a specialisation, zeros dropped."""
    out = {}
    tol = 1e-9 if isinstance(spec, Numeric) else 0
    for key, c in f.terms.items():
        v = spec(c)
        if not _vanishes(v, tol):
            out[key] = v
    return out


def vanishes_under(f: PBWElement, spec=None) -> bool:
    if spec is None:
        return not f
    return not specialized_terms(f, spec)


def central_witness(f: PBWElement, spec=None):
    """First generator failing to commute with ``f``, with the commutator."""
    for name, g in f.algebra.gens().items():
        c = commutator(f, g)
        if not vanishes_under(c, spec):
            return name, c
    return None


def is_central(f: PBWElement, spec=None) -> bool:
    return central_witness(f, spec) is None


def check_normal(f: PBWElement, twist: dict) -> bool:
    """``f g = twist[g] g f`` for each generator ``g``; ``twist`` maps names to scalars."""
    for name, g in f.algebra.gens().items():
        lam = Scalar.coerce(twist.get(name, 1))
        if quommutator(f, g, 1) != (lam - 1) * (g * f):
            return False
    return True


# ---------------------------------------------------------------------------
# down-up relations and the graded twist
# ---------------------------------------------------------------------------

def downup_residues(alg: HeisenbergAlgebra | None = None, alpha=None, beta=None):
    """``y x^2 - alpha xyx - beta x^2 y`` and ``y^2 x - alpha yxy - beta x y^2``.

    Defaults are ``alpha = p^-1 + q`` and ``beta = -p^-1 q``.
    """
    alg = _alg(alg)
    pinv = alg.p.inverse()
    alpha = pinv + alg.q if alpha is None else Scalar.coerce(alpha)
    beta = -pinv * alg.q if beta is None else Scalar.coerce(beta)
    x, y = alg.x, alg.y
    first = y * x * x - alpha * (x * y * x) - beta * (x * x * y)
    second = y * y * x - alpha * (y * x * y) - beta * (x * y * y)
    return first, second


def verify_downup(alg: HeisenbergAlgebra | None = None, alpha=None, beta=None) -> bool:
    first, second = downup_residues(alg, alpha, beta)
    return not first and not second


def twist_power(g: PBWElement, n: int) -> PBWElement:
    """``tau^n(g)`` with ``tau(x) = p^(1/2) x``, ``tau(y) = p^(-1/2) y``, ``tau(z) = z``."""
    half = g.algebra.p.sqrt()
    return g._new({(i, j, k): c * half ** (n * (i - j)) for (i, j, k), c in g.terms.items()})


def zhang_twist_product(f: PBWElement, g: PBWElement) -> PBWElement:
    """``f * g = sum_n f_n tau^n(g)`` over the homogeneous parts ``f_n`` of ``f``."""
    out = f._new({})
    for n, part in f.homogeneous_parts().items():
        out = out + part * twist_power(g, n)
    return out


def zhang_twist_relations(alg: HeisenbergAlgebra | None = None) -> dict:
    """The three twisted relations; each value should be zero."""
    alg = _alg(alg)
    x, y, z = alg.x, alg.y, alg.z
    tw = zhang_twist_product
    return {
        "z*x - x*z": tw(z, x) - tw(x, z),
        "z*y - y*z": tw(z, y) - tw(y, z),
        "y*x - pq x*y - p^(1/2) z": tw(y, x) - (alg.p * alg.q) * tw(x, y) - alg.p.sqrt() * z,
    }


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def _prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _is_primitive(image, order):
    if image ** order != 1:
        return False
    return all(image ** (order // ell) != 1 for ell in _prime_factors(order))


def root_of_unity_centrality(n: int, m: int, spec: Quotient, alg: HeisenbergAlgebra | None = None) -> bool:
    """``z^n``, ``x^(mn)``, ``y^(mn)`` central once ``p``, ``q`` become roots of unity."""
    if n < 1 or m < 1:
        raise ValueError("orders must be positive")
    if not _is_primitive(spec.p_image, n):
        raise ValueError(f"p does not map to a primitive {n}-th root of unity")
    if not _is_primitive(spec.q_image, m):
        raise ValueError(f"q does not map to a primitive {m}-th root of unity")
    alg = _alg(alg)
    return all(is_central(e, spec) for e in (alg.z ** n, alg.x ** (m * n), alg.y ** (m * n)))
