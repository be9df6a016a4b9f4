"""H_{p,q} with x and z inverted, and the computations that need it.

The basis is still ``x^i y^j z^k`` but now ``i, k`` range over all integers.
The multiplication of :class:`heisenweyl.hpq.HeisenbergAlgebra` carries over
unchanged because ``y x^n = q^n x^n y + [n] x^(n-1) z`` holds for negative
``n`` as well, with ``[n]`` from the fraction formula.
"""

from __future__ import annotations

from math import gcd

from .hpq import HeisenbergAlgebra, PBWElement, theta
from .hpq.algebra import _acc
from .params import Scalar
from .report import run_check


class LocalElement(PBWElement):
    """Element of the localization; ``x`` and ``z`` exponents may be negative."""

    __slots__ = ()

    def inverse(self):
        if len(self.terms) == 1:
            ((key, c),) = self.terms.items()
            i, j, k = key
            if j == 0:
                alg = self.algebra
                # (c x^i z^k)^-1 = c^-1 z^-k x^-i
                return alg.monomial(0, 0, -k, c.inverse()) * alg.monomial(-i, 0, 0)
        raise ValueError(f"{self} is not a unit of the localized algebra")


class TorusElement(LocalElement):
    """Element of the quantum torus generated by ``x^(+-1)``, ``z^(+-1)``."""

    __slots__ = ()

    def __init__(self, algebra, terms):
        if any(j for _, j, _ in terms):
            raise ValueError("torus elements have no y")
        super().__init__(algebra, terms)

    def _new(self, terms):
        if any(j for _, j, _ in terms):
            return LocalElement(self.algebra, terms)
        return TorusElement(self.algebra, terms)

    def torus_terms(self) -> dict:
        return {(i, k): c for (i, _, k), c in self.terms.items()}


class LocalizedHeisenberg(HeisenbergAlgebra):
    localized = True

    @property
    def element_class(self):
        return LocalElement

    @property
    def x_inv(self):
        return self.monomial(-1, 0, 0)

    @property
    def z_inv(self):
        return self.monomial(0, 0, -1)

    def torus(self, terms) -> TorusElement:
        """Torus element from ``{(i, k): coeff}``."""
        elem = self.element({(i, 0, k): c for (i, k), c in terms.items()})
        return TorusElement(self, elem.terms)

    def mul(self, f, g):
        terms = self.multiply_terms(f.terms, g.terms)
        if isinstance(f, TorusElement) and isinstance(g, TorusElement):
            return TorusElement(self, terms)
        return LocalElement(self, terms)

    def lift(self, f: PBWElement) -> LocalElement:
        """Image of an element of the unlocalized algebra with the same parameters."""
        if f.algebra.p != self.p or f.algebra.q != self.q:
            raise ValueError("parameters differ")
        return LocalElement(self, dict(f.terms))


def local_multiply(f: LocalElement, g: LocalElement) -> LocalElement:
    return f * g


def _local(alg):
    return LocalizedHeisenberg() if alg is None else alg


# ---------------------------------------------------------------------------
# Virasoro-type generators
# ---------------------------------------------------------------------------

def virasoro_L(n: int, alg: LocalizedHeisenberg | None = None) -> LocalElement:
    """``L_n = z^-1 x^(n+1) y``, normal form ``p^n x^(n+1) y z^-1``."""
    alg = _local(alg)
    return alg.monomial(n + 1, 1, -1, alg.ppow(n))


def virasoro_residue(n: int, m: int, alg: LocalizedHeisenberg | None = None) -> LocalElement:
    """``p^(n-m) L_n L_m - q^(m-n) L_m L_n - [m-n] L_(m+n)``."""
    alg = _local(alg)
    Ln, Lm = virasoro_L(n, alg), virasoro_L(m, alg)
    lhs = alg.ppow(n - m) * (Ln * Lm) - alg.qpow(m - n) * (Lm * Ln)
    return lhs - alg.number(m - n) * virasoro_L(m + n, alg)


def verify_virasoro(n: int, m: int, alg: LocalizedHeisenberg | None = None) -> bool:
    return not virasoro_residue(n, m, alg)


# ---------------------------------------------------------------------------
# inner automorphism data for the dependent case
# ---------------------------------------------------------------------------

def _beta(alg):
    pq = alg.p * alg.q
    if pq == 1:
        raise ValueError("pq = 1: (1 - pq)^-1 is undefined")
    return (1 - pq).inverse()


def inner_t(alg: LocalizedHeisenberg | None = None) -> TorusElement:
    """``t = (1 - pq)^-1 z x^-1``."""
    alg = _local(alg)
    return alg.torus({(0, 1): _beta(alg)}) * alg.torus({(-1, 0): 1})


def inner_a(r: int, s: int, alg: LocalizedHeisenberg | None = None) -> TorusElement:
    """``a = q^r z^s x^r``."""
    alg = _local(alg)
    return alg.torus({(0, s): alg.qpow(r)}) * alg.torus({(r, 0): 1})


def inner_residues(r: int, s: int, alg: LocalizedHeisenberg | None = None) -> dict:
    """Named differences that vanish when the inner-automorphism identities hold."""
    if r < 1 or s < 1 or gcd(r, s) != 1:
        raise ValueError(f"need positive coprime r, s, got ({r}, {s})")
    alg = _local(alg)
    x, z = alg.x, alg.z
    t = inner_t(alg)
    sigma_x, sigma_z = alg.q * x, alg.p.inverse() * z
    a = inner_a(r, s, alg)
    a_inv = a.inverse()
    return {
        "t z - sigma(z) t": t * z - sigma_z * t,
        "t x - sigma(x) t - z": t * x - sigma_x * t - z,
        "a^-1 x a - p^s x": a_inv * x * a - alg.ppow(s) * x,
        "a^-1 z a - p^-r z": a_inv * z * a - alg.ppow(-r) * z,
    }


def verify_inner(r: int, s: int, alg: LocalizedHeisenberg | None = None) -> list:
    """One report entry per inner-automorphism identity."""
    residues = inner_residues(r, s, alg)
    return [
        run_check("inner", name, "conjugation by t and a", {"r": r, "s": s}, lambda d=diff: (not d, d))
        for name, diff in residues.items()
    ]


def sigma_power_matches(r: int, s: int, spec) -> bool:
    """Under ``q^r = p^s`` conjugation by ``a`` on ``x`` is ``sigma^r``: ``p^s = q^r``."""
    alg = _local(None)
    return spec(alg.ppow(s)) == spec(alg.qpow(r))


def theta_factorization_residues(alg: LocalizedHeisenberg | None = None) -> dict:
    alg = _local(alg)
    t = inner_t(alg)
    th = theta(alg)
    lam = ((1 - alg.p * alg.q) * alg.q).inverse()
    ymt = alg.y - t
    return {
        "x(y - t) - lambda theta": alg.x * ymt - lam * th,
        "x^2 (y - t)^2 - lambda^2 q^-1 theta^2": alg.x ** 2 * ymt * ymt - lam * lam * alg.q.inverse() * th * th,
    }


def verify_theta_factorization(alg: LocalizedHeisenberg | None = None) -> bool:
    return not any(theta_factorization_residues(alg).values())


# ---------------------------------------------------------------------------
# the subring generated by x^(+-1) and z^-1 y
# ---------------------------------------------------------------------------

def zinv_y(alg: LocalizedHeisenberg | None = None) -> LocalElement:
    """``z^-1 y = p^-1 y z^-1``."""
    alg = _local(alg)
    return alg.z_inv * alg.y


def quantum_weyl_residue(alg: LocalizedHeisenberg | None = None) -> LocalElement:
    alg = _local(alg)
    Y = zinv_y(alg)
    return Y * alg.x - alg.p * alg.q * (alg.x * Y) - 1


def quantum_weyl_subring_check(alg: LocalizedHeisenberg | None = None) -> bool:
    """``(z^-1 y) x - pq x (z^-1 y) = 1``."""
    return not quantum_weyl_residue(alg)


def zinv_y_power_coefficient(j: int, alg: LocalizedHeisenberg) -> Scalar:
    """``(z^-1 y)^j = c_j y^j z^-j``; returns ``c_j``."""
    # z^-1 y^j = p^-j y^j z^-1, so c_j = p^-1 p^-2 ... p^-j
    return alg.ppow(-j * (j + 1) // 2)


def to_weyl_basis(f: LocalElement) -> dict:
    """Coordinates of ``f`` in the basis ``x^i (z^-1 y)^j``.

    Raises ``ValueError`` if ``f`` has a term outside the span, i.e. one whose
    ``z`` exponent is not ``-j``.
    """
    alg = f.algebra
    out = {}
    for (i, j, k), c in f.terms.items():
        if k != -j:
            raise ValueError(f"term x^{i} y^{j} z^{k} is outside the span of x^i (z^-1 y)^j")
        _acc(out, (i, j), c * zinv_y_power_coefficient(j, alg).inverse())
    return out


def weyl_basis_element(i: int, j: int, alg: LocalizedHeisenberg) -> LocalElement:
    return alg.monomial(i, j, -j, zinv_y_power_coefficient(j, alg))


def in_left_ideal(f: LocalElement) -> bool:
    """Membership in ``B (z^-1 y)``: every Weyl-basis term has ``j >= 1``."""
    return all(j >= 1 for (_, j) in to_weyl_basis(f))


def idealizer_generator_check(bound: int = 8, alg: LocalizedHeisenberg | None = None) -> bool:
    """``(z^-1 y) x^n (z^-1 y)`` lies in ``B (z^-1 y)`` for ``0 <= n <= bound``."""
    alg = _local(alg)
    Y = zinv_y(alg)
    return all(in_left_ideal(Y * (alg.x ** n * Y)) for n in range(bound + 1))


def left_ideal_contains_product(g: LocalElement, alg: LocalizedHeisenberg | None = None) -> bool:
    """Whether ``(z^-1 y) g`` lies in ``B (z^-1 y)``; false for ``g = x``."""
    alg = _local(alg)
    return in_left_ideal(zinv_y(alg) * g)
