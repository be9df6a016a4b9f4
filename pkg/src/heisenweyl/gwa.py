"""Generalized Weyl algebras D(rho, a) over commutative (Laurent) polynomial rings.

A GWA with ``n`` components has generators ``x_i, y_i`` over a base ring
``D`` with commuting automorphisms ``rho_i`` and elements ``a_i`` such that

    x_i d = rho_i(d) x_i,   y_i d = rho_i^-1(d) y_i,
    y_i x_i = a_i,          x_i y_i = rho_i(a_i),

and generators of different components commute.  Elements are stored as
``sum d_alpha v_alpha`` with ``v_alpha = prod_i v_i^(alpha_i)`` where
``v_i^m = x_i^m`` for ``m > 0`` and ``y_i^-m`` for ``m < 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .freealg import FreeElement, Letter, format_terms
from .freealg.words import Alphabet
from .hpq import PBWElement
from .params import OneParam, Scalar
from .params.scalar import PQ, T, format_monomial
from .report import run_check


# ---------------------------------------------------------------------------
# base rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseRing:
    """Commutative ring ``k[g_1, ...]`` with some generators inverted."""

    names: tuple
    laurent: tuple
    scalar_gens: tuple = PQ

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "laurent", tuple(bool(b) for b in self.laurent))
        if len(self.names) != len(self.laurent):
            raise ValueError("one Laurent flag per generator")

    @property
    def rank(self):
        return len(self.names)

    def poly(self, terms=None) -> "BasePoly":
        return BasePoly(self, terms or {})

    def zero(self):
        return BasePoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        return BasePoly(self, {(0,) * self.rank: c})

    def gen(self, name, exp=1, coeff=1):
        e = [0] * self.rank
        e[self.names.index(name)] = exp
        return BasePoly(self, {tuple(e): coeff})


class BasePoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: BaseRing, terms):
        self.ring = ring
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != ring.rank:
                raise ValueError("exponent vector has the wrong length")
            for v, lau, name in zip(e, ring.laurent, ring.names):
                if v < 0 and not lau:
                    raise ValueError(f"negative power of polynomial generator {name}")
            c = Scalar.coerce(c)
            if c:
                v = out.get(e)
                v = c if v is None else v + c
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        self.terms = out

    @classmethod
    def _raw(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def _lift(self, other):
        if isinstance(other, BasePoly):
            if other.ring != self.ring:
                raise ValueError("polynomials over different base rings")
            return other
        return self.ring.const(other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return BasePoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return BasePoly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BasePoly):
            try:
                c = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            return BasePoly._raw(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return BasePoly._raw(self.ring, out)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        if len(self.terms) != 1:
            return False
        ((e, _),) = self.terms.items()
        return all(v == 0 or lau for v, lau in zip(e, self.ring.laurent))

    def inverse(self) -> "BasePoly":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit of the base ring")
        ((e, c),) = self.terms.items()
        return BasePoly._raw(self.ring, {tuple(-v for v in e): c.inverse()})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self):
        gens = self.ring.names

        def mono(e):
            # format_monomial expects doubled exponents
            return format_monomial(tuple(2 * v for v in e), gens) or "1"

        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        return format_terms((c, mono(e)) for e, c in items)

    def __repr__(self):
        return f"BasePoly({str(self)!r})"

    def is_atomic(self):
        if len(self.terms) != 1:
            return not self.terms
        ((e, c),) = self.terms.items()
        return not any(e) and c.is_atomic()


class BaseAuto:
    """Ring automorphism given by generator images and their preimages."""

    def __init__(self, ring: BaseRing, images: dict, inverse_images: dict):
        self.ring = ring
        self.images = [images[n] for n in ring.names]
        self.inverse_images = [inverse_images[n] for n in ring.names]
        for imgs in (self.images, self.inverse_images):
            for img, lau, name in zip(imgs, ring.laurent, ring.names):
                if lau and not img.is_unit():
                    raise ValueError(f"image of Laurent generator {name} must be a unit")
        self._inv = None
        for name in ring.names:
            g = ring.gen(name)
            if self.apply(self.inverse().apply(g)) != g or self.inverse().apply(self.apply(g)) != g:
                raise ValueError(f"inverse images do not invert the map on {name}")

    def inverse(self) -> "BaseAuto":
        if self._inv is None:
            inv = object.__new__(BaseAuto)
            inv.ring = self.ring
            inv.images = self.inverse_images
            inv.inverse_images = self.images
            inv._inv = self
            self._inv = inv
        return self._inv

    def apply(self, f: BasePoly) -> BasePoly:
        out = self.ring.zero()
        for e, c in f.terms.items():
            term = self.ring.const(c)
            for img, v in zip(self.images, e):
                if v:
                    term = term * img ** v
            out = out + term
        return out

    __call__ = apply

    def power(self, k: int, f: BasePoly) -> BasePoly:
        auto = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            f = auto.apply(f)
        return f

    def commutes_with(self, other: "BaseAuto") -> bool:
        return all(
            self.apply(other.apply(self.ring.gen(n))) == other.apply(self.apply(self.ring.gen(n)))
            for n in self.ring.names
        )


# ---------------------------------------------------------------------------
# GWA data and elements
# ---------------------------------------------------------------------------

class GWAData:
    def __init__(self, ring: BaseRing, rhos, a, names=None):
        self.ring = ring
        self.rhos = list(rhos)
        self.a = list(a)
        if not self.rhos or len(self.rhos) != len(self.a):
            raise ValueError("need one automorphism and one element a per component")
        n = len(self.rhos)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if not self.rhos[i].commutes_with(self.rhos[j]):
                    raise ValueError(f"automorphisms {i + 1} and {j + 1} do not commute")
                if self.rhos[i](self.a[j]) != self.a[j]:
                    raise ValueError(f"rho_{i + 1} does not fix a_{j + 1}")
        self.names = names or (
            [("x", "y")] if n == 1 else [(f"x{i + 1}", f"y{i + 1}") for i in range(n)]
        )
        self._rho_a = [dict() for _ in range(n)]

    @property
    def n(self):
        return len(self.rhos)

    def rho_power_a(self, i: int, k: int) -> BasePoly:
        cache = self._rho_a[i]
        v = cache.get(k)
        if v is None:
            v = cache[k] = self.rhos[i].power(k, self.a[i])
        return v

    def shift(self, alpha, f: BasePoly) -> BasePoly:
        """``rho^alpha(f) = prod_i rho_i^(alpha_i)(f)``."""
        for i, k in enumerate(alpha):
            if k:
                f = self.rhos[i].power(k, f)
        return f

    def component_product(self, i: int, a: int, b: int) -> BasePoly:
        """Coefficient ``c`` in ``v_i^a v_i^b = c v_i^(a+b)``."""
        one = self.ring.one()
        if a == 0 or b == 0 or (a > 0) == (b > 0):
            return one
        c = one
        if a > 0:  # x^a y^m
            m = -b
            if a >= m:
                for k in range(1, m + 1):
                    c = c * self.rho_power_a(i, k + a - m)
            else:
                for k in range(1, a + 1):
                    c = c * self.rho_power_a(i, k)
        else:  # y^n x^m
            n, m = -a, b
            if n >= m:
                for k in range(m):
                    c = c * self.rho_power_a(i, -k - (n - m))
            else:
                for k in range(n):
                    c = c * self.rho_power_a(i, -k)
        return c

    # -- constructors ---------------------------------------------------------
    def element(self, terms=None) -> "GWAElement":
        return GWAElement(self, terms or {})

    def base(self, f) -> "GWAElement":
        f = f if isinstance(f, BasePoly) else self.ring.const(f)
        return GWAElement(self, {(0,) * self.n: f})

    def one(self):
        return self.base(1)

    def x(self, i: int = 1) -> "GWAElement":
        return self._gen(i, 1)

    def y(self, i: int = 1) -> "GWAElement":
        return self._gen(i, -1)

    def _gen(self, i, sign):
        if not 1 <= i <= self.n:
            raise IndexError(f"component {i} out of range 1..{self.n}")
        d = [0] * self.n
        d[i - 1] = sign
        return GWAElement(self, {tuple(d): self.ring.one()})


class GWAElement:
    __slots__ = ("data", "terms")

    def __init__(self, data: GWAData, terms):
        self.data = data
        out = {}
        for d, f in terms.items():
            d = tuple(d)
            if len(d) != data.n:
                raise ValueError("degree vector has the wrong length")
            f = f if isinstance(f, BasePoly) else data.ring.const(f)
            if f:
                out[d] = out[d] + f if d in out else f
                if not out[d]:
                    del out[d]
        self.terms = out

    @classmethod
    def _raw(cls, data, terms):
        obj = object.__new__(cls)
        obj.data = data
        obj.terms = terms
        return obj

    def _lift(self, other):
        if isinstance(other, GWAElement):
            if other.data is not self.data:
                raise ValueError("elements of different GWAs")
            return other
        if isinstance(other, BasePoly):
            return self.data.base(other)
        return self.data.base(Scalar.coerce(other))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for d, f in other.terms.items():
            v = out[d] + f if d in out else f
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return GWAElement._raw(self.data, out)

    __radd__ = __add__

    def __neg__(self):
        return GWAElement._raw(self.data, {d: -f for d, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (GWAElement, BasePoly)):
            try:
                c = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
            return GWAElement._raw(self.data, {d: f * c for d, f in self.terms.items() if c})
        other = self._lift(other)
        data = self.data
        out = {}
        for alpha, f in self.terms.items():
            for beta, g in other.terms.items():
                coeff = f * data.shift(alpha, g)
                for i, (a, b) in enumerate(zip(alpha, beta)):
                    coeff = coeff * data.component_product(i, a, b)
                if not coeff:
                    continue
                deg = tuple(a + b for a, b in zip(alpha, beta))
                v = out[deg] + coeff if deg in out else coeff
                if v:
                    out[deg] = v
                else:
                    out.pop(deg, None)
        return GWAElement._raw(data, out)

    def __rmul__(self, other):
        if isinstance(other, BasePoly):
            return self.data.base(other) * self
        c = Scalar.coerce(other)
        return GWAElement._raw(self.data, {d: c * f for d, f in self.terms.items() if c})

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1 and (0,) * self.data.n in self.terms:
                return self.data.base(self.terms[(0,) * self.data.n].inverse()) ** (-n)
            raise ValueError(f"{self} is not invertible")
        result = self.data.one()
        for _ in range(n):
            result = result * self
        return result

    def degree_part(self, d) -> BasePoly:
        return self.terms.get(tuple(d), self.data.ring.zero())

    def __str__(self):
        def mono(d):
            parts = []
            for (xn, yn), v in zip(self.data.names, d):
                if v:
                    name, e = (xn, v) if v > 0 else (yn, -v)
                    parts.append(name if e == 1 else f"{name}^{e}")
            return "*".join(parts) or "1"

        items = sorted(self.terms.items(), key=lambda kv: (sum(map(abs, kv[0])), kv[0]), reverse=True)
        return format_terms((f, mono(d)) for d, f in items)

    def __repr__(self):
        return f"GWAElement({str(self)!r})"


def gwa_multiply(u: GWAElement, v: GWAElement, data: GWAData | None = None) -> GWAElement:
    if data is not None and (u.data is not data or v.data is not data):
        raise ValueError("elements do not belong to the given GWA")
    return u * v


def evaluate(expr: FreeElement, images: dict, one):
    """Substitute ``images[Letter]`` for each letter of a free-algebra expression."""
    total = one * 0
    for word, c in expr.terms.items():
        term = one
        for letter in word:
            term = term * images[letter]
        total = total + c * term
    return total


def _checks(suite, anchor, params, residues):
    return {
        name: run_check(suite, name, anchor, params, lambda d=diff: (not d, d))
        for name, diff in residues.items()
    }


# ---------------------------------------------------------------------------
# H_{p,q} as a GWA over k[c, z]
# ---------------------------------------------------------------------------

def hpq_gwa_data(p=None, q=None) -> GWAData:
    p = Scalar.p() if p is None else Scalar.coerce(p)
    q = Scalar.q() if q is None else Scalar.coerce(q)
    ring = BaseRing(("c", "z"), (False, False))
    c, z = ring.gen("c"), ring.gen("z")
    rho = BaseAuto(
        ring,
        {"c": q.inverse() * (c - z), "z": p * z},
        {"c": q * c + p.inverse() * z, "z": p.inverse() * z},
    )
    return GWAData(ring, [rho], [c])


def pbw_to_gwa(f: PBWElement, data: GWAData) -> GWAElement:
    """``x^i y^j z^k -> X^i Y^j z^k`` into the GWA model of H_{p,q}."""
    X, Y = data.x(), data.y()
    Z = data.base(data.ring.gen("z"))
    out = data.element()
    for (i, j, k), c in f.terms.items():
        out = out + c * (X ** i * Y ** j * Z ** k)
    return out


def hpq_as_gwa(p=None, q=None):
    """GWA model of H_{p,q} and its relation checks."""
    p = Scalar.p() if p is None else Scalar.coerce(p)
    q = Scalar.q() if q is None else Scalar.coerce(q)
    data = hpq_gwa_data(p, q)
    ring = data.ring
    X, Y = data.x(), data.y()
    Z = data.base(ring.gen("z"))
    C = data.base(ring.gen("c"))
    residues = {
        "zx - p^-1 xz": Z * X - p.inverse() * (X * Z),
        "zy - p yz": Z * Y - p * (Y * Z),
        "yx - q xy - z": Y * X - q * (X * Y) - Z,
        "yx - c": Y * X - C,
        "a z - z a": C * Z - Z * C,
    }
    return data, _checks("gwa", "H_{p,q} as D(rho, yx)", {"model": "hpq"}, residues)


# ---------------------------------------------------------------------------
# A_p(r, s) in the one-variable model, and A_{p,q}
# ---------------------------------------------------------------------------

def _check_rs(r, s):
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    if gcd(r, s) != 1:
        raise ValueError(f"gcd(r, s) must be 1, got ({r}, {s})")


def tensor_power(n: int, r: int, s: int) -> GWAData:
    """``A_p^n(r, s)`` over ``k(t)[u_1^(+-1), ..., u_n^(+-1)]`` with ``p = t^r``, ``q = t^s``."""
    _check_rs(r, s)
    if n < 1:
        raise ValueError("n must be positive")
    spec = OneParam(r, s)
    p, q, t = spec.p, spec.q, Scalar.t()
    pq = p * q
    beta = (1 - pq).inverse()
    names = ("u",) if n == 1 else tuple(f"u{i + 1}" for i in range(n))
    ring = BaseRing(names, (True,) * n, T)
    rhos, a = [], []
    for i, name in enumerate(names):
        images = {m: ring.gen(m) for m in names}
        inverse = dict(images)
        images[name] = ring.gen(name, coeff=t)
        inverse[name] = ring.gen(name, coeff=t.inverse())
        rhos.append(BaseAuto(ring, images, inverse))
        a.append(beta * (ring.gen(name, r) - pq * ring.gen(name, -s)))
    return GWAData(ring, rhos, a)


@dataclass
class TensorModel:
    """Generator images in ``A_p^n(r, s)`` keyed by free-algebra letters."""

    data: GWAData
    r: int
    s: int

    @property
    def n(self):
        return self.data.n

    def images(self) -> dict:
        ring, data = self.data.ring, self.data
        out = {}
        for i in range(1, self.n + 1):
            u = ring.names[i - 1]
            out[Letter(f"x{i}")] = data.x(i)
            out[Letter(f"y{i}")] = data.y(i)
            for name, e in ((f"z{i}", self.r), (f"w{i}", self.s)):
                out[Letter(name)] = data.base(ring.gen(u, e))
                out[Letter(name, True)] = data.base(ring.gen(u, -e))
        return out

    def evaluate(self, expr: FreeElement) -> GWAElement:
        return evaluate(expr, self.images(), self.data.one())


def tensor_alphabet(n: int) -> Alphabet:
    names = []
    for i in range(1, n + 1):
        names += [f"x{i}", f"y{i}", f"z{i}", f"w{i}"]
    inv = [m for m in names if m[0] in "zw"]
    return Alphabet(tuple(names), frozenset(inv))


def _letter(name, inverse=False):
    return FreeElement.letter(name, inverse)


def tensor_relations(n: int, r: int, s: int, cross: str | None = "corrected") -> dict:
    """The displayed relations of ``A_p^n(r, s)`` as free-algebra expressions.

    Each value should vanish.  ``cross`` selects how the commutator
    ``[y_i x_j, y_j x_i]`` is included: ``"literal"`` compares it with
    ``delta_ij (z_j w_i^-1 - z_i w_j^-1)``, ``"corrected"`` with the value
    ``(1 - delta_ij) p (1 - pq)^-1 (z_j w_i^-1 - z_i w_j^-1)`` that the other
    relations force, and ``None`` leaves it out.
    """
    _check_rs(r, s)
    spec = OneParam(r, s)
    p, q = spec.p, spec.q
    x = {i: _letter(f"x{i}") for i in range(1, n + 1)}
    y = {i: _letter(f"y{i}") for i in range(1, n + 1)}
    z = {i: _letter(f"z{i}") for i in range(1, n + 1)}
    zi = {i: _letter(f"z{i}", True) for i in range(1, n + 1)}
    w = {i: _letter(f"w{i}") for i in range(1, n + 1)}
    wi = {i: _letter(f"w{i}", True) for i in range(1, n + 1)}
    rel = {}
    idx = range(1, n + 1)
    for i in idx:
        for j in idx:
            d = int(i == j)
            if i < j:
                rel[f"[x{i},x{j}]"] = x[i] * x[j] - x[j] * x[i]
                rel[f"[y{i},y{j}]"] = y[i] * y[j] - y[j] * y[i]
            if i != j:
                rel[f"[x{i},y{j}]"] = x[i] * y[j] - y[j] * x[i]
            for a, ai, an in ((z, zi, "z"), (w, wi, "w")):
                for b, bi, bn in ((z, zi, "z"), (w, wi, "w")):
                    if (an, i) < (bn, j):
                        for ea, ua in ((a[i], "+"), (ai[i], "-")):
                            for eb, ub in ((b[j], "+"), (bi[j], "-")):
                                rel[f"[{an}{i}^{ua}1,{bn}{j}^{ub}1]"] = ea * eb - eb * ea
            pm, pp, qm, qp = ("p^-1 ", "p ", "q^-1 ", "q ") if d else ("",) * 4
            rel[f"z{i}x{j} - {pm}x{j}z{i}"] = z[i] * x[j] - p ** (-d) * (x[j] * z[i])
            rel[f"z{i}y{j} - {pp}y{j}z{i}"] = z[i] * y[j] - p ** d * (y[j] * z[i])
            rel[f"w{i}x{j} - {qm}x{j}w{i}"] = w[i] * x[j] - q ** (-d) * (x[j] * w[i])
            rel[f"w{i}y{j} - {qp}y{j}w{i}"] = w[i] * y[j] - q ** d * (y[j] * w[i])
        rel[f"z{i}z{i}^-1 - 1"] = z[i] * zi[i] - 1
        rel[f"w{i}w{i}^-1 - 1"] = w[i] * wi[i] - 1
        yx = y[i] * x[i]
        xy = x[i] * y[i]
        rel[f"y{i}x{i} - q x{i}y{i} - z{i}"] = yx - q * xy - z[i]
        rel[f"y{i}x{i} - p^-1 x{i}y{i} - w{i}^-1"] = yx - p.inverse() * xy - wi[i]
        rel[f"w{i} - (y{i}x{i} - p^-1 x{i}y{i})^(r-1) z{i}^s"] = (
            w[i] - (yx - p.inverse() * xy) ** (r - 1) * z[i] ** s
        )
    if cross is not None:
        factor = p * (1 - p * q).inverse()
        for i in idx:
            for j in idx:
                comm = y[i] * x[j] * (y[j] * x[i]) - y[j] * x[i] * (y[i] * x[j])
                diff = z[j] * wi[i] - z[i] * wi[j]
                if cross == "literal":
                    target = diff * int(i == j)
                elif cross == "corrected":
                    target = diff * (factor if i != j else 0)
                else:
                    raise ValueError(f"unknown cross mode {cross!r}")
                rel[f"[y{i}x{j},y{j}x{i}] ({cross})"] = comm - target
    return rel


def cross_commutator(i: int, j: int, data: GWAData, r: int, s: int) -> GWAElement:
    """``[y_i x_j, y_j x_i]`` computed in the GWA."""
    x, y = data.x, data.y
    return y(i) * x(j) * (y(j) * x(i)) - y(j) * x(i) * (y(i) * x(j))


def verify_cross_identity(i: int, j: int, data: GWAData, r: int, s: int) -> bool:
    """The commutator identity exactly as displayed, with ``delta_ij`` on the right."""
    n = data.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices must lie in 1..{n}")
    model = TensorModel(data, r, s)
    rhs = model.evaluate(
        (FreeElement.letter(f"z{j}") * FreeElement.letter(f"w{i}", True)
         - FreeElement.letter(f"z{i}") * FreeElement.letter(f"w{j}", True)) * int(i == j)
    )
    return cross_commutator(i, j, data, r, s) == rhs


def verify_cross_identity_corrected(i: int, j: int, data: GWAData, r: int, s: int) -> bool:
    """``[y_i x_j, y_j x_i] = (1 - delta_ij) p (1 - pq)^-1 (z_j w_i^-1 - z_i w_j^-1)``."""
    n = data.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices must lie in 1..{n}")
    spec = OneParam(r, s)
    factor = spec.p * (1 - spec.p * spec.q).inverse() if i != j else Scalar(0)
    model = TensorModel(data, r, s)
    rhs = model.evaluate(
        (FreeElement.letter(f"z{j}") * FreeElement.letter(f"w{i}", True)
         - FreeElement.letter(f"z{i}") * FreeElement.letter(f"w{j}", True)) * factor
    )
    return cross_commutator(i, j, data, r, s) == rhs


def aprs_as_gwa(r: int, s: int):
    """``A_p(r, s)`` as a GWA over ``k(t)[u^(+-1)]`` with ``z = u^r``, ``w = u^s``."""
    data = tensor_power(1, r, s)
    spec = OneParam(r, s)
    p, q = spec.p, spec.q
    model = TensorModel(data, r, s)
    ev = model.evaluate
    L = lambda name, inv=False: FreeElement.letter(name, inv)  # noqa: E731
    x, y, z, w, zi, wi = L("x1"), L("y1"), L("z1"), L("w1"), L("z1", True), L("w1", True)
    yx, xy = y * x, x * y
    skew = yx - p.inverse() * xy
    pq = p * q
    beta = (1 - pq).inverse()
    exprs = {
        "zx - p^-1 xz": z * x - p.inverse() * (x * z),
        "zy - p yz": z * y - p * (y * z),
        "yx - q xy - z": yx - q * xy - z,
        "(yx - p^-1 xy)^r - z^-s": skew ** r - zi ** s,
        "yx - p^-1 xy - w^-1": skew - wi,
        "yx - (z - pq w^-1)/(1 - pq)": yx - beta * (z - pq * wi),
        "xy - p (z - w^-1)/(1 - pq)": xy - p * beta * (z - wi),
        "wx - q^-1 xw": w * x - q.inverse() * (x * w),
        "wy - q yw": w * y - q * (y * w),
        "wz - zw": w * z - z * w,
        "w - (yx - p^-1 xy)^(r-1) z^s": w - skew ** (r - 1) * z ** s,
        "(yx - p^-1 xy)^r z^s - 1": skew ** r * z ** s - 1,
        "w^r - z^s": w ** r - z ** s,
    }
    residues = {name: ev(e) for name, e in exprs.items()}
    return data, _checks("gwa", "A_p(r,s) as D(rho, a)", {"model": "aprs", "r": r, "s": s}, residues)


def apq_gwa_data(p=None, q=None) -> GWAData:
    p = Scalar.p() if p is None else Scalar.coerce(p)
    q = Scalar.q() if q is None else Scalar.coerce(q)
    pq = p * q
    if pq == 1:
        raise ValueError("pq = 1 is excluded")
    ring = BaseRing(("z", "w"), (True, True))
    z, w = ring.gen("z"), ring.gen("w")
    rho = BaseAuto(
        ring,
        {"z": p * z, "w": q * w},
        {"z": p.inverse() * z, "w": q.inverse() * w},
    )
    a = (1 - pq).inverse() * (z - pq * ring.gen("w", -1))
    return GWAData(ring, [rho], [a])


def apq_indep_gwa(p=None, q=None):
    """``A_{p,q}`` with independent parameters over ``k[z^(+-1), w^(+-1)]``."""
    p = Scalar.p() if p is None else Scalar.coerce(p)
    q = Scalar.q() if q is None else Scalar.coerce(q)
    data = apq_gwa_data(p, q)
    ring = data.ring
    X, Y = data.x(), data.y()
    Z, W = data.base(ring.gen("z")), data.base(ring.gen("w"))
    Wi = data.base(ring.gen("w", -1))
    residues = {
        "zx - p^-1 xz": Z * X - p.inverse() * (X * Z),
        "zy - p yz": Z * Y - p * (Y * Z),
        "wx - q^-1 xw": W * X - q.inverse() * (X * W),
        "wy - q yw": W * Y - q * (Y * W),
        "yx - q xy - z": Y * X - q * (X * Y) - Z,
        "yx - p^-1 xy - w^-1": Y * X - p.inverse() * (X * Y) - Wi,
        "zw - wz": Z * W - W * Z,
    }
    return data, _checks("gwa", "A_{p,q} as D(rho, a)", {"model": "apq"}, residues)
