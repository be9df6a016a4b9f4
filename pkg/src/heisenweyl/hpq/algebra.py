"""PBW arithmetic in H_{p,q} = k<x,y,z | zx = p^-1 xz, zy = p yz, yx = q xy + z>.

Elements are stored in the ordered basis ``x^i y^j z^k``.  Products are put
in normal form with three closed-form moves:

* ``z^c x^i = p^(-c i) x^i z^c`` and ``z^c y^j = p^(c j) y^j z^c``;
* ``y x^n = q^n x^n y + [n] x^(n-1) z``, applied one ``y`` at a time.

The same moves are valid for ``i, c`` of either sign, which is what the
localized algebra in :mod:`heisenweyl.localize` relies on.
"""

from __future__ import annotations

from ..freealg import format_terms
from ..params import Scalar, pq_number

ONE = Scalar(1)


def format_pbw_monomial(key) -> str:
    parts = []
    for name, e in zip("xyz", key):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


class HeisenbergAlgebra:
    """H_{p,q} for given nonzero parameters (generic ``p``, ``q`` by default)."""

    localized = False

    def __init__(self, p=None, q=None):
        self.p = Scalar.p() if p is None else Scalar.coerce(p)
        self.q = Scalar.q() if q is None else Scalar.coerce(q)
        if not self.p or not self.q:
            raise ValueError("parameters must be nonzero")
        self._numbers = {}
        self._ppow = {}
        self._qpow = {}
        self._yx = {}

    @property
    def element_class(self):
        return PBWElement

    def __eq__(self, other):
        return (
            type(self) is type(other) and self.p == other.p and self.q == other.q
        )

    def __hash__(self):
        return hash((type(self), self.p, self.q))

    def __repr__(self):
        return f"{type(self).__name__}(p={self.p}, q={self.q})"

    # -- cached scalars ---------------------------------------------------
    def number(self, n: int) -> Scalar:
        """``[n]_{p,q}`` for this algebra's parameters."""
        v = self._numbers.get(n)
        if v is None:
            if self.p == Scalar.p() and self.q == Scalar.q():
                v = pq_number(n)
            else:
                v = pq_number(n, self.p, self.q)
            self._numbers[n] = v
        return v

    def ppow(self, n: int) -> Scalar:
        v = self._ppow.get(n)
        if v is None:
            v = self._ppow[n] = self.p ** n
        return v

    def qpow(self, n: int) -> Scalar:
        v = self._qpow.get(n)
        if v is None:
            v = self._qpow[n] = self.q ** n
        return v

    # -- constructors -----------------------------------------------------
    def _check_key(self, key):
        i, j, k = key
        if j < 0 or (not self.localized and (i < 0 or k < 0)):
            raise ValueError(f"exponent {key} outside the basis of {type(self).__name__}")

    def element(self, terms=None):
        out = {}
        for key, c in (terms or {}).items():
            key = tuple(int(e) for e in key)
            self._check_key(key)
            c = Scalar.coerce(c)
            if c:
                v = out.get(key)
                v = c if v is None else v + c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return self.element_class(self, out)

    def monomial(self, i=0, j=0, k=0, coeff=1):
        return self.element({(i, j, k): coeff})

    def scalar(self, c):
        return self.monomial(0, 0, 0, c)

    @property
    def one(self):
        return self.scalar(1)

    @property
    def x(self):
        return self.monomial(1, 0, 0)

    @property
    def y(self):
        return self.monomial(0, 1, 0)

    @property
    def z(self):
        return self.monomial(0, 0, 1)

    def gens(self):
        return {"x": self.x, "y": self.y, "z": self.z}

    # -- multiplication ---------------------------------------------------
    def _y_power_times_x_power(self, b: int, d: int) -> dict:
        """Normal form of ``y^b x^d`` as ``{(i, j, k): coeff}``."""
        key = (b, d)
        cached = self._yx.get(key)
        if cached is not None:
            return cached
        if b == 0:
            result = {(d, 0, 0): ONE}
        else:
            result = {}
            for (i, j, k), c in self._y_power_times_x_power(b - 1, d).items():
                # y x^i y^j z^k = q^i x^i y^(j+1) z^k + [i] p^j x^(i-1) y^j z^(k+1)
                _acc(result, (i, j + 1, k), c * self.qpow(i))
                if i:
                    n = self.number(i)
                    if n:
                        _acc(result, (i - 1, j, k + 1), c * n * self.ppow(j))
        self._yx[key] = result
        return result

    def multiply_terms(self, f: dict, g: dict) -> dict:
        out = {}
        for (a, b, c), cf in f.items():
            for (d, e, h), cg in g.items():
                base = cf * cg
                shift = c * (e - d)
                for (i, j, k), kappa in self._y_power_times_x_power(b, d).items():
                    # x^a (x^i y^j z^k) y^e z^(c+h), with z^k y^e = p^(k e) y^e z^k
                    coeff = base * kappa * self.ppow(shift + k * e)
                    _acc(out, (a + i, j + e, k + c + h), coeff)
        return out

    def mul(self, f, g):
        cls = type(f) if type(f) is type(g) else self.element_class
        return cls(self, self.multiply_terms(f.terms, g.terms))


def _acc(d, key, c):
    v = d.get(key)
    if v is None:
        if c:
            d[key] = c
    else:
        v = v + c
        if v:
            d[key] = v
        else:
            del d[key]


class PBWElement:
    """Finite sum ``sum c[i,j,k] x^i y^j z^k`` in a :class:`HeisenbergAlgebra`."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def _same(self, other):
        if isinstance(other, PBWElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise ValueError("elements belong to different algebras")
            return other
        return self.algebra.scalar(Scalar.coerce(other))

    def _new(self, terms):
        return type(self)(self.algebra, terms)

    # -- structure ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = self._same(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def coefficient(self, i=0, j=0, k=0) -> Scalar:
        return self.terms.get((i, j, k), Scalar(0))

    def support(self):
        return set(self.terms)

    def degree(self) -> int:
        """Grading with ``deg x = deg y = 1``, ``deg z = 2``."""
        return max((i + j + 2 * k for i, j, k in self.terms), default=-1)

    def homogeneous_parts(self) -> dict:
        parts = {}
        for key, c in self.terms.items():
            parts.setdefault(key[0] + key[1] + 2 * key[2], {})[key] = c
        return {n: self._new(t) for n, t in parts.items()}

    def map_coefficients(self, fn):
        """Apply ``fn`` to every coefficient; returns ``{key: fn(c)}``."""
        return {key: fn(c) for key, c in self.terms.items()}

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            other = self._same(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._same(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return self.algebra.mul(self, self._same(other))
        try:
            c = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not c:
            return self._new({})
        return self._new({key: v * c for key, v in self.terms.items()})

    def __rmul__(self, other):
        try:
            c = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not c:
            return self._new({})
        return self._new({key: c * v for key, v in self.terms.items()})

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def inverse(self):
        """Inverse of a unit; only nonzero scalars in H itself."""
        if len(self.terms) == 1:
            ((key, c),) = self.terms.items()
            if key == (0, 0, 0):
                return self._new({key: c.inverse()})
        raise ValueError(f"{self} is not invertible in {type(self.algebra).__name__}")

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- display ----------------------------------------------------------
    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0]), kv[0]),
            reverse=True,
        )

    def __str__(self):
        return format_terms((c, format_pbw_monomial(key)) for key, c in self.sorted_terms())

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


def pbw_multiply(f: PBWElement, g: PBWElement) -> PBWElement:
    return f * g


def commutator(f, g):
    """``fg - gf``."""
    return f * g - g * f


def quommutator(f, g, lam):
    """``fg - lam gf``."""
    return f * g - (g * f) * Scalar.coerce(lam)
