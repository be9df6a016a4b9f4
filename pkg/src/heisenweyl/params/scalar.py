"""Rational functions in ``p^(1/2), q^(1/2)`` over Q(i), and (p,q)-numbers."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .gaussian import ONE, GaussianRational
from .laurent import LaurentScalar, laurent_gcd, try_divide, exact_divide

PQ = ("p", "q")
T = ("t",)

_ONE_L = LaurentScalar.constant(1)


class Scalar:
    """Reduced fraction ``num / den`` of Laurent polynomials.

    ``gens`` names the variables behind the two exponent slots: ``("p", "q")``
    for generic parameters, ``("t",)`` for values living in a one-parameter
    specialisation.  Constants are compatible with either.

    Canonical form: ``den`` has nonnegative exponents with minimum zero in each
    variable, lex-leading coefficient 1, and no nonunit factor in common with
    ``num``.  Equality is structural.
    """

    __slots__ = ("num", "den", "gens", "_hash")

    def __init__(self, value=0, gens=PQ):
        if isinstance(value, Scalar):
            self.num, self.den, self.gens = value.num, value.den, value.gens
        elif isinstance(value, LaurentScalar):
            self.num, self.den, self.gens = value, _ONE_L, gens
        else:
            self.num = LaurentScalar.constant(GaussianRational.coerce(value))
            self.den = _ONE_L
            self.gens = gens
        self._hash = None

    @classmethod
    def _raw(cls, num, den, gens):
        obj = object.__new__(cls)
        obj.num, obj.den, obj.gens, obj._hash = num, den, gens, None
        return obj

    @classmethod
    def fraction(cls, num: LaurentScalar, den: LaurentScalar, gens=PQ) -> "Scalar":
        return cls._raw(*_reduce(num, den), gens)

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational, GaussianRational)):
            return cls(value)
        raise TypeError(f"cannot coerce {value!r} to Scalar")

    # -- named constructors ----------------------------------------------
    @classmethod
    def monomial(cls, p_exp=0, q_exp=0, coeff=1, gens=PQ) -> "Scalar":
        """``coeff * p^p_exp * q^q_exp``; exponents may be half-integers."""
        a, b = Fraction(p_exp) * 2, Fraction(q_exp) * 2
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError("exponents must be integers or half-integers")
        return cls._raw(LaurentScalar.monomial(int(a), int(b), coeff), _ONE_L, gens)

    @classmethod
    def p(cls, exp=1) -> "Scalar":
        return cls.monomial(p_exp=exp)

    @classmethod
    def q(cls, exp=1) -> "Scalar":
        return cls.monomial(q_exp=exp)

    @classmethod
    def t(cls, exp=1) -> "Scalar":
        return cls.monomial(p_exp=exp, gens=T)

    @classmethod
    def i(cls) -> "Scalar":
        return cls(GaussianRational(0, 1))

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        """True when the denominator is 1 (a Laurent polynomial)."""
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def is_monomial(self) -> bool:
        return self.den.is_one() and self.num.is_monomial()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_term()

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.num != other.num or self.den != other.den:
            return False
        return self.gens == other.gens or self.is_constant()

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.num.constant_term())
            else:
                self._hash = hash((self.num, self.den, self.gens))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def _gens_with(self, other: "Scalar"):
        if self.gens == other.gens:
            return self.gens
        if other.is_constant():
            return self.gens
        if self.is_constant():
            return other.gens
        raise TypeError(f"cannot combine scalars in {self.gens} and {other.gens}")

    def __add__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        gens = self._gens_with(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other if other.gens == gens else Scalar._raw(other.num, other.den, gens)
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num + other.num, _ONE_L, gens)
        if self.den == other.den:
            return Scalar._raw(*_reduce(self.num + other.num, self.den), gens)
        num = self.num * other.den + other.num * self.den
        return Scalar._raw(*_reduce(num, self.den * other.den), gens)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den, self.gens)

    def __sub__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        gens = self._gens_with(other)
        if not self.num.terms or not other.num.terms:
            return Scalar._raw(LaurentScalar(), _ONE_L, gens)
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num * other.num, _ONE_L, gens)
        # cross-cancel before multiplying
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        num, den = n1 * n2, d1 * d2
        return Scalar._raw(*_normalise_den(num, den), gens)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num.terms:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar._raw(*_normalise_den(self.den, self.num), self.gens)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n):
        if isinstance(n, Fraction) and n.denominator == 2:
            return self.sqrt() ** int(n.numerator)
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        return Scalar._raw(self.num ** n, self.den ** n, self.gens)

    def sqrt(self) -> "Scalar":
        """Formal square root of a monomial with coefficient 1 (e.g. ``p``)."""
        if not self.is_monomial():
            raise ValueError(f"square root only defined for monomials, got {self}")
        ((k, c),) = self.num.terms.items()
        if c != ONE or k[0] % 2 or k[1] % 2:
            raise ValueError(f"no formal square root of {self}")
        return Scalar._raw(LaurentScalar.monomial(k[0] // 2, k[1] // 2), _ONE_L, self.gens)

    # -- display ----------------------------------------------------------
    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        num = format_laurent(self.num, self.gens)
        if self.den.is_one():
            return num
        den = format_laurent(self.den, self.gens)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1 or not self.den.is_monomial():
            den = f"({den})"
        return f"{num}/{den}"

    def is_atomic(self) -> bool:
        """True when ``str(self)`` can be used as a factor without parentheses."""
        if not self.den.is_one() or len(self.num.terms) > 1:
            return False
        if not self.num.terms:
            return True
        ((_, c),) = self.num.terms.items()
        return c.is_atomic()


def _cancel(num: LaurentScalar, den: LaurentScalar):
    if den.is_one() or den.is_monomial() or num.is_monomial():
        return num, den
    g = laurent_gcd(num, den)
    if g.is_one():
        return num, den
    return exact_divide(num, g), exact_divide(den, g)


def _normalise_den(num: LaurentScalar, den: LaurentScalar):
    """Move the Laurent unit of ``den`` into ``num`` and make ``den`` lex-monic."""
    if not den.terms:
        raise ZeroDivisionError("Scalar division by zero")
    if not num.terms:
        return num, _ONE_L
    if den.is_monomial():
        return try_divide(num, den), _ONE_L
    a0, b0 = den.min_exponents()
    if a0 or b0:
        den = den.shift(-a0, -b0)
        num = num.shift(-a0, -b0)
    _, lc = den.leading()
    if lc != ONE:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def _reduce(num: LaurentScalar, den: LaurentScalar):
    if not den.terms:
        raise ZeroDivisionError("Scalar division by zero")
    if not num.terms:
        return num, _ONE_L
    if den.is_monomial():
        return try_divide(num, den), _ONE_L
    exact = try_divide(num, den)
    if exact is not None:
        return exact, _ONE_L
    return _normalise_den(*_cancel(num, den))


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def _format_exp(doubled: int) -> str:
    if doubled % 2 == 0:
        e = doubled // 2
        return "" if e == 1 else f"^{e}"
    return f"^({doubled}/2)"


def format_monomial(key, gens=PQ) -> str:
    parts = []
    for name, e in zip(gens, key):
        if e:
            parts.append(f"{name}{_format_exp(e)}")
    return "*".join(parts)


def _term_order(key):
    # descending total degree, then descending p-exponent
    return (-(key[0] + key[1]), -key[0])


def format_laurent(f: LaurentScalar, gens=PQ) -> str:
    if not f.terms:
        return "0"
    out = []
    for key in sorted(f.terms, key=_term_order):
        c = f.terms[key]
        mono = format_monomial(key, gens)
        negative = c.is_real() and c.re < 0 or (not c.re and c.im < 0)
        mag = -c if negative else c
        if not mono:
            body = str(mag)
        elif mag == ONE:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# (p,q)-numbers
# ---------------------------------------------------------------------------

def pq_number(n: int, p=None, q=None):
    """``[n] = (q^n - p^-n) / (q - p^-1)`` in the ring containing ``p, q``.

    With no parameters the generic value is returned as a reduced Scalar
    (always a Laurent polynomial).  Explicit parameters may be Scalars,
    residues or numbers; the polynomial form ``sum q^i p^(i+1-n)`` and
    ``[-n] = -(p/q)^n [n]`` are used so that ``q = p^-1`` is allowed.
    """
    if p is None and q is None:
        return _generic_pq_number(int(n))
    n = int(n)
    m = abs(n)
    total = p ** 0 - p ** 0
    for i in range(m):
        total = total + q ** i * p ** (i + 1 - m)
    if n < 0:
        total = -(p ** m) * q ** (-m) * total
    return total


@lru_cache(maxsize=None)
def _generic_pq_number(n: int) -> Scalar:
    p, q = Scalar.p(), Scalar.q()
    return (q ** n - p ** (-n)) / (q - p ** -1)


def pq_factorial(n: int, p=None, q=None):
    """``[1][2]...[n]``; the empty product is 1."""
    if n < 0:
        raise ValueError("pq_factorial needs n >= 0")
    result = Scalar(1) if p is None else p ** 0
    for k in range(1, n + 1):
        result = result * pq_number(k, p, q)
    return result
