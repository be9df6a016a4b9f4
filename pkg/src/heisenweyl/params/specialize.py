"""Specialisation homomorphisms out of Q(i)(p^(1/2), q^(1/2)).

Three targets are supported:

* :class:`OneParam` -- ``p -> t^r``, ``q -> t^s`` with ``gcd(r, s) = 1``; the
  image is again a :class:`Scalar`, now in the single variable ``t``.  This is
  the exact model of the dependent case ``q^r = p^s``.
* :class:`Numeric` -- complex doubles.
* :class:`Quotient` -- the residue ring Q(i)[u]/(m(u)) for a monic ``m``;
  with ``m`` cyclotomic this realises roots of unity exactly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from math import gcd

from .gaussian import ONE, ZERO, GaussianRational
from .laurent import LaurentScalar, _udivmod, _umul, _usub, _utrim
from .scalar import PQ, T, Scalar, format_laurent


class SpecializationError(ArithmeticError):
    """A denominator maps to zero (or a non-unit) under a specialisation."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


# ---------------------------------------------------------------------------
# residue ring Q(i)[u]/(m)
# ---------------------------------------------------------------------------

class Residue:
    """Element of Q(i)[u]/(modulus); ``coeffs[k]`` multiplies ``u^k``."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus):
        c = [GaussianRational.coerce(a) for a in coeffs]
        if len(c) >= len(modulus):
            c = _udivmod(_utrim(c), modulus)[1]
        self.coeffs = tuple(_utrim(list(c)))
        self.modulus = modulus

    def _lift(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues modulo different polynomials")
            return other
        return Residue([GaussianRational.coerce(other)], self.modulus)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (n - len(other.coeffs))
        return Residue([x + y for x, y in zip(a, b)], self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return Residue([-a for a in self.coeffs], self.modulus)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational) or isinstance(other, int):
            return Residue([a * other for a in self.coeffs], self.modulus)
        other = self._lift(other)
        return Residue(_umul(list(self.coeffs), list(other.coeffs)), self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        """Inverse by the extended Euclidean algorithm; fails on non-units."""
        r0, r1 = list(self.modulus), list(self.coeffs)
        s0, s1 = [], [ONE]
        while r1:
            quot, rem = _udivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _usub(s0, _umul(quot, s1))
        if len(r0) != 1:
            raise SpecializationError(f"{self} is not invertible modulo {_fmt_u(self.modulus)}")
        inv = r0[0].inverse()
        return Residue([a * inv for a in s0], self.modulus)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Residue([ONE], self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self):
        return _fmt_u(self.coeffs)

    __repr__ = __str__


def _fmt_u(coeffs) -> str:
    f = LaurentScalar({(2 * k, 0): c for k, c in enumerate(coeffs) if c})
    return format_laurent(f, ("u",))


def cyclotomic(n: int) -> list:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [GaussianRational(-1)] + [ZERO] * (n - 1) + [ONE]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _udivmod(poly, cyclotomic(d))
            assert not rem
    return poly


# ---------------------------------------------------------------------------
# specialisation kinds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OneParam:
    """``p -> t^r``, ``q -> t^s``; realises ``q^r = p^s``."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError("OneParam needs positive r, s")
        if gcd(self.r, self.s) != 1:
            raise ValueError(f"OneParam needs gcd(r, s) = 1, got ({self.r}, {self.s})")

    @property
    def p(self) -> Scalar:
        return Scalar.t(self.r)

    @property
    def q(self) -> Scalar:
        return Scalar.t(self.s)

    def _laurent(self, f: LaurentScalar) -> LaurentScalar:
        out = {}
        for (a, b), c in f.terms.items():
            key = (self.r * a + self.s * b, 0)
            v = out.get(key)
            out[key] = c if v is None else v + c
        return LaurentScalar({k: c for k, c in out.items() if c})

    def __call__(self, s: Scalar) -> Scalar:
        s = Scalar.coerce(s)
        if s.gens != PQ and not s.is_constant():
            raise SpecializationError(f"OneParam expects a (p,q)-scalar, got {s}")
        num, den = self._laurent(s.num), self._laurent(s.den)
        if not den:
            raise SpecializationError(
                f"denominator {format_laurent(s.den)} vanishes at p=t^{self.r}, q=t^{self.s}",
                factor=format_laurent(s.den),
            )
        return Scalar.fraction(num, den, T)

    def __str__(self):
        return f"oneparam:{self.r},{self.s}"


@dataclass(frozen=True)
class Numeric:
    """Evaluation at complex doubles; square roots use the principal branch."""

    p: complex
    q: complex

    def __post_init__(self):
        if self.p == 0 or self.q == 0:
            raise ValueError("numeric parameters must be nonzero")

    def _eval(self, f: LaurentScalar) -> complex:
        sp, sq = cmath.sqrt(self.p), cmath.sqrt(self.q)
        total = 0j
        for (a, b), c in f.terms.items():
            total += complex(c) * sp ** a * sq ** b
        return total

    def __call__(self, s: Scalar) -> complex:
        s = Scalar.coerce(s)
        den = self._eval(s.den)
        if den == 0:
            raise SpecializationError(
                f"denominator {format_laurent(s.den)} vanishes at p={self.p}, q={self.q}",
                factor=format_laurent(s.den),
            )
        return self._eval(s.num) / den

    def __str__(self):
        return f"numeric:{self.p},{self.q}"


@dataclass(frozen=True)
class Quotient:
    """``p, q`` sent to residues modulo a monic ``modulus`` over Q(i).

    ``p_half``/``q_half`` are optional square roots used for half-integer
    exponents.
    """

    modulus: tuple
    p_image: Residue
    q_image: Residue
    p_half: Residue | None = None
    q_half: Residue | None = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        m = self.modulus
        if len(m) < 2 or m[-1] != ONE:
            raise ValueError("Quotient modulus must be monic and nonconstant")
        for name, img in (("p", self.p_image), ("q", self.q_image)):
            img.inverse()  # raises if not a unit
        for half, full in ((self.p_half, self.p_image), (self.q_half, self.q_image)):
            if half is not None and half * half != full:
                raise ValueError("square-root image does not square to the image")

    @classmethod
    def cyclotomic(cls, n: int, ep: int, eq: int) -> "Quotient":
        """``p = u^ep``, ``q = u^eq`` modulo the n-th cyclotomic polynomial."""
        m = tuple(cyclotomic(n))
        u = Residue([ZERO, ONE], m)

        def half(e):
            # u^n = 1, so u^((e + n)/2) also squares to u^e
            for cand in (e, e + n):
                if cand % 2 == 0:
                    return u ** (cand // 2)
            return None

        return cls(m, u ** ep, u ** eq, half(ep), half(eq), label=f"cyclotomic:{n}:{ep},{eq}")

    def _eval(self, f: LaurentScalar) -> Residue:
        total = Residue([], self.modulus)
        for (a, b), c in f.terms.items():
            term = Residue([c], self.modulus)
            for img, half, e, name in (
                (self.p_image, self.p_half, a, "p"),
                (self.q_image, self.q_half, b, "q"),
            ):
                if e % 2 == 0:
                    term = term * img ** (e // 2)
                elif half is None:
                    raise SpecializationError(f"no square root of {name} available in the quotient")
                else:
                    term = term * half ** e
            total = total + term
        return total

    def __call__(self, s: Scalar) -> Residue:
        s = Scalar.coerce(s)
        den = self._eval(s.den)
        try:
            inv = den.inverse()
        except SpecializationError:
            raise SpecializationError(
                f"denominator {format_laurent(s.den)} is not a unit in the quotient",
                factor=format_laurent(s.den),
            ) from None
        return self._eval(s.num) * inv

    def __str__(self):
        return self.label or f"quotient mod {_fmt_u(self.modulus)}"


Specialization = OneParam | Numeric | Quotient


def specialize(s, spec):
    """Apply a specialisation homomorphism to a Scalar."""
    return spec(Scalar.coerce(s))
