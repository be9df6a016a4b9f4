"""Representations: the Fock module of A_p^n(r, s), truncated (p,q)-oscillator
matrices, and the module with basis v_k (k in Z) over the subring generated by
x^(+-1) and z^-1 y.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import mpmath
import numpy as np

from .freealg import Alphabet, FreeElement, Letter
from .gwa import tensor_relations
from .params import OneParam, Scalar, pq_factorial, pq_number
from .report import run_check


def _acc(d, key, c):
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class _Vector:
    """Finite sparse vector with Scalar coordinates."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for key, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if c:
                _acc(out, self._key(key), c)
        self.terms = out

    @staticmethod
    def _key(key):
        return key

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return self._raw(out)

    def __neg__(self):
        return self._raw({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Scalar.coerce(c)
        return self._raw({key: v * c for key, v in self.terms.items()} if c else {})

    __rmul__ = __mul__

    def coefficient(self, key) -> Scalar:
        return self.terms.get(self._key(key), Scalar(0))


# ---------------------------------------------------------------------------
# Fock representation of A_p^n(r, s) on k[xi_1, ..., xi_n]
# ---------------------------------------------------------------------------

class FockVector(_Vector):
    """Polynomial in ``xi_1, ..., xi_n``; keys are exponent tuples."""

    __slots__ = ()

    @staticmethod
    def _key(key):
        return tuple(int(m) for m in key)

    @classmethod
    def monomial(cls, m, coeff=1):
        return cls({tuple(m): coeff})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"xi{i + 1}" if e == 1 else f"xi{i + 1}^{e}" for i, e in enumerate(m) if e
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class FockConfig:
    n: int
    r: int
    s: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        OneParam(self.r, self.s)  # validates r, s


class FockAction:
    """Action of the generators of ``A_p^n(r, s)`` on monomials ``xi^m``.

    ``z_sign=-1`` deliberately breaks the action (``z_i`` acts by ``p^(+m_i)``),
    for use as a sentinel in tests.
    """

    def __init__(self, cfg: FockConfig, z_sign: int = 1):
        self.cfg = cfg
        spec = OneParam(cfg.r, cfg.s)
        self.p, self.q = spec.p, spec.q
        self.z_sign = z_sign
        self._numbers = {}

    def number(self, m):
        v = self._numbers.get(m)
        if v is None:
            v = self._numbers[m] = pq_number(m, self.p, self.q)
        return v

    def letter(self, letter: Letter, m: tuple):
        """Image of ``xi^m`` under one generator, as ``(coeff, new m)`` or None."""
        name, inv = letter.name, letter.inverse
        kind, i = name[0], int(name[1:]) - 1
        if not 0 <= i < self.cfg.n:
            raise IndexError(f"generator {name} out of range for n={self.cfg.n}")
        mi = m[i]
        if inv and kind in "xy":
            raise ValueError(f"{name} is not invertible")
        if kind == "x":
            return Scalar(1), m[:i] + (mi + 1,) + m[i + 1:]
        if kind == "y":
            if mi == 0:
                return None
            return self.number(mi), m[:i] + (mi - 1,) + m[i + 1:]
        sign = -1 if inv else 1
        if kind == "z":
            return self.p ** (-sign * mi * self.z_sign), m
        if kind == "w":
            return self.q ** (-sign * mi), m
        raise ValueError(f"unknown generator {name}")

    def apply_word(self, word, v: FockVector) -> FockVector:
        terms = v.terms
        for letter in reversed(word):
            out = {}
            for m, c in terms.items():
                img = self.letter(letter, m)
                if img is not None:
                    _acc(out, img[1], c * img[0])
            terms = out
        return FockVector._raw(terms)

    def apply(self, op: FreeElement, v: FockVector) -> FockVector:
        out = FockVector()
        for word, c in op.terms.items():
            out = out + self.apply_word(word, v) * c
        return out


def fock_apply(op: FreeElement, v: FockVector, cfg) -> FockVector:
    cfg = cfg if isinstance(cfg, FockConfig) else FockConfig(*cfg)
    return FockAction(cfg).apply(op, v)


def monomials_up_to(n: int, degree: int):
    """All ``m`` in N^n with ``|m| <= degree``."""
    if n == 0:
        yield ()
        return
    for first in range(degree + 1):
        for rest in monomials_up_to(n - 1, degree - first):
            yield (first,) + rest


def verify_fock_relations(n, r, s, degree: int, cross: str | None = "corrected", z_sign: int = 1) -> list:
    """Each displayed relation applied to every monomial of degree ``<= degree``."""
    cfg = FockConfig(n, r, s)
    action = FockAction(cfg, z_sign)
    mons = list(monomials_up_to(n, degree))
    entries = []
    for name, rel in tensor_relations(n, r, s, cross).items():
        def check(rel=rel):
            for m in mons:
                out = action.apply(rel, FockVector.monomial(m))
                if out:
                    return False, f"on xi^{m}: {out}"
            return True, None

        entries.append(run_check("fock", name, "Fock action", {"n": n, "r": r, "s": s, "D": degree}, check))
    return entries


def fock_descent(m, cfg) -> Scalar:
    """Constant coefficient of ``y_1^m_1 ... y_n^m_n . xi^m``."""
    cfg = cfg if isinstance(cfg, FockConfig) else FockConfig(*cfg)
    m = tuple(m)
    if len(m) != cfg.n:
        raise ValueError("exponent vector has the wrong length")
    word = []
    for i, e in enumerate(m):
        word += [Letter(f"y{i + 1}")] * e
    out = FockAction(cfg).apply_word(tuple(word), FockVector.monomial(m))
    return out.coefficient((0,) * cfg.n)


def fock_descent_expected(m, cfg) -> Scalar:
    cfg = cfg if isinstance(cfg, FockConfig) else FockConfig(*cfg)
    spec = OneParam(cfg.r, cfg.s)
    out = Scalar.t(0)
    for e in m:
        out = out * pq_factorial(e, spec.p, spec.q)
    return out


# ---------------------------------------------------------------------------
# truncated (p,q)-oscillator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OscillatorMatrices:
    N: int
    p: object
    q: object
    a: np.ndarray
    a_plus: np.ndarray
    number: np.ndarray
    p_powN: np.ndarray
    q_powN: np.ndarray


@lru_cache(maxsize=None)
def _context(dps: int):
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def build_oscillator(N: int, p, q, dps: int | None = None) -> OscillatorMatrices:
    """``a e_k = sqrt([k]) e_(k-1)``, ``a+ e_k = sqrt([k+1]) e_(k+1)`` on ``k < N``.

    With ``dps`` the entries are mpmath floats carrying that many decimal
    digits (object arrays); otherwise float64.
    """
    if N < 3:
        raise ValueError("N must be at least 3")
    if dps is None:
        p, q = float(p), float(q)
        zero, sqrt, conv = 0.0, np.sqrt, float
    else:
        ctx = _context(dps)
        p, q = ctx.mpf(p), ctx.mpf(q)
        zero, sqrt, conv = ctx.zero, ctx.sqrt, ctx.mpf
    if p <= 0 or q <= 0:
        raise ValueError("p and q must be positive reals")

    def diag(values, offset=0):
        m = np.full((N, N), zero, dtype=object if dps else float)
        for i, v in enumerate(values):
            m[i - min(offset, 0), i + max(offset, 0)] = v
        return m

    root = [sqrt(pq_number(j, p, q)) for j in range(1, N)]
    return OscillatorMatrices(
        N, p, q,
        a=diag(root, 1),
        a_plus=diag(root, -1),
        number=diag([conv(k) for k in range(N)]),
        p_powN=diag([p ** (-k) for k in range(N)]),
        q_powN=diag([q ** k for k in range(N)]),
    )


class Residual(NamedTuple):
    relation: str
    absolute: float
    relative: float
    passed: bool


def _residual(name, terms, signs, cols, tol) -> Residual:
    """Largest entry of the combination on the given columns.

    ``passed`` compares the absolute value with ``tol``; ``relative`` divides
    by the largest entry among the terms (at least 1), which is the meaningful
    figure in float64 since ``[k]`` grows geometrically.
    """
    total = sum(s * t for s, t in zip(signs, terms))[:, cols]
    absolute = float(np.max(np.abs(total)))
    scale = max(1.0, max(float(np.max(np.abs(t[:, cols]))) for t in terms))
    return Residual(name, absolute, absolute / scale, absolute < tol)


def verify_oscillator(mats: OscillatorMatrices, tol: float = 1e-9) -> list:
    """The four oscillator relations on ``e_0 ... e_(N-2)``."""
    a, ap, Nm = mats.a, mats.a_plus, mats.number
    cols = slice(0, mats.N - 1)
    aap, apa = a @ ap, ap @ a
    return [
        _residual("a a+ - q a+ a - p^-N", [aap, apa, mats.p_powN], [1, -mats.q, -1], cols, tol),
        _residual("a a+ - p^-1 a+ a - q^N", [aap, apa, mats.q_powN], [1, -1 / mats.p, -1], cols, tol),
        _residual("N a+ - a+ N - a+", [Nm @ ap, ap @ Nm, ap], [1, -1, -1], cols, tol),
        _residual("N a - a N + a", [Nm @ a, a @ Nm, a], [1, -1, 1], cols, tol),
    ]


def verify_oscillator_power(N: int, tau: float, r: int, s: int, tol: float = 1e-8,
                            dps: int | None = None) -> list:
    """``(a a+ - p^-1 a+ a)^r = L^-s`` and the ``L`` commutations with ``p = tau^r``, ``q = tau^s``."""
    t = float(tau) if dps is None else _context(dps).mpf(tau)
    mats = build_oscillator(N, t ** r, t ** s, dps)
    a, ap, p = mats.a, mats.a_plus, mats.p
    L = mats.p_powN
    base = a @ ap - ap @ a / p
    power = base
    for _ in range(r - 1):
        power = power @ base
    L_inv_s = np.diag(np.diag(L) ** (-s))
    cols = slice(0, N - r)
    edge = slice(0, N - 1)
    return [
        _residual("(a a+ - p^-1 a+ a)^r - L^-s", [power, L_inv_s], [1, -1], cols, tol),
        _residual("a a+ - q a+ a - L", [a @ ap, ap @ a, L], [1, -mats.q, -1], edge, tol),
        _residual("L a+ - p^-1 a+ L", [L @ ap, ap @ L], [1, -1 / p], edge, tol),
        _residual("L a - p a L", [L @ a, a @ L], [1, -p], edge, tol),
    ]


# ---------------------------------------------------------------------------
# the module M with basis v_k, k in Z
# ---------------------------------------------------------------------------

BMODULE_ALPHABET = Alphabet(("x", "Y"), frozenset({"x"}))
"""``Y`` stands for ``z^-1 y``."""


class ZModuleVector(_Vector):
    __slots__ = ()

    @staticmethod
    def _key(key):
        return int(key)

    @classmethod
    def basis(cls, k, coeff=1):
        return cls({k: coeff})

    def support(self):
        return sorted(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*v[{k}]" for k, c in sorted(self.terms.items(), reverse=True))


class BModule:
    """``x^(+-1) v_k = v_(k+-1)`` and ``(z^-1 y) v_k = p^(k-1) [k] v_(k-1)``."""

    def __init__(self, p=None, q=None):
        self.p = Scalar.p() if p is None else Scalar.coerce(p)
        self.q = Scalar.q() if q is None else Scalar.coerce(q)
        self._coeff = {}

    def coefficient(self, k: int) -> Scalar:
        v = self._coeff.get(k)
        if v is None:
            if self.p == Scalar.p() and self.q == Scalar.q():
                num = pq_number(k)
            else:
                num = pq_number(k, self.p, self.q)
            v = self._coeff[k] = self.p ** (k - 1) * num
        return v

    def apply_letter(self, letter: Letter, v: ZModuleVector) -> ZModuleVector:
        out = {}
        if letter.name == "x":
            step = -1 if letter.inverse else 1
            for k, c in v.terms.items():
                out[k + step] = c
        elif letter.name == "Y" and not letter.inverse:
            for k, c in v.terms.items():
                ck = self.coefficient(k)
                if ck:
                    _acc(out, k - 1, c * ck)
        else:
            raise ValueError(f"unknown operator {letter}")
        return ZModuleVector._raw(out)

    def apply(self, op: FreeElement, v: ZModuleVector) -> ZModuleVector:
        out = ZModuleVector()
        for word, c in op.terms.items():
            w = v
            for letter in reversed(word):
                w = self.apply_letter(letter, w)
            out = out + w * c
        return out

    # L_n = z^-1 x^(n+1) y = p^(n+1) x^(n+1) (z^-1 y)
    def virasoro(self, n: int) -> FreeElement:
        x = FreeElement.letter("x")
        return (x ** (n + 1) * FreeElement.letter("Y")) * self.p ** (n + 1)

    def weyl_relation(self) -> FreeElement:
        x, Y = FreeElement.letter("x"), FreeElement.letter("Y")
        return Y * x - x * Y * (self.p * self.q) - 1


def bmodule_apply(op: FreeElement, v: ZModuleVector, module: BModule | None = None) -> ZModuleVector:
    return (module or BModule()).apply(op, v)


def verify_bmodule(K: int, module: BModule | None = None) -> list:
    """``(z^-1 y) x - pq x (z^-1 y) - 1`` kills ``v_k`` for ``|k| <= K``."""
    if K < 1:
        raise ValueError("K must be positive")
    module = module or BModule()
    rel = module.weyl_relation()
    entries = []
    for k in range(-K, K + 1):
        def check(k=k):
            out = module.apply(rel, ZModuleVector.basis(k))
            return not out, out

        entries.append(run_check("bmodule", "weyl relation", "action on v_k", {"k": k}, check))
    return entries


def bmodule_descent(v: ZModuleVector, module: BModule | None = None):
    """Reach a nonzero multiple of ``v_0``; returns ``(steps, coefficient)``.

    A shift by ``x^M`` (one step, when needed) moves the support into
    ``k >= 0``; each application of ``z^-1 y`` then lowers the top degree.
    """
    if not v:
        raise ValueError("descent needs a nonzero vector")
    module = module or BModule()
    steps = 0
    low = min(v.terms)
    if low < 0:
        v = module.apply(FreeElement.letter("x") ** (-low), v)
        steps += 1
    Y = Letter("Y")
    while max(v.terms) > 0:
        v = module.apply_letter(Y, v)
        steps += 1
        if not v:
            raise ArithmeticError("descent annihilated the vector")
    return steps, v.coefficient(0)


def virasoro_on_bmodule(n: int, v: ZModuleVector, module: BModule | None = None) -> ZModuleVector:
    module = module or BModule()
    return module.apply(module.virasoro(n), v)


def virasoro_action_residual(n: int, m: int, module: BModule | None = None) -> FreeElement:
    module = module or BModule()
    p, q = module.p, module.q
    Ln, Lm = module.virasoro(n), module.virasoro(m)
    if p == Scalar.p() and q == Scalar.q():
        num = pq_number(m - n)
    else:
        num = pq_number(m - n, p, q)
    return Ln * Lm * p ** (n - m) - Lm * Ln * q ** (m - n) - module.virasoro(m + n) * num


def verify_virasoro_action(n: int, m: int, K: int, module: BModule | None = None) -> bool:
    module = module or BModule()
    op = virasoro_action_residual(n, m, module)
    return all(not module.apply(op, ZModuleVector.basis(k)) for k in range(-K, K + 1))
