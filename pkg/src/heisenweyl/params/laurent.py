"""Sparse Laurent polynomials in ``p^(1/2)`` and ``q^(1/2)`` over Q(i).

Exponent keys are pairs of *doubled* integers, so ``(1, 0)`` is ``p^(1/2)``
and ``(2, -2)`` is ``p*q^-1``.  The same class carries one-variable values
(for instance rational functions in ``t``); those simply never use the second
slot.

The gcd treats the doubled exponents as honest polynomial variables
``P = p^(1/2)``, ``Q = q^(1/2)``: Laurent units are cleared first, then a
primitive subresultant-style remainder sequence runs with ``P`` as the main
variable over Q(i)[Q].
"""

from __future__ import annotations

from .gaussian import ONE, ZERO, GaussianRational

Key = tuple


class LaurentScalar:
    """Finite sum ``sum c[a, b] * P^a * Q^b`` with ``P^2 = p``, ``Q^2 = q``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        # callers inside this module hand over fresh, zero-free dicts
        self.terms = {} if terms is None else terms
        self._hash = None

    @classmethod
    def from_dict(cls, terms) -> "LaurentScalar":
        clean = {}
        for key, c in terms.items():
            c = GaussianRational.coerce(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        return cls(clean)

    @classmethod
    def constant(cls, c) -> "LaurentScalar":
        c = GaussianRational.coerce(c)
        return cls({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int, b: int, c=ONE) -> "LaurentScalar":
        c = GaussianRational.coerce(c)
        return cls({(a, b): c} if c else {})

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0, 0)) == ONE

    def __eq__(self, other):
        if isinstance(other, LaurentScalar):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            if v is None:
                out[key] = c
            else:
                v = v + c
                if v:
                    out[key] = v
                else:
                    del out[key]
        return LaurentScalar(out)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentScalar()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((kb, cb),) = b.items()
            if kb == (0, 0):
                if cb == ONE:
                    return self if a is self.terms else other
                return LaurentScalar({k: c * cb for k, c in a.items()})
            e0, e1 = kb
            return LaurentScalar({(k[0] + e0, k[1] + e1): c * cb for k, c in a.items()})
        out = {}
        get = out.get
        for (a0, a1), ca in a.items():
            for (b0, b1), cb in b.items():
                key = (a0 + b0, a1 + b1)
                v = get(key)
                out[key] = ca * cb if v is None else v + ca * cb
        return LaurentScalar({k: c for k, c in out.items() if c})

    def scale(self, c) -> "LaurentScalar":
        c = GaussianRational.coerce(c)
        if not c:
            return LaurentScalar()
        return LaurentScalar({k: v * c for k, v in self.terms.items()})

    def shift(self, a: int, b: int) -> "LaurentScalar":
        """Multiply by the unit monomial ``P^a Q^b``."""
        if not a and not b:
            return self
        return LaurentScalar({(k[0] + a, k[1] + b): c for k, c in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentScalar":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            ((k, c),) = self.terms.items()
            return LaurentScalar({(k[0] * n, k[1] * n): c ** n})
        if self.is_monomial():
            ((k, c),) = self.terms.items()
            return LaurentScalar({(k[0] * n, k[1] * n): c ** n})
        result = LaurentScalar.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure --------------------------------------------------------
    def min_exponents(self) -> tuple:
        keys = self.terms.keys()
        return min(k[0] for k in keys), min(k[1] for k in keys)

    def leading(self) -> tuple:
        """(key, coefficient) of the lex-largest monomial."""
        key = max(self.terms)
        return key, self.terms[key]

    def trailing_key(self) -> tuple:
        return min(self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0, 0), ZERO)

    def __repr__(self):
        return f"LaurentScalar({self.terms!r})"


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------

def try_divide(num: LaurentScalar, den: LaurentScalar):
    """Return ``num / den`` if it is a Laurent polynomial, else ``None``."""
    if not den.terms:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not num.terms:
        return LaurentScalar()
    if den.is_monomial():
        ((dk, dc),) = den.terms.items()
        inv = dc.inverse()
        return LaurentScalar({(k[0] - dk[0], k[1] - dk[1]): c * inv for k, c in num.terms.items()})
    dlead, dc = den.leading()
    dinv = dc.inverse()
    # exponent ranges add under multiplication, so the quotient lives in a box
    nlo, dlo = num.min_exponents(), den.min_exponents()
    nhi, dhi = _max_exponents(num), _max_exponents(den)
    lo0, lo1 = nlo[0] - dlo[0], nlo[1] - dlo[1]
    hi0, hi1 = nhi[0] - dhi[0], nhi[1] - dhi[1]
    rem = dict(num.terms)
    quot = {}
    dterms = list(den.terms.items())
    while rem:
        rk = max(rem)
        qk = (rk[0] - dlead[0], rk[1] - dlead[1])
        if not (lo0 <= qk[0] <= hi0 and lo1 <= qk[1] <= hi1):
            return None
        qc = rem[rk] * dinv
        quot[qk] = qc
        for (a, b), c in dterms:
            key = (a + qk[0], b + qk[1])
            v = rem.get(key)
            if v is None:
                rem[key] = -(c * qc)
            else:
                v = v - c * qc
                if v:
                    rem[key] = v
                else:
                    del rem[key]
    return LaurentScalar(quot)


def _max_exponents(f):
    keys = f.terms.keys()
    return max(k[0] for k in keys), max(k[1] for k in keys)


def exact_divide(num: LaurentScalar, den: LaurentScalar) -> LaurentScalar:
    result = try_divide(num, den)
    if result is None:
        raise ArithmeticError("Laurent division is not exact")
    return result


# ---------------------------------------------------------------------------
# univariate dense polynomials over Q(i): index = degree
# ---------------------------------------------------------------------------

def _utrim(f):
    while f and not f[-1]:
        f.pop()
    return f


def _uadd(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else ZERO) + (g[i] if i < len(g) else ZERO) for i in range(n)]
    return _utrim(out)


def _usub(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else ZERO) - (g[i] if i < len(g) else ZERO) for i in range(n)]
    return _utrim(out)


def _umul(f, g):
    if not f or not g:
        return []
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = out[i + j] + a * b
    return _utrim(out)


def _uscale(f, c):
    return _utrim([a * c for a in f])


def _udivmod(f, g):
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    f = list(f)
    inv = g[-1].inverse()
    dg = len(g) - 1
    quot = [ZERO] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = f[-1] * inv
        quot[shift] = c
        for i, b in enumerate(g):
            f[i + shift] = f[i + shift] - c * b
        f.pop()
        _utrim(f)
    return _utrim(quot), f


def _umonic(f):
    if not f:
        return f
    inv = f[-1].inverse()
    return [a * inv for a in f]


def ugcd(f, g):
    """Monic gcd of two univariate polynomials over Q(i)."""
    f, g = _utrim(list(f)), _utrim(list(g))
    while g:
        f, g = g, _udivmod(f, g)[1]
    return _umonic(f)


# ---------------------------------------------------------------------------
# bivariate polynomials: {deg_P: dense poly in Q}
# ---------------------------------------------------------------------------

def _to_bivariate(f: LaurentScalar):
    """Clear the Laurent unit; return (bivariate dict, (shift_P, shift_Q))."""
    a0, b0 = f.min_exponents()
    out = {}
    for (a, b), c in f.terms.items():
        row = out.setdefault(a - a0, [])
        k = b - b0
        if len(row) <= k:
            row.extend([ZERO] * (k + 1 - len(row)))
        row[k] = c
    return out, (a0, b0)


def _from_bivariate(F) -> LaurentScalar:
    terms = {}
    for a, row in F.items():
        for b, c in enumerate(row):
            if c:
                terms[(a, b)] = c
    return LaurentScalar(terms)


def _bdeg(F):
    return max(F) if F else -1


def _bcontent(F):
    g = []
    for row in F.values():
        g = ugcd(g, row)
        if len(g) == 1:
            break
    return g


def _bdiv_content(F, c):
    if len(c) == 1:
        inv = c[0].inverse()
        return {a: _uscale(row, inv) for a, row in F.items()}
    out = {}
    for a, row in F.items():
        q, r = _udivmod(row, c)
        assert not r
        out[a] = q
    return out


def _bprem(F, G):
    """Pseudo-remainder of F by G with respect to P."""
    dg = _bdeg(G)
    lc = G[dg]
    R = {a: list(row) for a, row in F.items()}
    while R and _bdeg(R) >= dg:
        dr = _bdeg(R)
        lr = R[dr]
        shift = dr - dg
        new = {}
        for a, row in R.items():
            new[a] = _umul(row, lc)
        for a, row in G.items():
            key = a + shift
            new[key] = _usub(new.get(key, []), _umul(row, lr))
        R = {a: row for a, row in new.items() if row}
    return R


def laurent_gcd(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    """A gcd of two Laurent polynomials, defined up to a unit monomial.

    The result is normalised to have no negative exponents, minimal
    exponents zero in each variable, and lex-leading coefficient 1.
    """
    if not a.terms and not b.terms:
        raise ValueError("gcd(0, 0) is undefined")
    if not a.terms:
        return _normalise_gcd(b)
    if not b.terms:
        return _normalise_gcd(a)
    if a.is_monomial() or b.is_monomial():
        return LaurentScalar.constant(1)
    F, _ = _to_bivariate(a)
    G, _ = _to_bivariate(b)
    if _bdeg(F) < _bdeg(G):
        F, G = G, F
    cf, cg = _bcontent(F), _bcontent(G)
    c = ugcd(cf, cg)
    F = _bdiv_content(F, cf)
    G = _bdiv_content(G, cg)
    while True:
        if _bdeg(G) == 0:
            G = {0: [ONE]}
            break
        R = _bprem(F, G)
        if not R:
            break
        F, G = G, _bdiv_content(R, _bcontent(R))
    G = {a: _umul(row, c) for a, row in G.items()}
    return _normalise_gcd(_from_bivariate(G))


def _normalise_gcd(f: LaurentScalar) -> LaurentScalar:
    a0, b0 = f.min_exponents()
    f = f.shift(-a0, -b0)
    _, lc = f.leading()
    return f.scale(lc.inverse()) if lc != ONE else f
