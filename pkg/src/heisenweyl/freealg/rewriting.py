"""Quadratic rewriting systems and overlap (diamond) checking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..params import Scalar
from .words import Alphabet, FreeElement, Letter, format_word


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple  # Word of length 2
    rhs: FreeElement

    def __str__(self):
        return f"{format_word(self.lhs)} -> {self.rhs}"


class RewriteSystem:
    """Rules ``ab -> rhs`` whose right-hand sides are smaller in degree-lex order."""

    def __init__(self, alphabet: Alphabet, rules):
        self.alphabet = alphabet
        self.rules = {}
        for rule in rules:
            lhs = tuple(rule.lhs)
            if len(lhs) != 2:
                raise ValueError(f"only length-2 left-hand sides are supported: {rule}")
            if lhs in self.rules:
                raise ValueError(f"duplicate left-hand side {format_word(lhs)}")
            for a in lhs:
                if a.name not in alphabet:
                    raise ValueError(f"letter {a} not in alphabet")
            key = alphabet.word_key(lhs)
            for w in rule.rhs.terms:
                if alphabet.word_key(w) >= key:
                    raise ValueError(
                        f"rule {rule} is not order-decreasing: {format_word(w)} >= {format_word(lhs)}"
                    )
            self.rules[lhs] = rule.rhs
        self._cache = {}

    def __iter__(self):
        return (RewriteRule(lhs, rhs) for lhs, rhs in self.rules.items())

    def _reduce_word(self, word) -> FreeElement:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        for i in range(len(word) - 1):
            rhs = self.rules.get(word[i : i + 2])
            if rhs is not None:
                prefix, suffix = word[:i], word[i + 2 :]
                out = FreeElement()
                for w, c in rhs.terms.items():
                    out = out + self._reduce_word(prefix + w + suffix) * c
                break
        else:
            out = FreeElement._raw({word: Scalar(1)})
        self._cache[word] = out
        return out

    def normalize(self, e: FreeElement) -> FreeElement:
        """Fully reduce ``e``, applying the leftmost matching rule first."""
        out = FreeElement()
        for w, c in e.terms.items():
            out = out + self._reduce_word(w) * c
        return out

    def is_normal(self, word) -> bool:
        return all(word[i : i + 2] not in self.rules for i in range(len(word) - 1))


def normalize(e: FreeElement, sys: RewriteSystem) -> FreeElement:
    return sys.normalize(e)


HPQ_ALPHABET = Alphabet(("x", "y", "z"))

X, Y, Z = (Letter(n) for n in "xyz")


def hpq_rules(p_prime=None, p=None, q=None) -> RewriteSystem:
    """``yx -> q xy + z``, ``zx -> p' xz``, ``zy -> p yz``.

    ``p_prime`` defaults to ``p^-1`` (the Heisenberg-type system).
    """
    p = Scalar.p() if p is None else Scalar.coerce(p)
    q = Scalar.q() if q is None else Scalar.coerce(q)
    p_prime = p.inverse() if p_prime is None else Scalar.coerce(p_prime)
    if not p_prime:
        raise ValueError("p' must be nonzero")
    one = Scalar(1)
    rules = [
        RewriteRule((Y, X), FreeElement._raw({(X, Y): q, (Z,): one})),
        RewriteRule((Z, X), FreeElement._raw({(X, Z): p_prime})),
        RewriteRule((Z, Y), FreeElement._raw({(Y, Z): p})),
    ]
    return RewriteSystem(HPQ_ALPHABET, rules)


class Overlap(NamedTuple):
    word: tuple
    left: FreeElement
    right: FreeElement
    difference: FreeElement

    def __str__(self):
        return f"{format_word(self.word)}: {self.left} vs {self.right} (difference {self.difference})"


def check_overlaps(sys: RewriteSystem, include_resolved=False) -> list:
    """Unresolved overlap ambiguities ``abc`` with ``ab`` and ``bc`` both rule heads."""
    found = []
    for (a, b), rhs1 in sys.rules.items():
        for (b2, c), rhs2 in sys.rules.items():
            if b2 != b:
                continue
            word = (a, b, c)
            left = sys.normalize(rhs1 * FreeElement.letter(c.name, c.inverse))
            right = sys.normalize(FreeElement.letter(a.name, a.inverse) * rhs2)
            diff = left - right
            if diff or include_resolved:
                found.append(Overlap(word, left, right, diff))
    return found
