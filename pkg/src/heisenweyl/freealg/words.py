"""Words and linear combinations of words in a free algebra over Scalar."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from ..params import Scalar


class Letter(NamedTuple):
    name: str
    inverse: bool = False

    def __str__(self):
        return f"{self.name}^-1" if self.inverse else self.name


Word = tuple  # tuple[Letter, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names; earlier names are smaller in the word order."""

    names: tuple
    invertible: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "invertible", frozenset(self.invertible))
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        if not self.invertible <= set(self.names):
            raise ValueError("invertible generators must be declared names")

    def __contains__(self, name):
        return name in self.names

    def rank(self, letter: Letter) -> int:
        # x^-1 sorts just above x
        return 2 * self.names.index(letter.name) + int(letter.inverse)

    def word_key(self, word) -> tuple:
        """Degree-lex key: longer words are larger, ties broken lexicographically."""
        return (len(word), tuple(self.rank(a) for a in word))


def reduce_word(word) -> tuple:
    """Cancel adjacent ``a a^-1`` and ``a^-1 a`` pairs."""
    out = []
    for a in word:
        if out and out[-1].name == a.name and out[-1].inverse != a.inverse:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def format_word(word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = (j - i) * (-1 if word[i].inverse else 1)
        name = word[i].name
        parts.append(name if n == 1 else f"{name}^{n}")
        i = j
    return "*".join(parts)


def format_terms(items) -> str:
    """Render ``[(coefficient, monomial string)]`` as ``c1*m1 + c2*m2``.

    Monomial strings equal to ``"1"`` print as bare coefficients.
    """
    out = []
    for coeff, mono in items:
        s = str(coeff)
        negative = s.startswith("-") and coeff.is_atomic()
        if negative:
            s = s[1:]
        if mono == "1":
            body = s if coeff.is_atomic() or not out else f"({s})"
        elif s == "1":
            body = mono
        elif coeff.is_atomic():
            body = f"{s}*{mono}"
        else:
            body = f"({s})*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out) if out else "0"


class FreeElement:
    """Finite linear combination of words with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    w = reduce_word(tuple(w))
                    v = self.terms.get(w)
                    v = c if v is None else v + c
                    if v:
                        self.terms[w] = v
                    else:
                        self.terms.pop(w, None)

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, c) -> "FreeElement":
        return cls({(): c})

    @classmethod
    def letter(cls, name, inverse=False) -> "FreeElement":
        return cls._raw({(Letter(name, inverse),): Scalar(1)})

    @classmethod
    def coerce(cls, value) -> "FreeElement":
        if isinstance(value, FreeElement):
            return value
        return cls.scalar(value)

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def scalar_value(self) -> Scalar:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.terms.get((), Scalar(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = FreeElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = FreeElement.coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            v = c if v is None else v + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-FreeElement.coerce(other))

    def __rsub__(self, other):
        return FreeElement.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            c = Scalar.coerce(other)
            if not c:
                return FreeElement()
            return FreeElement._raw({w: v * c for w, v in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = reduce_word(w1 + w2)
                v = out.get(w)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return FreeElement._raw(out)

    def __rmul__(self, other):
        c = Scalar.coerce(other)
        if not c:
            return FreeElement()
        return FreeElement._raw({w: c * v for w, v in self.terms.items()})

    def inverse(self) -> "FreeElement":
        if self.is_scalar():
            return FreeElement.scalar(self.scalar_value().inverse())
        if len(self.terms) == 1:
            ((w, c),) = self.terms.items()
            inv_word = tuple(Letter(a.name, not a.inverse) for a in reversed(w))
            return FreeElement._raw({inv_word: c.inverse()})
        raise ValueError(f"cannot invert {self}")

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = FreeElement.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self, alphabet: Alphabet | None = None):
        if alphabet is None:
            key = lambda w: (len(w), tuple(str(a) for a in w))  # noqa: E731
        else:
            key = alphabet.word_key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def format(self, alphabet: Alphabet | None = None) -> str:
        return format_terms((c, format_word(w)) for w, c in self.sorted_terms(alphabet))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FreeElement({self.format()!r})"
