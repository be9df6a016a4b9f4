"""Recursive-descent parser for noncommutative expressions over Scalar.

Grammar::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor (['*'|'/'] factor)*        # juxtaposition multiplies
    factor   := atom ('^' exponent)?
    atom     := INT | NAME | '(' expr ')' | '[' ['-'] INT ']' ['_{p,q}'] ['!']
    exponent := ['-'] INT | '(' ['-'] INT ['/' INT] ')'

Names resolve first to generators of the given alphabet, then to the scalar
symbols ``p q t i``; an unknown multi-letter name is split into single
letters when every letter resolves (so ``xy`` reads as ``x*y``).
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..params import Scalar, pq_factorial, pq_number
from .words import Alphabet, FreeElement

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<sub>_\{\s*p\s*,\s*q\s*\})
  | (?P<op>[-+*/^()\[\]!])
    """,
    re.VERBOSE,
)

_SCALARS = {
    "p": Scalar.p,
    "q": Scalar.q,
    "t": Scalar.t,
    "i": Scalar.i,
}

EMPTY = Alphabet(())


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGeneratorError(ParseError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, alphabet):
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    # -- token helpers ----------------------------------------------------
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value):
        kind, text, _ = self.peek()
        if kind == "op" and text == value:
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            _, text, pos = self.peek()
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    # -- grammar ------------------------------------------------------------
    def parse(self):
        result = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return result

    def expr(self):
        negate = False
        if self.accept("-"):
            negate = True
        else:
            self.accept("+")
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def _starts_factor(self):
        kind, text, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and text in "([")

    def term(self):
        result = self.factor()
        while True:
            if self.accept("*"):
                result = result * self.factor()
            elif self.accept("/"):
                pos = self.peek()[2]
                divisor = self.factor()
                if not divisor.is_scalar():
                    raise ParseError("can only divide by a scalar", pos)
                value = divisor.scalar_value()
                if not value:
                    raise ParseError("division by zero", pos)
                result = result * value.inverse()
            elif self._starts_factor():
                result = result * self.factor()
            else:
                return result

    def factor(self):
        pos = self.peek()[2]
        base, letter = self.atom()
        if not self.accept("^"):
            return base
        exp_pos = self.peek()[2]
        exp = self.exponent()
        if exp.denominator != 1:
            if not base.is_scalar():
                raise ParseError("fractional powers only apply to scalars", exp_pos)
            try:
                return FreeElement.scalar(base.scalar_value() ** exp)
            except ValueError as err:
                raise ParseError(str(err), exp_pos) from None
        n = int(exp)
        if n < 0:
            if letter is not None and letter not in self.alphabet.invertible:
                raise ParseError(f"generator {letter!r} is not invertible", pos)
            if not base.is_scalar() and letter is None and len(base.terms) != 1:
                raise ParseError("negative power of a non-monomial", exp_pos)
            if base.is_scalar() and not base.scalar_value():
                raise ParseError("division by zero", exp_pos)
        return base ** n

    def exponent(self):
        if self.accept("("):
            sign = -1 if self.accept("-") else 1
            num = self._int()
            den = 1
            if self.accept("/"):
                den = self._int()
                if den == 0:
                    raise ParseError("zero denominator in exponent", self.peek()[2])
            self.expect(")")
            return Fraction(sign * num, den)
        sign = -1 if self.accept("-") else 1
        return Fraction(sign * self._int())

    def _int(self):
        kind, text, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected integer, found {text or 'end of input'!r}", pos)
        return int(text)

    def atom(self):
        kind, text, pos = self.take()
        if kind == "int":
            return FreeElement.scalar(int(text)), None
        if kind == "name":
            return self._name(text, pos)
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect(")")
            return inner, None
        if kind == "op" and text == "[":
            sign = -1 if self.accept("-") else 1
            n = sign * self._int()
            self.expect("]")
            if self.peek()[0] == "sub":
                self.take()
            if self.accept("!"):
                if n < 0:
                    raise ParseError("factorial of a negative integer", pos)
                return FreeElement.scalar(pq_factorial(n)), None
            return FreeElement.scalar(pq_number(n)), None
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)

    def _name(self, text, pos):
        if text in self.alphabet:
            return FreeElement.letter(text), text
        if text in _SCALARS:
            return FreeElement.scalar(_SCALARS[text]()), None
        if len(text) > 1 and all(ch in self.alphabet or ch in _SCALARS for ch in text):
            result = FreeElement.scalar(1)
            for ch in text:
                result = result * self._name(ch, pos)[0]
            return result, None
        raise UnknownGeneratorError(f"unknown generator {text!r}", pos)


def parse_expression(text: str, alphabet: Alphabet = EMPTY) -> FreeElement:
    """Parse ``text`` into a :class:`FreeElement` over ``alphabet``."""
    try:
        return _Parser(text, alphabet).parse()
    except TypeError as err:  # e.g. mixing p and t
        raise ParseError(str(err), 0) from None


def parse_scalar(text: str) -> Scalar:
    """Parse a pure scalar expression such as ``(1-p*q)^(-1)`` or ``[4]_{p,q}``."""
    elem = parse_expression(text, EMPTY)
    return elem.scalar_value()
