"""Parser and renderer for the word DSL.

Grammar (whitespace insignificant)::

    word   := factor { factor }
    factor := atom [ "^" ( int | atom ) ]     integer power, or a^b = b^-1 a b
    atom   := "x" posint | "e" | "(" word ")" | "[" word { "," word } "]"
    int    := [ "-" ] posint

Brackets are left-normed commutators ``[a, b] = a^-1 b^-1 a b``.
"""

from __future__ import annotations

import re

from .words import Word, word_commutator, word_conjugate, word_power


class WordSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN = re.compile(r"x(\d+)|(-?\d+)|(\S)")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []  # (kind, value, pos)
        for m in _TOKEN.finditer(text):
            if m.group(1) is not None:
                self.tokens.append(("var", int(m.group(1)), m.start()))
            elif m.group(2) is not None:
                self.tokens.append(("int", int(m.group(2)), m.start()))
            else:
                self.tokens.append((m.group(3), m.group(3), m.start()))
        self.tokens.append(("end", None, len(text)))
        self.i = 0
        self.max_var = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {tok[1]!r}" if tok[0] != "end"
                      else f"expected {kind!r}, found end of input")
        self.i += 1
        return tok

    def fail(self, message, pos=None):
        if pos is None:
            pos = self.peek()[2]
        raise WordSyntaxError(message, self.text, pos)

    def at_atom(self):
        kind = self.peek()[0]
        return kind in ("var", "(", "[") or (kind == "e")

    def word(self) -> Word:
        if not self.at_atom():
            tok = self.peek()
            self.fail("expected a word" if tok[0] == "end"
                      else f"unexpected {tok[1]!r}")
        acc = self.factor()
        while self.at_atom():
            acc = acc * self.factor()
        return acc

    def factor(self) -> Word:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.peek()
            if tok[0] == "int":
                self.take()
                if tok[1] == 0:
                    self.fail("zero exponent literal", tok[2])
                return word_power(base, tok[1])
            if tok[0] == "-":
                self.fail("exponent sign must be attached to an integer", tok[2])
            if not self.at_atom():
                self.fail("expected an integer or an atom after '^'")
            return word_conjugate(base, self.atom())
        return base

    def atom(self) -> Word:
        tok = self.peek()
        kind = tok[0]
        if kind == "var":
            self.take()
            if tok[1] < 1:
                self.fail("variable indices start at 1", tok[2])
            self.max_var = max(self.max_var, tok[1])
            return Word.var(tok[1])
        if kind == "e":
            self.take()
            return Word.identity()
        if kind == "(":
            self.take()
            w = self.word()
            self.take(")")
            return w
        if kind == "[":
            self.take()
            parts = [self.word()]
            while self.peek()[0] == ",":
                self.take()
                parts.append(self.word())
            self.take("]")
            if len(parts) < 2:
                self.fail("a commutator needs at least two entries", tok[2])
            return word_commutator(parts)
        self.fail("expected an atom" if kind == "end" else f"unexpected {tok[1]!r}")


def parse_word(text: str, arity: int | None = None) -> Word:
    """Parse the DSL into a reduced :class:`Word`.

    ``arity`` defaults to the largest variable index used; when given it must
    cover every variable in ``text``.

    >>> str(parse_word("[x1,x2]"))
    'x1^-1 x2^-1 x1 x2'
    """
    p = _Parser(text)
    w = p.word()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    if arity is not None and p.max_var > arity:
        raise ValueError(f"word uses x{p.max_var} but arity is {arity}")
    return w.with_arity(arity if arity is not None else max(p.max_var, 1))


def render_word(w: Word) -> str:
    if w.is_identity:
        return "e"
    parts = []
    for v, e in w.syllables:
        parts.append(f"x{v}" if e == 1 else f"x{v}^{e}")
    return " ".join(parts)
