"""Parser for functor expressions such as ``G^2(1) * S^3``.

Grammar::

    atom := ("G" | "L" | "S" | "I") ["^" d] ["(" r ")"]
    word := atom {"*" atom}

d defaults to 1 and r to 0.  Blanks between tokens are ignored.  Errors
report the byte offset of the offending character.
"""
from __future__ import annotations

from .core import Kind
from .errors import InvalidParams
from .pcalc import FunctorAtom, FunctorWord

_KINDS = {k.value: k for k in Kind}


class ExprError(InvalidParams):
    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        self.message = message
        super().__init__(f"{message} at byte {self.offset}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, msg):
        raise ExprError(msg, self.text, self.pos)

    def number(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a nonnegative integer")
        return int(self.text[start:self.pos])

    def atom(self) -> FunctorAtom:
        c = self.peek()
        if c not in _KINDS:
            self.fail(f"expected one of G, L, S, I but found {c!r}" if c
                      else "expected a functor letter but the input ended")
        start = self.pos
        kind = _KINDS[c]
        self.pos += 1
        star, twist = 1, 0
        if self.peek() == "^":
            self.pos += 1
            star = self.number()
        if self.peek() == "(":
            self.pos += 1
            twist = self.number()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
        if kind is Kind.ID and star != 1:
            raise ExprError("the identity functor only has degree 1", self.text, start)
        return FunctorAtom(kind, star, twist)

    def word(self) -> FunctorWord:
        atoms = [self.atom()]
        while self.peek() == "*":
            self.pos += 1
            atoms.append(self.atom())
        if self.peek():
            self.fail(f"unexpected character {self.peek()!r}")
        return FunctorWord(atoms)


def parse_word(text: str) -> FunctorWord:
    return _Parser(text).word()


def parse_atom(text: str) -> FunctorAtom:
    w = parse_word(text)
    if len(w.factors) != 1:
        raise ExprError("expected a single functor, not a tensor product", text,
                        text.index("*"))
    return w.factors[0]


_LATEX = {Kind.GAMMA: r"\Gamma", Kind.LAMBDA: r"\Lambda", Kind.SYM: "S", Kind.ID: "I"}


def latex_atom(a: FunctorAtom) -> str:
    sup = str(a.star) if a.kind is not Kind.ID else ""
    if a.twist:
        sup += f"({a.twist})"
    return _LATEX[a.kind] + (f"^{{{sup}}}" if sup else "")


def latex_word(w: FunctorWord) -> str:
    return r" \otimes ".join(latex_atom(a) for a in w.factors)
