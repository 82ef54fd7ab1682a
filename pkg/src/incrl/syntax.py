"""ASCII surface syntax for formulas, structures and sequents.

Formula connectives, tightest first::

    ~        negation (prefix), sugar for  a -> bot
    .        fusion
    *        star
    \\        residual of fusion
    ->       residual of star
    /\\       meet
    \\/       join

Constants are ``bot`` and ``top`` (``top`` is ``bot -> bot``).  Binary
connectives do not associate: ``p . q . r`` is rejected, write
``(p . q) . r``.  In sequents ``,`` binds tighter than ``;`` and ``;`` does
not associate either.
"""
from __future__ import annotations

import re

from .formula import BOT, TOP, Arrow, Atom, Formula, Fuse, Join, Meet, Star, Under
from .structure import (HOLE, Leaf, Semi, SimpleSequent, Sequent, Structure,
                        comma, leaf, semi)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<op>=>|->|/\\|\\/|\\|/|\.|\*|~|\(|\)|,|;)
  | (?P<name>[a-z][a-zA-Z0-9_]*)
""", re.VERBOSE)

_LEVEL = {".": 6, "*": 5, "\\": 4, "/": 4, "->": 3, "/\\": 2, "\\/": 1}
_BUILD = {".": Fuse, "*": Star, "\\": Under, "->": Arrow, "/\\": Meet, "\\/": Join}
_SYMBOL_LEVEL = {Fuse: 6, Star: 5, Under: 4, Arrow: 3, Meet: 2, Join: 1}


def tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unknown token {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            out.append((m.group(), pos))
        pos = m.end()
    out.append(("", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, allow_slash: bool = False):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.allow_slash = allow_slash

    @property
    def tok(self):
        return self.toks[self.i][0]

    def error(self, msg):
        tok, pos = self.toks[self.i]
        shown = repr(tok) if tok else "end of input"
        raise ParseError(f"{msg}, found {shown}", pos, self.text)

    def expect(self, t):
        if self.tok != t:
            self.error(f"expected {t!r}")
        self.i += 1

    def formula(self, level=1) -> Formula:
        if level > 6:
            return self.unary()
        left = self.formula(level + 1)
        op = self.tok
        if _LEVEL.get(op) != level:
            return left
        if op == "/" and not self.allow_slash:
            self.error("'/' is not enabled")
        self.i += 1
        right = self.formula(level + 1)
        if _LEVEL.get(self.tok) == level:
            self.error("connectives of equal precedence need parentheses")
        if op == "/":
            return Under(right, left)
        return _BUILD[op](left, right)

    def unary(self) -> Formula:
        t = self.tok
        if t == "~":
            self.i += 1
            return Arrow(self.unary(), BOT)
        if t == "(":
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        if t == "bot":
            self.i += 1
            return BOT
        if t == "top":
            self.i += 1
            return TOP
        if t and (t[0].isalpha()):
            self.i += 1
            return Atom(t)
        self.error("expected a formula")

    def structure(self) -> Structure:
        left = self.comma_part()
        if self.tok != ";":
            return left
        self.i += 1
        right = self.comma_part()
        if self.tok == ";":
            self.error("';' does not associate, use parentheses")
        return semi(left, right)

    def comma_part(self) -> Structure:
        parts = [self.struct_atom()]
        while self.tok == ",":
            self.i += 1
            parts.append(self.struct_atom())
        return comma(*parts)

    def struct_atom(self) -> Structure:
        start = self.i
        try:
            f = self.formula()
            if self.tok in (",", ";", "=>", ")", ""):
                return leaf(f)
        except ParseError:
            if self.toks[start][0] != "(":
                raise
        self.i = start
        if self.tok != "(":
            self.formula()
            self.error("unexpected token in structure")
        self.i += 1
        s = self.structure()
        self.expect(")")
        return s

    def done(self):
        if self.tok != "":
            self.error("unexpected trailing input")


def parse_formula(text: str, allow_slash: bool = False) -> Formula:
    p = _Parser(text, allow_slash)
    f = p.formula()
    p.done()
    return f


def parse_structure(text: str, allow_slash: bool = False) -> Structure:
    p = _Parser(text, allow_slash)
    s = p.structure()
    p.done()
    return s


def parse_sequent(text: str, allow_slash: bool = False) -> Sequent:
    p = _Parser(text, allow_slash)
    if p.tok == "=>":
        p.error("empty antecedent")
    s = p.structure()
    p.expect("=>")
    f = p.formula()
    p.done()
    return Sequent(s, f)


def parse_simple_sequent(text: str, allow_slash: bool = False) -> SimpleSequent:
    p = _Parser(text, allow_slash)
    if p.tok == "=>":
        p.error("empty antecedent")
    a = p.formula()
    p.expect("=>")
    b = p.formula()
    p.done()
    return SimpleSequent(a, b)


def _level(f: Formula, sugar: bool) -> int:
    if sugar and type(f) is Arrow and f.right is BOT:
        return 99
    return _SYMBOL_LEVEL.get(type(f), 99)


def print_formula(f: Formula, sugar: bool = False) -> str:
    if type(f) is Atom:
        return f.name
    if f is BOT:
        return "bot"
    if sugar and type(f) is Arrow and f.right is BOT:
        if f.left is BOT:
            return "top"
        inner = print_formula(f.left, sugar)
        if _level(f.left, sugar) < 99:
            inner = f"({inner})"
        return "~" + inner
    lvl = _SYMBOL_LEVEL[type(f)]
    parts = []
    for child in (f.left, f.right):
        s = print_formula(child, sugar)
        if _level(child, sugar) <= lvl:
            s = f"({s})"
        parts.append(s)
    return f"{parts[0]} {f.symbol} {parts[1]}"


def print_structure(s: Structure, sugar: bool = False) -> str:
    if s is HOLE:
        return "[-]"
    if type(s) is Leaf:
        return print_formula(s.formula, sugar)
    if type(s) is Semi:
        return " ; ".join(
            f"({print_structure(c, sugar)})" if type(c) is not Leaf else print_structure(c, sugar)
            for c in (s.left, s.right))
    return " , ".join(
        f"({print_structure(c, sugar)})" if type(c) is Semi else print_structure(c, sugar)
        for c in s.children)


def print_sequent(s, sugar: bool = False) -> str:
    if isinstance(s.antecedent, Structure):
        lhs = print_structure(s.antecedent, sugar)
    else:
        lhs = print_formula(s.antecedent, sugar)
    return f"{lhs} => {print_formula(s.succedent, sugar)}"
