"""Formula syntax tree.

Formulas are immutable and hash-consed by value: two formulas compare equal
iff they have the same shape.  Every node carries a sort key, which gives the
total order used to canonicalize structures.

Negation is not a node of its own.  ``neg(a)`` builds ``Arrow(a, BOT)`` and
``TOP`` is ``Arrow(BOT, BOT)``.
"""
from __future__ import annotations

from typing import Iterator


class Formula:
    __slots__ = ("key", "_hash", "size")

    def __eq__(self, other):
        return self is other or (isinstance(other, Formula) and self.key == other.key)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        from .syntax import print_formula
        return f"<{print_formula(self, sugar=True)}>"

    def __str__(self):
        from .syntax import print_formula
        return print_formula(self, sugar=True)


class Atom(Formula):
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        self.key = (0, name)
        self._hash = hash(self.key)
        self.size = 1

    def __reduce__(self):
        return (Atom, (self.name,))


class _Bottom(Formula):
    __slots__ = ()

    def __init__(self):
        self.key = (1,)
        self._hash = hash(self.key)
        self.size = 1

    def __reduce__(self):
        return (_bottom, ())


def _bottom():
    return BOT


class Binary(Formula):
    __slots__ = ("left", "right")
    tag = -1
    symbol = "?"

    def __init__(self, left: Formula, right: Formula):
        if not isinstance(left, Formula) or not isinstance(right, Formula):
            raise TypeError("formula operands must be formulas")
        self.left = left
        self.right = right
        self.key = (self.tag, left.key, right.key)
        self._hash = hash(self.key)
        self.size = left.size + right.size + 1

    def __reduce__(self):
        return (type(self), (self.left, self.right))


class Fuse(Binary):
    """Monoid-free fusion ``a . b``."""
    __slots__ = ()
    tag = 2
    symbol = "."


class Under(Binary):
    """Residual of fusion, ``a \\ b``."""
    __slots__ = ()
    tag = 3
    symbol = "\\"


class Meet(Binary):
    __slots__ = ()
    tag = 4
    symbol = "/\\"


class Join(Binary):
    __slots__ = ()
    tag = 5
    symbol = "\\/"


class Star(Binary):
    """Second, non-associative fusion ``a * b``."""
    __slots__ = ()
    tag = 6
    symbol = "*"


class Arrow(Binary):
    """Residual of ``*``, ``a -> b``."""
    __slots__ = ()
    tag = 7
    symbol = "->"


BOT = _Bottom()
TOP = Arrow(BOT, BOT)

BINARY_TYPES = (Fuse, Under, Meet, Join, Star, Arrow)


def neg(a: Formula) -> Formula:
    return Arrow(a, BOT)


def is_neg(f: Formula) -> bool:
    return type(f) is Arrow and f.right is BOT


def atoms(f: Formula) -> set[str]:
    return {a.name for a in walk(f) if type(a) is Atom}


def walk(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal over every occurrence."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Binary):
            stack.append(g.right)
            stack.append(g.left)


def subformulas(f: Formula) -> set[Formula]:
    return set(walk(f))


def in_negation_language(f: Formula) -> bool:
    """True when ``f`` only uses ``. \\ /\\ \\/`` and negation.

    Bottom may only occur as the right operand of an arrow, and arrows must be
    negations.
    """
    if type(f) is Atom:
        return True
    if f is BOT or type(f) is Star:
        return False
    if type(f) is Arrow:
        return f.right is BOT and in_negation_language(f.left)
    return in_negation_language(f.left) and in_negation_language(f.right)
