"""Formula structures, contexts and sequents.

The structural rules for ``,`` (exchange and both associativity rules) and
the exchange rule for ``;`` are absorbed into the representation:

* a ``Comma`` node holds a sorted tuple of at least two children, none of
  which is itself a ``Comma``;
* a ``Semi`` node holds its two operands in sort-key order.

Build structures with :func:`leaf`, :func:`comma` and :func:`semi` only; the
raw constructors do not canonicalize.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .formula import Formula, Fuse, Star


class Structure:
    __slots__ = ("key", "_hash", "size", "holed")

    def __eq__(self, other):
        return self is other or (isinstance(other, Structure) and self.key == other.key)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        from .syntax import print_structure
        return f"<{print_structure(self, sugar=True)}>"

    def __str__(self):
        from .syntax import print_structure
        return print_structure(self, sugar=True)


class Leaf(Structure):
    __slots__ = ("formula",)

    def __init__(self, formula: Formula):
        self.formula = formula
        self.key = (0, formula.key)
        self._hash = hash(self.key)
        self.size = formula.size
        self.holed = False

    def __reduce__(self):
        return (Leaf, (self.formula,))


class Semi(Structure):
    __slots__ = ("left", "right")

    def __init__(self, left: Structure, right: Structure):
        self.left = left
        self.right = right
        self.key = (1, left.key, right.key)
        self._hash = hash(self.key)
        self.size = left.size + right.size
        self.holed = left.holed or right.holed

    def __reduce__(self):
        return (semi, (self.left, self.right))


class Comma(Structure):
    __slots__ = ("children",)

    def __init__(self, children: tuple):
        self.children = children
        self.key = (2, tuple(c.key for c in children))
        self._hash = hash(self.key)
        self.size = sum(c.size for c in children)
        self.holed = any(c.holed for c in children)

    def __reduce__(self):
        return (comma, tuple(self.children))


class _Hole(Structure):
    __slots__ = ()

    def __init__(self):
        self.key = (-1,)
        self._hash = hash(self.key)
        self.size = 0
        self.holed = True

    def __reduce__(self):
        return (_hole, ())


def _hole():
    return HOLE


HOLE = _Hole()


def leaf(f: Formula) -> Leaf:
    return Leaf(f)


def comma(*parts: Structure) -> Structure:
    """Canonical ``,`` of the given parts (flattened, sorted)."""
    items = []
    for p in parts:
        if type(p) is Comma:
            items.extend(p.children)
        else:
            items.append(p)
    if not items:
        raise ValueError("empty structure")
    if len(items) == 1:
        return items[0]
    items.sort(key=_sort_key)
    return Comma(tuple(items))


def semi(a: Structure, b: Structure) -> Semi:
    if b.key < a.key:
        a, b = b, a
    return Semi(a, b)


def _sort_key(s):
    return s.key


def canonicalize(s: Structure) -> Structure:
    """Rebuild ``s`` through the canonical constructors.

    Only needed for trees assembled by hand with the raw classes.
    """
    if type(s) is Leaf or s is HOLE:
        return s
    if type(s) is Semi:
        return semi(canonicalize(s.left), canonicalize(s.right))
    return comma(*(canonicalize(c) for c in s.children))


def items(s: Structure) -> tuple:
    """Top-level ``,``-components of ``s``."""
    return s.children if type(s) is Comma else (s,)


def leaves(s: Structure) -> Iterator[Formula]:
    if type(s) is Leaf:
        yield s.formula
    elif type(s) is Semi:
        yield from leaves(s.left)
        yield from leaves(s.right)
    elif type(s) is Comma:
        for c in s.children:
            yield from leaves(c)


class Context:
    """A structure with exactly one hole."""
    __slots__ = ("shape",)

    def __init__(self, shape: Structure):
        self.shape = shape

    def fill(self, s: Structure) -> Structure:
        return _fill(self.shape, s)

    @property
    def is_trivial(self) -> bool:
        return self.shape is HOLE

    def __eq__(self, other):
        return isinstance(other, Context) and self.shape == other.shape

    def __hash__(self):
        return hash(self.shape)

    def __repr__(self):
        from .syntax import print_structure
        return f"Context({print_structure(self.shape, sugar=True)})"


def _fill(shape: Structure, s: Structure) -> Structure:
    if shape is HOLE:
        return s
    if not shape.holed:
        return shape
    if type(shape) is Semi:
        return semi(_fill(shape.left, s), _fill(shape.right, s))
    return comma(*(_fill(c, s) for c in shape.children))


def contexts(s: Structure) -> list[tuple[Context, Structure]]:
    """All decompositions ``s = C[D]``.

    ``D`` ranges over every leaf, every ``;`` node, and every non-empty
    sub-multiset of the children of every ``,`` node.  Decompositions are
    deduplicated, so repeated children yield each sub-multiset once.
    """
    seen = set()
    out = []
    for shape, sub in _decompose(s):
        k = (shape.key, sub.key)
        if k not in seen:
            seen.add(k)
            out.append((Context(shape), sub))
    return out


def _decompose(s: Structure) -> Iterator[tuple[Structure, Structure]]:
    yield HOLE, s
    if type(s) is Leaf:
        return
    if type(s) is Semi:
        a, b = s.left, s.right
        for shape, sub in _decompose(a):
            yield semi(shape, b), sub
        for shape, sub in _decompose(b):
            yield semi(a, shape), sub
        return
    ch = s.children
    n = len(ch)
    for k in range(1, n):
        seen = set()
        for idx in combinations(range(n), k):
            picked = tuple(ch[i] for i in idx)
            tag = tuple(p.key for p in picked)
            if tag in seen:
                continue
            seen.add(tag)
            rest = [ch[i] for i in range(n) if i not in idx]
            sub = picked[0] if k == 1 else Comma(picked)
            yield comma(*rest, HOLE), sub
    for i, c in enumerate(ch):
        if type(c) is Leaf:
            continue
        rest = ch[:i] + ch[i + 1:]
        inner = _decompose(c)
        next(inner)
        for shape, sub in inner:
            yield comma(*rest, shape), sub


def leaf_contexts(s: Structure) -> Iterator[tuple[Context, Formula]]:
    """Decompositions ``s = C[a]`` with ``a`` a single formula occurrence."""
    seen = set()
    for shape, f in _leaf_decompose(s):
        k = (shape.key, f.key)
        if k not in seen:
            seen.add(k)
            yield Context(shape), f


def _leaf_decompose(s):
    if type(s) is Leaf:
        yield HOLE, s.formula
    elif type(s) is Semi:
        for shape, f in _leaf_decompose(s.left):
            yield semi(shape, s.right), f
        for shape, f in _leaf_decompose(s.right):
            yield semi(s.left, shape), f
    else:
        ch = s.children
        for i, c in enumerate(ch):
            rest = ch[:i] + ch[i + 1:]
            for shape, f in _leaf_decompose(c):
                yield comma(*rest, shape), f


def structure_to_formula(s: Structure) -> Formula:
    """Read ``,`` as fusion and ``;`` as star.

    Comma children are folded left in canonical order.
    """
    if type(s) is Leaf:
        return s.formula
    if type(s) is Semi:
        return Star(structure_to_formula(s.left), structure_to_formula(s.right))
    fs = [structure_to_formula(c) for c in s.children]
    acc = fs[0]
    for f in fs[1:]:
        acc = Fuse(acc, f)
    return acc


class Sequent:
    """``antecedent => succedent`` with a structured antecedent."""
    __slots__ = ("antecedent", "succedent", "key", "_hash")

    def __init__(self, antecedent: Structure, succedent: Formula):
        if not isinstance(antecedent, Structure) or antecedent.holed:
            raise TypeError("antecedent must be a hole-free structure")
        if not isinstance(succedent, Formula):
            raise TypeError("succedent must be a formula")
        self.antecedent = antecedent
        self.succedent = succedent
        self.key = (antecedent.key, succedent.key)
        self._hash = hash(self.key)

    def __eq__(self, other):
        return self is other or (type(other) is Sequent and self.key == other.key)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __reduce__(self):
        return (Sequent, (self.antecedent, self.succedent))

    def __repr__(self):
        from .syntax import print_sequent
        return f"<{print_sequent(self, sugar=True)}>"

    def __str__(self):
        from .syntax import print_sequent
        return print_sequent(self, sugar=True)


class SimpleSequent:
    """``formula => formula`` for the single-antecedent calculi."""
    __slots__ = ("antecedent", "succedent", "key", "_hash")

    def __init__(self, antecedent: Formula, succedent: Formula):
        if not isinstance(antecedent, Formula) or not isinstance(succedent, Formula):
            raise TypeError("simple sequents relate two formulas")
        self.antecedent = antecedent
        self.succedent = succedent
        self.key = (antecedent.key, succedent.key)
        self._hash = hash(self.key)

    def __eq__(self, other):
        return self is other or (type(other) is SimpleSequent and self.key == other.key)

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (SimpleSequent, (self.antecedent, self.succedent))

    def __repr__(self):
        from .syntax import print_sequent
        return f"<{print_sequent(self, sugar=True)}>"

    def __str__(self):
        from .syntax import print_sequent
        return print_sequent(self, sugar=True)


def symbol_size(s) -> int:
    """Atom, constant and connective occurrences on both sides.

    Structural ``,`` and ``;`` are not counted, so ``p, q => p . q`` has
    size 5.
    """
    return s.antecedent.size + s.succedent.size


def sequent_formulas(s) -> Iterable[Formula]:
    if isinstance(s.antecedent, Structure):
        yield from leaves(s.antecedent)
    else:
        yield s.antecedent
    yield s.succedent
