"""Exhaustive and random generation of formulas and sequents."""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Sequence

from .formula import BOT, Arrow, Atom, Formula, Fuse, Join, Meet, Star, Under, neg
from .structure import Leaf, Semi, Sequent, Structure, comma, items, leaf, semi

NEG_LANGUAGE = (Fuse, Under, Meet, Join)
FULL_LANGUAGE = (Fuse, Under, Meet, Join, Star, Arrow)


@lru_cache(maxsize=None)
def _exact(n: int, names: tuple, binaries: tuple, with_neg: bool, with_bot: bool) -> tuple:
    if n == 0:
        base = [Atom(x) for x in names]
        return tuple(base + [BOT]) if with_bot else tuple(base)
    out = []
    if with_neg:
        out += [neg(f) for f in _exact(n - 1, names, binaries, with_neg, with_bot)]
    for k in range(n):
        for left in _exact(k, names, binaries, with_neg, with_bot):
            for right in _exact(n - 1 - k, names, binaries, with_neg, with_bot):
                out += [op(left, right) for op in binaries]
    return tuple(out)


def formulas(max_connectives: int, names: Sequence[str] = ("p", "q"),
             binaries=NEG_LANGUAGE, with_neg: bool = True,
             with_bot: bool = False) -> Iterator[Formula]:
    """Every formula with at most ``max_connectives`` connectives, smallest first.

    Negation counts as one connective.
    """
    for n in range(max_connectives + 1):
        yield from _exact(n, tuple(names), tuple(binaries), with_neg, with_bot)


def random_formula(rng: random.Random, size: int, names: Sequence[str] = ("p", "q", "r"),
                   binaries=FULL_LANGUAGE, neg_weight: float = 0.25,
                   bot_weight: float = 0.05) -> Formula:
    """A random formula with about ``size`` symbols (atoms, bot and connectives)."""
    if size <= 2:
        # no formula has exactly two symbols
        return BOT if rng.random() < bot_weight else Atom(rng.choice(names))
    if rng.random() < neg_weight:
        return neg(random_formula(rng, size - 2, names, binaries, neg_weight, bot_weight))
    k = rng.randint(1, size - 2)
    op = rng.choice(binaries)
    return op(random_formula(rng, k, names, binaries, neg_weight, bot_weight),
              random_formula(rng, size - 1 - k, names, binaries, neg_weight, bot_weight))


def random_structure(rng: random.Random, size: int, names=("p", "q", "r"),
                     semi_weight: float = 0.3) -> Structure:
    """A random structure with about ``size`` symbols in its leaves."""
    if size <= 3 or rng.random() < 0.35:
        return leaf(random_formula(rng, max(1, size), names))
    k = rng.randint(1, size - 1)
    a = random_structure(rng, k, names, semi_weight)
    b = random_structure(rng, size - k, names, semi_weight)
    return semi(a, b) if rng.random() < semi_weight else comma(a, b)


def random_sequent(rng: random.Random, max_size: int, names=("p", "q", "r")) -> Sequent:
    total = rng.randint(2, max_size)
    succ_size = rng.randint(1, max(1, total // 2))
    return Sequent(random_structure(rng, max(1, total - succ_size), names),
                   random_formula(rng, succ_size, names))


def shuffled(s: Structure, rng: random.Random) -> Structure:
    """Rebuild ``s`` with Comma children and Semi operands in random order.

    Comma children are also regrouped at random, which is invisible after
    canonicalization.
    """
    if type(s) is Leaf:
        return s
    if type(s) is Semi:
        parts = [shuffled(s.left, rng), shuffled(s.right, rng)]
        rng.shuffle(parts)
        return semi(*parts)
    parts = [shuffled(c, rng) for c in items(s)]
    rng.shuffle(parts)
    while len(parts) > 1:
        i = rng.randrange(len(parts) - 1)
        parts[i:i + 2] = [comma(parts[i], parts[i + 1])]
    return parts[0]
