"""Enumeration of small algebras up to isomorphism, and countermodel search.

Carriers are labelled ``0 .. n-1`` along a linear extension of the order, so
``0`` is always the bottom and ``n-1`` the top.  Products are enumerated on
pairs of join-irreducible elements and extended by joins, since a residuated
operation preserves all joins; the residual is then read off as a maximum.

Cost model: sizes up to 4 take well under a second for every class except
the full bi-residuated enumeration, which takes a few seconds at size 4.
Size 5 works but is noticeably slower.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Optional

import numpy as np

from .algebra import (AlgebraClass, FiniteAlgebra, counterexample, expand,
                      negation_laws)

DEFAULT_MAX_SIZE = 4


# lattices

def _is_transitive(L: np.ndarray) -> bool:
    # L is reflexive, so L.L >= L; transitivity is L.L <= L
    return not ((L.astype(int) @ L.astype(int) > 0) & ~L).any()


def _has_bounds(L: np.ndarray) -> bool:
    n = len(L)
    for a in range(n):
        for b in range(a + 1, n):
            lo = np.flatnonzero(L[:, a] & L[:, b])
            if not any(L[lo, c].all() for c in lo):
                return False
            hi = np.flatnonzero(L[a, :] & L[b, :])
            if not any(L[c, hi].all() for c in hi):
                return False
    return True


def _linear_extensions(L: np.ndarray) -> list[tuple]:
    """Relabellings p (new label of old element i is p[i]) keeping L upper triangular."""
    n = len(L)
    out = []
    for order in permutations(range(n)):
        # order[k] is the old element placed at position k
        if all(not L[order[j], order[i]] for i in range(n) for j in range(i + 1, n)):
            p = [0] * n
            for k, e in enumerate(order):
                p[e] = k
            out.append(tuple(p))
    return out


def _relabel_order(L: np.ndarray, p) -> np.ndarray:
    out = np.zeros_like(L)
    p = np.asarray(p)
    out[np.ix_(p, p)] = L
    return out


def _key(a: np.ndarray) -> bytes:
    return np.ascontiguousarray(a, dtype=np.int8).tobytes()


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple:
    """All lattices on n elements up to isomorphism, as order matrices."""
    if n < 1:
        return ()
    free = [(i, j) for i in range(1, n - 1) for j in range(i + 1, n - 1)]
    seen = {}
    for bits in product((False, True), repeat=len(free)):
        L = np.eye(n, dtype=bool)
        L[0, :] = True
        L[:, n - 1] = True
        for (i, j), b in zip(free, bits):
            L[i, j] = b
        if not _is_transitive(L) or not _has_bounds(L):
            continue
        key = min(_key(_relabel_order(L, p)) for p in _linear_extensions(L))
        if key not in seen:
            seen[key] = np.frombuffer(key, dtype=np.int8).reshape(n, n).astype(bool)
    return tuple(seen[k] for k in sorted(seen))


def _automorphisms(L: np.ndarray) -> list[np.ndarray]:
    n = len(L)
    out = []
    for p in permutations(range(n)):
        p = np.asarray(p)
        if (L[np.ix_(p, p)] == L).all():
            out.append(p)
    return out


def _join_table(L: np.ndarray) -> np.ndarray:
    n = len(L)
    J = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            hi = np.flatnonzero(L[a, :] & L[b, :])
            J[a, b] = next(c for c in hi if L[c, hi].all())
    return J


def _join_irreducibles(L: np.ndarray, J: np.ndarray) -> list[int]:
    n = len(L)
    out = []
    for x in range(1, n):
        below = [y for y in range(n) if L[y, x] and y != x]
        # x is join-irreducible iff it has a unique lower cover
        top_below = [y for y in below if not any(L[y, z] and y != z for z in below)]
        if len(top_below) == 1:
            out.append(x)
    return out


# binary operations preserving joins in each argument

def _join_preserving_tables(L: np.ndarray) -> Iterator[np.ndarray]:
    """Commutative, join-preserving (hence residuated) tables on the lattice L."""
    n = len(L)
    J = _join_table(L)
    ji = _join_irreducibles(L, J)
    cells = [(x, y) for i, x in enumerate(ji) for y in ji[i:]]
    below = {a: [x for x in ji if L[x, a]] for a in range(n)}

    def extend(vals):
        T = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                v = 0
                for x in below[a]:
                    for y in below[b]:
                        v = J[v, vals[(x, y) if (x, y) in vals else (y, x)]]
                T[a, b] = v
        return T

    def monotone_ok(vals, cell, v):
        x, y = cell
        for (u, w), t in vals.items():
            for (p, q) in ((u, w), (w, u)):
                if L[x, p] and L[y, q] and not L[v, t]:
                    return False
                if L[p, x] and L[q, y] and not L[t, v]:
                    return False
        return True

    def go(k, vals):
        if k == len(cells):
            T = extend(vals)
            # join preservation in the first argument (commutative, so enough)
            a, b, c = np.indices((n, n, n))
            if (T[J[a, b], c] == J[T[a, c], T[b, c]]).all():
                yield T
            return
        for v in range(n):
            if monotone_ok(vals, cells[k], v):
                vals[cells[k]] = v
                yield from go(k + 1, vals)
                del vals[cells[k]]

    yield from go(0, {})


def _residual(L: np.ndarray, T: np.ndarray) -> np.ndarray:
    n = len(L)
    R = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for c in range(n):
            ok = np.flatnonzero(L[T[a, :], c])
            best = [b for b in ok if L[ok, b].all()]
            if not best:
                raise AssertionError("table is not residuated")
            R[a, c] = best[0]
    return R


def _permute_table(T: np.ndarray, p: np.ndarray) -> np.ndarray:
    out = np.empty_like(T)
    out[np.ix_(p, p)] = p[T]
    return out


def _canonical_under(tables, auts) -> bytes:
    return min(b"".join(_key(_permute_table(T, p) if T.ndim == 2 else _permute_unary(T, p))
                        for T in tables) for p in auts)


def _permute_unary(N: np.ndarray, p: np.ndarray) -> np.ndarray:
    out = np.empty_like(N)
    out[p] = p[N]
    return out


def _stabilizer(auts, T) -> list:
    return [p for p in auts if (_permute_table(T, p) == T).all()]


def _labels(n):
    return [str(i) for i in range(n)]


@lru_cache(maxsize=None)
def _crl(n: int) -> tuple:
    """(lattice, dot, under, automorphisms of lattice+dot) for every cRL- of size n."""
    out = []
    for L in lattices(n):
        auts = _automorphisms(L)
        seen = {}
        for T in _join_preserving_tables(L):
            a, b, c = np.indices((n, n, n))
            if not (T[T[a, b], c] == T[a, T[b, c]]).all():
                continue
            key = _canonical_under([T], auts)
            if key not in seen:
                seen[key] = T
        for key in sorted(seen):
            T = seen[key]
            out.append((L, T, _residual(L, T), _stabilizer(auts, T)))
    return tuple(out)


_NEGATION_LAWS = {
    AlgebraClass.QINCRL: ("in", "dn1", "smn", "mn"),
    AlgebraClass.INCRL: ("in", "dn"),
    AlgebraClass.MNCRL: ("mn",),
    AlgebraClass.DNCRL: ("mn", "dn2"),
}


@lru_cache(maxsize=None)
def _of_size(n: int, cls: AlgebraClass) -> tuple:
    names = _labels(n)
    if cls is AlgebraClass.LATTICE:
        return tuple(FiniteAlgebra(names, L) for L in lattices(n))
    out = []
    for L, T, R, auts in _crl(n):
        base = FiniteAlgebra(names, L, dot=T, under=R)
        if cls is AlgebraClass.CRL:
            out.append(base)
        elif cls in _NEGATION_LAWS:
            laws = _NEGATION_LAWS[cls]
            seen = {}
            for N in product(range(n), repeat=n):
                m = base.replace(neg=N)
                if all(r.passed for r in negation_laws(m, laws)):
                    key = _canonical_under([np.asarray(N)], auts)
                    seen.setdefault(key, m)
            out += [seen[k] for k in sorted(seen)]
        elif cls is AlgebraClass.CBRL:
            out += _bi_residuated(base, auts)
    return tuple(out)


def _bi_residuated(base: FiniteAlgebra, auts) -> list:
    L, D = base.leq, base.dot
    n = base.size
    bot, top = 0, n - 1
    seen = {}
    a, b, c = np.indices((n, n, n))
    for S in _join_preserving_tables(L):
        if not _implies_all(S[D[a, b], c] == bot, S[D[a, c], b] == bot):
            continue
        key = _canonical_under([S], auts)
        if key in seen:
            continue
        A = _residual(L, S)
        seen[key] = base.replace(star=S, arrow=A, neg=A[:, bot], bottom=bot, top=top)
    return [seen[k] for k in sorted(seen)]


def _implies_all(p, q) -> bool:
    return bool((~p | q).all())


def enumerate_algebras(max_size: int = DEFAULT_MAX_SIZE, cls=AlgebraClass.CRL,
                       min_size: int = 1) -> Iterator[FiniteAlgebra]:
    """Every algebra of ``cls`` with ``min_size <= size <= max_size``, up to isomorphism.

    Bi-residuated algebras come with ``neg`` set to ``a -> bottom``.
    """
    cls = AlgebraClass.parse(cls)
    for n in range(min_size, max_size + 1):
        yield from _of_size(n, cls)


def expanded_algebras(max_size: int = DEFAULT_MAX_SIZE, min_size: int = 1) -> Iterator[FiniteAlgebra]:
    """The expansion of every quasi-involutive algebra up to ``max_size``."""
    for m in enumerate_algebras(max_size, AlgebraClass.QINCRL, min_size):
        yield expand(m)


def countermodel(s, max_size: int = DEFAULT_MAX_SIZE, full: bool = False,
                 use_neg: bool = False) -> Optional[tuple[FiniteAlgebra, dict]]:
    """First algebra and assignment refuting ``s``, smallest algebras first.

    By default the search runs over expansions of quasi-involutive algebras;
    ``full`` searches every bi-residuated algebra instead.  Absence within
    the bound proves nothing.
    """
    source = (enumerate_algebras(max_size, AlgebraClass.CBRL) if full
              else expanded_algebras(max_size))
    for m in source:
        mu = counterexample(s, m, use_neg)
        if mu is not None:
            return m, mu
    return None

