"""Finite algebras: tables, law checks, evaluation and validity.

Elements are integer indices into ``carrier``.  Tables are numpy integer
arrays, binary tables indexed ``table[a, b]``.  Meet and join are always
derived from the order; a table entry of -1 marks a pair with no glb/lub.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .formula import BOT, Arrow, Atom, Formula, Fuse, Join, Meet, Star, Under, atoms
from .structure import Sequent, SimpleSequent, structure_to_formula

_TABLES = ("dot", "under", "star", "arrow")


class AlgebraFormatError(ValueError):
    pass


class MissingOperation(ValueError):
    pass


class AlgebraClass(str, enum.Enum):
    LATTICE = "lattice"
    CRL = "cRL-"
    QINCRL = "qIncRL-"
    INCRL = "IncRL-"
    MNCRL = "mncRL-"
    DNCRL = "dncRL-"
    CBRL = "cbRL-"

    @classmethod
    def parse(cls, name) -> "AlgebraClass":
        if isinstance(name, cls):
            return name
        key = str(name).replace("⁻", "-").rstrip("-").lower()
        for c in cls:
            if c.value.rstrip("-").lower() == key:
                return c
        raise ValueError(f"unknown algebra class {name!r}")


class NegationClass(str, enum.Enum):
    NONE = "none"
    SUBMINIMAL = "subminimal"
    MINIMAL = "minimal"
    DEMORGAN = "deMorgan"
    QUASI_INVOLUTIVE = "quasiInvolutive"
    INVOLUTIVE = "involutive"


@dataclass(eq=False)
class FiniteAlgebra:
    carrier: list
    leq: np.ndarray
    dot: Optional[np.ndarray] = None
    under: Optional[np.ndarray] = None
    neg: Optional[np.ndarray] = None
    star: Optional[np.ndarray] = None
    arrow: Optional[np.ndarray] = None
    bottom: Optional[int] = None
    top: Optional[int] = None
    meet: np.ndarray = field(init=False, repr=False)
    join: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.carrier = [str(c) for c in self.carrier]
        self.leq = _frozen(self.leq, bool)
        for name in _TABLES + ("neg",):
            t = getattr(self, name)
            if t is not None:
                setattr(self, name, _frozen(t, np.int64))
        for name in ("bottom", "top"):
            if getattr(self, name) is not None:
                setattr(self, name, int(getattr(self, name)))
        self.meet = _frozen(_bound_table(self.leq, lower=True), np.int64)
        self.join = _frozen(_bound_table(self.leq, lower=False), np.int64)

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index(self, name: str) -> int:
        try:
            return self.carrier.index(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r}") from None

    def name(self, i: int) -> str:
        return self.carrier[int(i)]

    def least(self) -> Optional[int]:
        return _extreme(self.leq, lower=True)

    def greatest(self) -> Optional[int]:
        return _extreme(self.leq, lower=False)

    def replace(self, **changes) -> "FiniteAlgebra":
        fields = dict(carrier=self.carrier, leq=self.leq, dot=self.dot, under=self.under,
                      neg=self.neg, star=self.star, arrow=self.arrow,
                      bottom=self.bottom, top=self.top)
        fields.update(changes)
        return FiniteAlgebra(**fields)

    def __repr__(self):
        ops = [n for n in _TABLES + ("neg",) if getattr(self, n) is not None]
        return f"FiniteAlgebra({' '.join(self.carrier)}; {', '.join(ops)})"


def _frozen(x, dtype) -> np.ndarray:
    a = np.array(x, dtype=dtype)
    a.setflags(write=False)
    return a


def _bound_table(leq: np.ndarray, lower: bool) -> np.ndarray:
    n = len(leq)
    out = np.full((n, n), -1, dtype=np.int64)
    rel = leq if lower else leq.T
    for a in range(n):
        for b in range(n):
            # common lower (upper) bounds, then the greatest (least) of them
            cands = np.flatnonzero(rel[:, a] & rel[:, b])
            for c in cands:
                if rel[cands, c].all():
                    out[a, b] = c
                    break
    return out


def _extreme(leq: np.ndarray, lower: bool) -> Optional[int]:
    rel = leq if lower else leq.T
    hits = np.flatnonzero(rel.all(axis=1))
    return int(hits[0]) if len(hits) else None


# text and JSON formats

def load_algebra(text: str) -> FiniteAlgebra:
    """Parse the line-oriented table format.

    ``elements:`` lists the carrier, ``leq:`` is a 0/1 matrix with
    ``leq[i][j] = 1`` iff element i is below element j, and ``neg:``,
    ``dot:``, ``under:``, ``star:``, ``arrow:`` give tables of element names,
    row-major over the element order.  ``bottom:`` and ``top:`` name
    constants.  Text after ``#`` is ignored.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return algebra_from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise AlgebraFormatError(f"bad JSON: {e}") from None
    sections: dict[str, list[list[str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if sep and head.strip().isidentifier():
            current = head.strip().lower()
            if current in sections:
                raise AlgebraFormatError(f"line {lineno}: duplicate section {current!r}")
            sections[current] = []
            line = rest.strip()
            if not line:
                continue
        if current is None:
            raise AlgebraFormatError(f"line {lineno}: data before any section")
        sections[current].append(line.split())
    return _from_sections({k: v for k, v in sections.items()})


def _from_sections(sec: dict) -> FiniteAlgebra:
    if "elements" not in sec:
        raise AlgebraFormatError("missing 'elements:'")
    carrier = [x for row in sec.pop("elements") for x in row]
    if not carrier:
        raise AlgebraFormatError("empty carrier")
    if len(set(carrier)) != len(carrier):
        raise AlgebraFormatError("repeated element name")
    n = len(carrier)
    pos = {c: i for i, c in enumerate(carrier)}

    def elem(x, what):
        if x not in pos:
            raise AlgebraFormatError(f"{what}: unknown element {x!r}")
        return pos[x]

    if "leq" not in sec:
        raise AlgebraFormatError("missing 'leq:'")
    rows = sec.pop("leq")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraFormatError(f"leq must be a {n}x{n} matrix")
    try:
        leq = [[{"0": False, "1": True}[x] for x in r] for r in rows]
    except KeyError:
        raise AlgebraFormatError("leq entries must be 0 or 1") from None
    kw = {}
    for name in _TABLES:
        if name in sec:
            rows = sec.pop(name)
            if len(rows) != n or any(len(r) != n for r in rows):
                raise AlgebraFormatError(f"{name} must be a {n}x{n} table")
            kw[name] = [[elem(x, name) for x in r] for r in rows]
    if "neg" in sec:
        vals = [x for r in sec.pop("neg") for x in r]
        if len(vals) != n:
            raise AlgebraFormatError(f"neg must list {n} entries")
        kw["neg"] = [elem(x, "neg") for x in vals]
    for name in ("bottom", "top"):
        if name in sec:
            vals = [x for r in sec.pop(name) for x in r]
            if len(vals) != 1:
                raise AlgebraFormatError(f"{name} names exactly one element")
            kw[name] = elem(vals[0], name)
    if sec:
        raise AlgebraFormatError(f"unknown section {sorted(sec)[0]!r}")
    return FiniteAlgebra(carrier, leq, **kw)


def algebra_from_json(obj: dict) -> FiniteAlgebra:
    if not isinstance(obj, dict):
        raise AlgebraFormatError("JSON algebra must be an object")
    sec = {}
    for k, v in obj.items():
        if k == "elements":
            sec[k] = [list(v)]
        elif k == "leq":
            sec[k] = [[str(int(x)) for x in row] for row in v]
        elif k == "neg" or k in ("bottom", "top"):
            sec[k] = [[v]] if isinstance(v, str) else [list(v)]
        else:
            sec[k] = [list(row) for row in v]
    return _from_sections(sec)


def algebra_to_json(m: FiniteAlgebra) -> dict:
    out = {"elements": list(m.carrier),
           "leq": [[int(x) for x in row] for row in m.leq]}
    if m.neg is not None:
        out["neg"] = [m.name(x) for x in m.neg]
    for name in _TABLES:
        t = getattr(m, name)
        if t is not None:
            out[name] = [[m.name(x) for x in row] for row in t]
    for name in ("bottom", "top"):
        if getattr(m, name) is not None:
            out[name] = m.name(getattr(m, name))
    return out


def dump_algebra(m: FiniteAlgebra) -> str:
    lines = ["elements: " + " ".join(m.carrier), "leq:"]
    lines += ["  " + " ".join(str(int(x)) for x in row) for row in m.leq]
    if m.neg is not None:
        lines.append("neg: " + " ".join(m.name(x) for x in m.neg))
    for name in _TABLES:
        t = getattr(m, name)
        if t is not None:
            lines.append(f"{name}:")
            lines += ["  " + " ".join(m.name(x) for x in row) for row in t]
    for name in ("bottom", "top"):
        if getattr(m, name) is not None:
            lines.append(f"{name}: {m.name(getattr(m, name))}")
    return "\n".join(lines) + "\n"


def example1() -> FiniteAlgebra:
    """The five-element involutive algebra with no unit.

    c is the bottom, d the top, and a, b, e are pairwise incomparable.
    """
    text = """
    elements: a b c d e
    leq:
      1 0 0 1 0
      0 1 0 1 0
      1 1 1 1 1
      0 0 0 1 0
      0 0 0 1 1
    neg: a b d c e
    dot:
      b a c d d
      a b c d d
      c c c c c
      d d c d d
      d d c d d
    under:
      b a c d c
      a b c d c
      d d d d d
      c c c d c
      c c c d c
    """
    return load_algebra(text)


# laws

@dataclass
class LawResult:
    law: str
    passed: bool
    checked: int
    witness: Optional[tuple] = None

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = f"  witness {' '.join(self.witness)}" if self.witness else ""
        return f"{status}  {self.law}  ({self.checked} cases){extra}"


@dataclass
class ClassReport:
    algebra_class: AlgebraClass
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def describe(self) -> str:
        head = f"{self.algebra_class.value}: {'pass' if self.passed else 'FAIL'}"
        return "\n".join([head] + ["  " + r.describe() for r in self.results])


@lru_cache(maxsize=None)
def _grid(n: int, arity: int):
    return [g.ravel() for g in np.indices((n,) * arity)]


def _law(m: FiniteAlgebra, name: str, arity: int, fn: Callable) -> LawResult:
    xs = _grid(m.size, arity)
    ok = np.asarray(fn(*xs), dtype=bool)
    if ok.ndim == 0:
        ok = np.full(len(xs[0]), bool(ok))
    bad = np.flatnonzero(~ok)
    witness = None
    if len(bad):
        i = bad[0]
        witness = tuple(m.name(x[i]) for x in xs)
    return LawResult(name, not len(bad), len(ok), witness)


def _need(m: FiniteAlgebra, *names):
    for n in names:
        if getattr(m, n) is None:
            raise MissingOperation(f"the algebra has no {n} table")


def _implies(p, q):
    return ~np.asarray(p) | np.asarray(q)


def lattice_laws(m: FiniteAlgebra) -> list:
    L = m.leq
    out = [
        _law(m, "reflexive", 1, lambda a: L[a, a]),
        _law(m, "antisymmetric", 2, lambda a, b: _implies(L[a, b] & L[b, a], a == b)),
        _law(m, "transitive", 3, lambda a, b, c: _implies(L[a, b] & L[b, c], L[a, c])),
    ]
    if not all(r.passed for r in out):
        return out
    out.append(_law(m, "meet exists", 2, lambda a, b: m.meet[a, b] >= 0))
    out.append(_law(m, "join exists", 2, lambda a, b: m.join[a, b] >= 0))
    return out


def crl_laws(m: FiniteAlgebra) -> list:
    _need(m, "dot", "under")
    L, D, U = m.leq, m.dot, m.under
    return [
        _law(m, "dot commutative", 2, lambda a, b: D[a, b] == D[b, a]),
        _law(m, "dot associative", 3, lambda a, b, c: D[D[a, b], c] == D[a, D[b, c]]),
        _law(m, "res", 3, lambda a, b, c: L[D[a, b], c] == L[b, U[a, c]]),
    ]


def negation_laws(m: FiniteAlgebra, names) -> list:
    _need(m, "neg")
    L, N = m.leq, m.neg
    table = {
        "ctr": (2, lambda a, b: _implies(L[a, b], L[N[b], N[a]])),
        "mn": (2, lambda a, c: _implies(L[a, N[c]], L[c, N[a]])),
        "dn1": (1, lambda a: L[a, N[N[a]]]),
        "dn2": (1, lambda a: L[N[N[a]], a]),
        "dn": (1, lambda a: N[N[a]] == a),
    }
    if any(x in names for x in ("in", "smn")):
        _need(m, "dot")
        D = m.dot
        if "in" in names:
            _need(m, "under")
        table["in"] = (2, lambda a, b: m.under[a, N[b]] == m.under[b, N[a]])
        table["smn"] = (3, lambda a, b, c: _implies(L[D[a, b], N[c]], L[D[c, b], N[a]]))
    return [_law(m, x, *table[x]) for x in names]


def cbrl_laws(m: FiniteAlgebra) -> list:
    _need(m, "dot", "star", "arrow")
    L, D, S, A = m.leq, m.dot, m.star, m.arrow
    bot, top = m.bottom, m.top
    if bot is None or top is None:
        raise MissingOperation("the algebra has no bottom/top constants")
    out = [
        _law(m, "bottom least", 1, lambda a: L[bot, a]),
        _law(m, "top greatest", 1, lambda a: L[a, top]),
        _law(m, "star commutative", 2, lambda a, b: S[a, b] == S[b, a]),
        _law(m, "star res", 3, lambda a, b, c: L[S[a, b], c] == L[b, A[a, c]]),
        _law(m, "interchange", 3,
             lambda a, b, c: _implies(S[D[a, b], c] == bot, S[D[a, c], b] == bot)),
    ]
    negation = m.neg if m.neg is not None else A[:, bot]
    if m.neg is not None:
        out.append(_law(m, "neg is arrow to bottom", 1, lambda a: m.neg[a] == A[a, bot]))
    out.append(_law(m, "star with negation is bottom", 1, lambda a: S[a, negation[a]] == bot))
    return out


_CLASS_NEGATION = {
    AlgebraClass.QINCRL: ("in", "dn1", "smn", "mn"),
    AlgebraClass.INCRL: ("in", "dn"),
    AlgebraClass.MNCRL: ("mn",),
    AlgebraClass.DNCRL: ("mn", "dn2"),
}


def check_class(m: FiniteAlgebra, cls) -> ClassReport:
    """Check every law of ``cls``; each result carries a witness on failure."""
    cls = AlgebraClass.parse(cls)
    results = lattice_laws(m)
    lattice_ok = all(r.passed for r in results)
    if cls is not AlgebraClass.LATTICE and lattice_ok:
        results += crl_laws(m)
        if cls in _CLASS_NEGATION:
            results += negation_laws(m, _CLASS_NEGATION[cls])
        elif cls is AlgebraClass.CBRL:
            results += cbrl_laws(m)
    elif cls is not AlgebraClass.LATTICE:
        results.append(LawResult("remaining laws skipped (not a lattice)", False, 0))
    return ClassReport(cls, results)


# negation strength, weakest first; each entry lists the laws that define it
NEGATION_LAWS = {
    NegationClass.SUBMINIMAL: ("ctr",),
    NegationClass.MINIMAL: ("mn",),
    NegationClass.DEMORGAN: ("mn", "dn2"),
    NegationClass.QUASI_INVOLUTIVE: ("smn", "mn", "dn1"),
    NegationClass.INVOLUTIVE: ("smn", "mn", "dn"),
}


def classify_negation(m: FiniteAlgebra) -> NegationClass:
    _need(m, "neg", "dot")
    holds = {r.law: r.passed for r in
             negation_laws(m, ("ctr", "mn", "dn1", "dn2", "dn", "smn"))}
    best = NegationClass.NONE
    for cls, laws in NEGATION_LAWS.items():
        if all(holds[x] for x in laws):
            best = cls
    return best


def no_unit_witness(m: FiniteAlgebra) -> bool:
    """True iff no element y has x . ~x = y for every x."""
    _need(m, "dot", "neg")
    values = m.dot[np.arange(m.size), m.neg]
    return bool((values != values[0]).any())


class ExpandError(ValueError):
    pass


def expand(m: FiniteAlgebra) -> FiniteAlgebra:
    """Add star, arrow and bounds to a quasi-involutive algebra.

    ``a * b`` is bottom when ``a <= ~b`` and top otherwise; ``a -> b`` is
    ``~a`` unless ``b`` is top, in which case it is top.
    """
    report = check_class(m, AlgebraClass.QINCRL)
    if not report.passed:
        bad = report.failures()[0]
        raise ExpandError(f"not quasi-involutive: {bad.describe()}")
    bot, top = m.least(), m.greatest()
    n = m.size
    a, b = np.indices((n, n))
    star = np.where(m.leq[a, m.neg[b]], bot, top)
    arrow = np.where(b != top, m.neg[a], top)
    return m.replace(star=star, arrow=arrow, bottom=bot, top=top)


# evaluation

def _op(m: FiniteAlgebra, f: Formula, use_neg: bool):
    """Table for the principal connective of ``f``, or None for ~x with use_neg."""
    if use_neg and type(f) is Arrow and f.right is BOT:
        _need(m, "neg")
        return None
    t = type(f)
    name = {Fuse: "dot", Under: "under", Star: "star", Arrow: "arrow"}.get(t)
    if name is not None:
        _need(m, name)
        return getattr(m, name)
    if t is Meet:
        return m.meet
    if t is Join:
        return m.join
    raise TypeError(f"cannot evaluate {t.__name__}")


def evaluate(f: Formula, m: FiniteAlgebra, mu: dict, use_neg: bool = False) -> int:
    """Value of ``f`` under the assignment ``mu`` (atom name -> element index)."""
    if type(f) is Atom:
        if f.name not in mu:
            raise KeyError(f"atom {f.name!r} is unassigned")
        v = mu[f.name]
        return m.index(v) if isinstance(v, str) else int(v)
    if f is BOT:
        if m.bottom is None:
            raise MissingOperation("the algebra has no bottom constant")
        return m.bottom
    table = _op(m, f, use_neg)
    if table is None:
        return int(m.neg[evaluate(f.left, m, mu, use_neg)])
    return int(table[evaluate(f.left, m, mu, use_neg), evaluate(f.right, m, mu, use_neg)])


def assignments(names: list, n: int) -> np.ndarray:
    """All assignments as a (len(names), n**len(names)) index array."""
    if not names:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices((n,) * len(names)).reshape(len(names), -1)


def evaluate_all(f: Formula, m: FiniteAlgebra, names: list, grid: np.ndarray,
                 use_neg: bool = False, _memo=None) -> np.ndarray:
    """Vectorized evaluation of ``f`` over every column of ``grid``."""
    memo = {} if _memo is None else _memo
    hit = memo.get(f)
    if hit is not None:
        return hit
    width = grid.shape[1]
    if type(f) is Atom:
        out = grid[names.index(f.name)]
    elif f is BOT:
        if m.bottom is None:
            raise MissingOperation("the algebra has no bottom constant")
        out = np.full(width, m.bottom, dtype=np.int64)
    else:
        table = _op(m, f, use_neg)
        left = evaluate_all(f.left, m, names, grid, use_neg, memo)
        if table is None:
            out = m.neg[left]
        else:
            out = table[left, evaluate_all(f.right, m, names, grid, use_neg, memo)]
    memo[f] = out
    return out


def _sides(s) -> tuple[Formula, Formula]:
    if isinstance(s, Sequent):
        return structure_to_formula(s.antecedent), s.succedent
    if isinstance(s, SimpleSequent):
        return s.antecedent, s.succedent
    raise TypeError("expected a sequent")


def counterexample(s, m: FiniteAlgebra, use_neg: bool = False) -> Optional[dict]:
    """An assignment refuting ``s`` in ``m`` (atom -> element name), or None."""
    lhs, rhs = _sides(s)
    names = sorted(atoms(lhs) | atoms(rhs))
    grid = assignments(names, m.size)
    memo = {}
    left = evaluate_all(lhs, m, names, grid, use_neg, memo)
    right = evaluate_all(rhs, m, names, grid, use_neg, memo)
    bad = np.flatnonzero(~m.leq[left, right])
    if not len(bad):
        return None
    col = grid[:, bad[0]]
    return {name: m.name(col[i]) for i, name in enumerate(names)}


def valid(s, m: FiniteAlgebra, use_neg: bool = False) -> bool:
    return counterexample(s, m, use_neg) is None
