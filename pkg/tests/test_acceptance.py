"""Acceptance suite: one test and one summary line per criterion."""
import random
import time
from functools import lru_cache

from incrl.algebra import AlgebraClass, check_class, example1, expand, no_unit_witness, valid
from incrl.cli import run
from incrl.enumeration import enumerate_algebras, expanded_algebras
from incrl.generate import formulas, random_sequent, shuffled
from incrl.prover import Prover, SearchConfig, prove
from incrl.structure import Sequent, leaf, leaf_contexts, symbol_size
from incrl.syntax import parse_formula, parse_sequent, print_sequent
from incrl.systems import decide_g, ko, lemma1_check

BUDGET = 10.0

# fusion, residual and negation laws as sequents; a/b is written b\a
LAWS = {
    "fusion cancel": "b . (b \\ a) => a",
    "fusion over join": "a . (b \\/ c) => (a . b) \\/ (a . c)",
    "fusion over join, converse": "(a . b) \\/ (a . c) => a . (b \\/ c)",
    "fusion under shift": "(a \\ c) . b => a \\ (c . b)",
    "residual composition": "(a \\ b) . (b \\ c) => a \\ c",
    "prefixing": "a \\ c => (b . a) \\ (b . c)",
    "currying": "b \\ (a \\ c) => (a . b) \\ c",
    "currying, converse": "(a . b) \\ c => b \\ (a \\ c)",
    "residual over meet": "c \\ (a /\\ b) => (c \\ a) /\\ (c \\ b)",
    "residual over meet, converse": "(c \\ a) /\\ (c \\ b) => c \\ (a /\\ b)",
    "suffixing": "b \\ c => (a \\ b) \\ (a \\ c)",
    "exchange": "a \\ (b \\ c) => b \\ (a \\ c)",
    "exchange, converse": "b \\ (a \\ c) => a \\ (b \\ c)",
    "type raising": "c => (c \\ a) \\ a",
    "double negation introduction": "a => ~~a",
    "double negation introduction, compound": "a . (b \\/ c) => ~~(a . (b \\/ c))",
    "double negation over meet": "~~(~~a /\\ ~~b) => ~~a /\\ ~~b",
    "double negation over meet, converse": "~~a /\\ ~~b => ~~(~~a /\\ ~~b)",
    "double negation over residual": "~~(~~a \\ ~~b) => ~~a \\ ~~b",
    "double negation over residual, converse": "~~a \\ ~~b => ~~(~~a \\ ~~b)",
    "monotonicity with atoms": "(p . (p \\ r)) . (q . (q \\ s)) => r . s",
    "star with negation": "p ; ~p => bot",
}


def _timed(goal, **cfg):
    start = time.perf_counter()
    out = Prover(SearchConfig(time_budget=BUDGET, **cfg)).prove(goal)
    return out, time.perf_counter() - start


def test_criterion_1_example1(criterion, capsys):
    start = time.perf_counter()
    code = run(["check-algebra", "example1", "--class", "IncRL-"])
    capsys.readouterr()
    m = example1()
    report = check_class(m, AlgebraClass.INCRL)
    witness = no_unit_witness(m)
    seconds = time.perf_counter() - start
    counts = (report.result("res").checked, report.result("in").checked,
              report.result("dn").checked)
    ok = code == 0 and report.passed and witness and counts == (125, 25, 5) and seconds < 1
    criterion(1, ok, f"IncRL- laws pass, res/in/dn cases {counts}, "
                     f"no unit witness {witness}, {seconds:.3f}s")
    assert ok


@lru_cache(maxsize=None)
def _law_results():
    return {name: _timed(parse_sequent(text)) for name, text in LAWS.items()}


def test_criterion_2_law_corpus(criterion):
    res = _law_results()
    bad = [n for n, (out, t) in res.items() if out.kind != "proved" or t >= BUDGET]
    slowest = max(t for _, t in res.values())
    ok = not bad
    criterion(2, ok, f"{len(res) - len(bad)}/{len(res)} sequents proved, "
                     f"slowest {slowest:.3f}s" + (f", failing: {bad}" if bad else ""))
    assert ok


def test_criterion_3_dn2_separation(criterion):
    out, t1 = _timed(parse_sequent("~~p => p"))
    start = time.perf_counter()
    g = decide_g(parse_formula("~~p"), parse_formula("p"), cfg=SearchConfig(time_budget=BUDGET))
    t2 = time.perf_counter() - start
    ok = out.kind == "refuted" and g and t1 < BUDGET and t2 < BUDGET
    criterion(3, ok, f"gb: {out.kind} ({t1:.3f}s), g: {'proved' if g else 'refuted'} ({t2:.3f}s)")
    assert ok


@lru_cache(maxsize=None)
def _cut_pairs(wanted: int = 150, seed: int = 9):
    """Cut goals built from pairs of provable sequents, with their outcomes."""
    rng = random.Random(seed)
    pool = []
    for _ in range(3000):
        s = random_sequent(rng, 9, ("p", "q"))
        if prove(s):
            pool.append(s)
    by_succ = {}
    for s in pool:
        by_succ.setdefault(s.succedent, []).append(s)
    pairs = []
    for right in pool:
        for ctx, f in leaf_contexts(right.antecedent):
            for left in by_succ.get(f, ()):
                goal = Sequent(ctx.fill(left.antecedent), right.succedent)
                if goal == right or symbol_size(goal) > 14:
                    continue
                pairs.append(goal)
    rng.shuffle(pairs)
    chosen = list(dict.fromkeys(pairs))[:wanted]
    return tuple((g, Prover(SearchConfig(time_budget=BUDGET)).prove(g).kind) for g in chosen)


def test_criterion_4_cut_admissibility(criterion):
    pairs = _cut_pairs()
    bad = [print_sequent(g, True) for g, kind in pairs if kind != "proved"]
    ok = len(pairs) >= 100 and not bad
    criterion(4, ok, f"{len(pairs) - len(bad)}/{len(pairs)} cut goals proved cut-free"
                     + (f", failing: {bad[:3]}" if bad else ""))
    assert ok


def test_criterion_5_soundness(criterion):
    start = time.perf_counter()
    proved = [parse_sequent(LAWS[n]) for n, (out, _) in _law_results().items() if out]
    # criterion 3 proves the translated sequent
    proved.append(Sequent(leaf(ko(parse_formula("~~p"))), ko(parse_formula("p"))))
    proved += [g for g, kind in _cut_pairs() if kind == "proved"]
    models = [expand(example1())] + list(expanded_algebras(3))
    violations = [(print_sequent(s, True), i) for s in proved
                  for i, m in enumerate(models) if not valid(s, m)]
    seconds = time.perf_counter() - start
    ok = not violations and seconds < 600
    criterion(5, ok, f"{len(proved)} sequents x {len(models)} algebras, "
                     f"{len(violations)} violations, {seconds:.1f}s")
    assert ok


def test_criterion_6_expand_totality(criterion):
    algebras = list(enumerate_algebras(4, AlgebraClass.QINCRL))
    failed = []
    for m in algebras:
        report = check_class(expand(m), AlgebraClass.CBRL)
        laws = {r.law for r in report.results}
        if not report.passed or not {"interchange", "star with negation is bottom"} <= laws:
            failed.append(m)
    ok = not failed and len(algebras) == 258
    criterion(6, ok, f"{len(algebras) - len(failed)}/{len(algebras)} quasi-involutive algebras "
                     "of size <= 4 expand to bi-residuated ones")
    assert ok


def test_criterion_7_translated_double_negation(criterion):
    fs = list(formulas(3, ("p", "q")))
    bad, slowest = [], 0.0
    for f in fs:
        start = time.perf_counter()
        ok = lemma1_check(f, cfg=SearchConfig(time_budget=BUDGET))
        t = time.perf_counter() - start
        slowest = max(slowest, t)
        if not ok or t >= BUDGET:
            bad.append(f)
    ok = not bad
    criterion(7, ok, f"{len(fs) - len(bad)}/{len(fs)} formulas, slowest {slowest:.3f}s")
    assert ok


def test_criterion_8_canonical_invariance(criterion):
    rng = random.Random(2024)
    goals = []
    while len(goals) < 200:
        s = random_sequent(rng, 12)
        if symbol_size(s) <= 12:
            goals.append(s)
    mismatches = 0
    kinds = {}
    for g in goals:
        kind = Prover(SearchConfig(time_budget=BUDGET)).prove(g).kind
        kinds[kind] = kinds.get(kind, 0) + 1
        if Prover(SearchConfig(time_budget=BUDGET, memoize=False)).prove(g).kind != kind:
            mismatches += 1
            continue
        for _ in range(5):
            other = Sequent(shuffled(g.antecedent, rng), g.succedent)
            if Prover(SearchConfig(time_budget=BUDGET)).prove(other).kind != kind:
                mismatches += 1
                break
    ok = mismatches == 0 and "resource_exceeded" not in kinds
    criterion(8, ok, f"200 sequents x 5 permutations, memo on/off; outcomes {kinds}, "
                     f"{mismatches} mismatches")
    assert ok
