import json
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incrl.algebra import (AlgebraClass, AlgebraFormatError, ExpandError,
                           MissingOperation, NegationClass, algebra_from_json, algebra_to_json,
                           assignments, check_class, classify_negation, counterexample,
                           dump_algebra, evaluate, evaluate_all, example1, expand, load_algebra,
                           no_unit_witness, valid)
from incrl.enumeration import enumerate_algebras
from incrl.formula import BOT, Arrow, Atom, Fuse, Join, Meet, Star, Under, atoms
from incrl.generate import FULL_LANGUAGE, random_formula
from incrl.syntax import parse_formula as F, parse_sequent as S, parse_simple_sequent

from strategies import formulas
import oracles

CHAIN2 = """
elements: 0 1
leq:
  1 1
  0 1
neg: 1 0
dot:
  0 0
  0 1
under:
  1 1
  0 1
"""


@pytest.fixture(scope="module")
def ex():
    return example1()


def test_example1_tables(ex):
    i = ex.index
    assert list(ex.carrier) == list("abcde")
    assert ex.dot[i("a"), i("a")] == i("b")
    assert ex.neg[i("c")] == i("d")
    assert ex.under[i("d"), i("a")] == i("c")
    assert ex.least() == i("c") and ex.greatest() == i("d")


def test_tables_are_read_only(ex):
    with pytest.raises(ValueError):
        ex.dot[0, 0] = 1


def test_load_one_element():
    m = load_algebra("elements: x\nleq: 1\nneg: x\ndot: x\nunder: x\n")
    assert m.size == 1
    assert check_class(m, "IncRL-").passed
    assert not no_unit_witness(m)


@pytest.mark.parametrize("text", [
    "elements: a b\nleq:\n 1 1\n 0 1\ndot:\n a a\n",           # missing row
    "elements: a b\nleq:\n 1 1\n",                              # missing row in leq
    "elements: a a\nleq:\n 1 0\n 0 1\n",                        # duplicate element
    "elements: a b\nleq:\n 1 1\n 0 1\nneg: a z\n",              # unknown element
    "elements: a b\nleq:\n 1 2\n 0 1\n",                        # not 0/1
    "elements: a b\nfoo: a\nleq:\n 1 1\n 0 1\n",                # unknown section
    "leq: 1\n",                                                 # no elements
])
def test_load_errors(text):
    with pytest.raises(AlgebraFormatError):
        load_algebra(text)


def test_text_and_json_round_trip(ex):
    again = load_algebra(dump_algebra(ex))
    assert algebra_to_json(again) == algebra_to_json(ex)
    obj = json.loads(json.dumps(algebra_to_json(expand(ex))))
    back = algebra_from_json(obj)
    assert algebra_to_json(back) == obj
    assert algebra_to_json(load_algebra(json.dumps(obj))) == obj


def test_example1_is_incrl(ex):
    report = check_class(ex, AlgebraClass.INCRL)
    assert report.passed
    assert report.result("res").checked == 125
    assert report.result("in").checked == 25 and report.result("dn").checked == 5
    assert no_unit_witness(ex)
    assert classify_negation(ex) is NegationClass.INVOLUTIVE


def test_edited_negation_fails_dn_at_a(ex):
    neg = ex.neg.copy()
    neg[ex.index("a")] = ex.index("b")
    report = check_class(ex.replace(neg=neg), "IncRL-")
    dn = report.result("dn")
    assert not dn.passed and dn.witness == ("a",)
    assert not report.passed and dn in report.failures()


def test_chain2():
    m = load_algebra(CHAIN2)
    assert check_class(m, "cRL-").passed
    assert classify_negation(m) is NegationClass.INVOLUTIVE
    assert not no_unit_witness(m)


def test_not_a_lattice_stops_early():
    m = load_algebra("elements: a b\nleq:\n 1 0\n 0 1\ndot:\n a a\n a a\nunder:\n a a\n a a\n")
    report = check_class(m, "cRL-")
    assert not report.result("meet exists").passed
    assert not report.passed


def test_missing_table():
    m = load_algebra("elements: a\nleq: 1\n")
    assert check_class(m, "lattice").passed
    with pytest.raises(MissingOperation):
        check_class(m, "cRL-")
    with pytest.raises(MissingOperation):
        evaluate(F("p . p"), m, {"p": "a"})


def test_class_names_parse():
    assert AlgebraClass.parse("incrl-") is AlgebraClass.INCRL
    assert AlgebraClass.parse("qIncRL⁻") is AlgebraClass.QINCRL
    assert AlgebraClass.parse("cbRL") is AlgebraClass.CBRL
    with pytest.raises(ValueError):
        AlgebraClass.parse("boolean")


def test_classify_none_when_ctr_fails():
    m = load_algebra(CHAIN2)
    m = m.replace(neg=np.array([0, 1]))
    assert classify_negation(m) is NegationClass.NONE


def test_classify_agrees_with_oracle():
    for m in enumerate_algebras(3, "mncRL-"):
        n = m.size
        leq = m.leq.tolist()
        laws = oracles.neg_laws(n, leq, m.dot.tolist(), m.under.tolist(), m.neg.tolist())
        got = classify_negation(m)
        if laws["smn"] and laws["dn"]:
            assert got is NegationClass.INVOLUTIVE
        elif laws["smn"] and laws["dn1"]:
            assert got is NegationClass.QUASI_INVOLUTIVE
        elif laws["dn2"]:
            assert got is NegationClass.DEMORGAN
        else:
            assert got is NegationClass.MINIMAL


def test_expand_examples(ex):
    e = expand(ex)
    i = ex.index
    assert e.star[i("a"), i("b")] == i("d")
    assert e.arrow[i("a"), i("c")] == i("a")
    assert e.star[i("a"), ex.neg[i("a")]] == i("c") == e.bottom
    assert check_class(e, "cbRL-").passed
    assert all(e.neg[a] == e.arrow[a, e.bottom] for a in range(e.size))


def test_expand_rejects_weak_negation():
    m = load_algebra(CHAIN2).replace(neg=np.array([0, 1]))
    with pytest.raises(ExpandError):
        expand(m)


def test_evaluate_examples(ex):
    assert ex.name(evaluate(F("p . q"), ex, {"p": "a", "q": "a"})) == "b"
    for x in ex.carrier:
        assert ex.name(evaluate(F("p /\\ p"), ex, {"p": x})) == x
    assert ex.name(evaluate(F("~~p"), ex, {"p": "c"}, use_neg=True)) == "c"
    assert ex.name(evaluate(F("~~p"), expand(ex), {"p": "c"})) == "c"
    with pytest.raises(MissingOperation):
        evaluate(F("~p"), ex, {"p": "a"})
    with pytest.raises(KeyError):
        evaluate(F("p . q"), ex, {"p": "a"})


def test_valid_examples(ex):
    assert valid(parse_simple_sequent("p . q => q . p"), ex)
    assert valid(S("p , q => q . p"), ex)
    assert valid(S("~~p => p"), ex, use_neg=True)
    assert valid(S("~~p => p"), expand(ex))
    for m in [ex, load_algebra(CHAIN2)]:
        assert not valid(S("p => q"), m)
        mu = counterexample(S("p => q"), m)
        assert not m.leq[m.index(mu["p"]), m.index(mu["q"])]


def _reference_eval(f, m, mu):
    """Independent recursive evaluator used to cross-check."""
    if isinstance(f, Atom):
        return mu[f.name]
    if f is BOT:
        return m.bottom
    x, y = _reference_eval(f.left, m, mu), _reference_eval(f.right, m, mu)
    if isinstance(f, Meet):
        return oracles.glb(m.size, m.leq.tolist(), x, y)
    if isinstance(f, Join):
        return oracles.lub(m.size, m.leq.tolist(), x, y)
    table = {Fuse: m.dot, Under: m.under, Star: m.star, Arrow: m.arrow}[type(f)]
    return int(table[x, y])


def test_evaluation_is_homomorphic(ex):
    e = expand(ex)
    rng = random.Random(2)
    names = ["p", "q", "r"]
    grid = assignments(names, e.size)
    for _ in range(200):
        f = random_formula(rng, rng.randint(1, 12), names, FULL_LANGUAGE)
        col = rng.randrange(grid.shape[1])
        mu = {x: int(grid[i, col]) for i, x in enumerate(names)}
        want = _reference_eval(f, e, mu)
        assert evaluate(f, e, mu) == want
        assert evaluate_all(f, e, names, grid)[col] == want


@settings(max_examples=100, deadline=None)
@given(formulas.filter(lambda f: not (atoms(f) - {"p", "q", "r"})), st.integers(0, 124))
def test_vectorized_matches_scalar(f, col):
    e = expand(example1())
    names = ["p", "q", "r"]
    grid = assignments(names, e.size)
    mu = {x: int(grid[i, col]) for i, x in enumerate(names)}
    assert evaluate_all(f, e, names, grid)[col] == evaluate(f, e, mu)


# the fusion, residual and negation laws as inequations; a/b is read as b\a

FUSION = ["a . b => b . a", "b . (b \\ a) => a", "a . (b \\/ c) => (a . b) \\/ (a . c)",
          "(a . b) \\/ (a . c) => a . (b \\/ c)", "(a \\ c) . b => a \\ (c . b)",
          "(a \\ b) . (b \\ c) => a \\ c", "a \\ c => (b . a) \\ (b . c)",
          "b \\ (a \\ c) => (a . b) \\ c", "(a . b) \\ c => b \\ (a \\ c)"]
RESIDUAL = ["c \\ (a /\\ b) => (c \\ a) /\\ (c \\ b)", "(c \\ a) /\\ (c \\ b) => c \\ (a /\\ b)",
            "b \\ c => (a \\ b) \\ (a \\ c)", "a \\ b => (b \\ c) \\ (a \\ c)",
            "a \\ (b \\ c) => b \\ (a \\ c)", "c => (c \\ a) \\ a", "a \\ b => a \\ b"]
NEGATION = ["a => ~~a", "~~(~~a /\\ ~~b) => ~~a /\\ ~~b", "~~a /\\ ~~b => ~~(~~a /\\ ~~b)",
            "~~(~~a \\ ~~b) => ~~a \\ ~~b", "~~a \\ ~~b => ~~(~~a \\ ~~b)"]


def _conditionals_hold(m):
    n, L, D, U = m.size, m.leq, m.dot, m.under
    r = range(n)
    for a1 in r:
        for b1 in r:
            if not L[a1, b1]:
                continue
            for c in r:
                if not (L[U[b1, c], U[a1, c]] and L[U[c, a1], U[c, b1]]):
                    return False
                for a2 in r:
                    for b2 in r:
                        if L[a2, b2] and not L[D[a1, a2], D[b1, b2]]:
                            return False
    return True


def _laws_hold(m, laws, use_neg=False):
    return all(valid(parse_simple_sequent(t), m, use_neg) for t in laws)


def test_property_list_in_example1(ex):
    assert _laws_hold(ex, FUSION + RESIDUAL)
    assert _laws_hold(ex, NEGATION, use_neg=True)
    assert _conditionals_hold(ex)


def test_property_list_in_enumerated_algebras():
    for m in enumerate_algebras(3, "cRL-"):
        assert _laws_hold(m, FUSION + RESIDUAL) and _conditionals_hold(m)
    for m in enumerate_algebras(3, "qIncRL-"):
        assert _laws_hold(m, NEGATION, use_neg=True)
        L, N, D = m.leq, m.neg, m.dot
        # (ctr) and the fused contraposition
        assert all(not L[a, b] or L[N[b], N[a]] for a in range(m.size) for b in range(m.size))
        assert all(not L[D[a, b], c] or L[D[N[c], b], N[a]]
                   for a in range(m.size) for b in range(m.size) for c in range(m.size))


def test_dn2_fails_in_some_quasi_involutive_algebra():
    s = parse_simple_sequent("~~a => a")
    assert any(not valid(s, m, use_neg=True) for m in enumerate_algebras(3, "qIncRL-"))
