import random

import pytest

from incrl.algebra import AlgebraClass, expand, valid
from incrl.checker import check_derivation, check_simple_derivation
from incrl.enumeration import enumerate_algebras
from incrl.formula import BOT, Arrow, Atom, Fuse, Meet, Star, Under, neg
from incrl.generate import NEG_LANGUAGE, formulas, random_formula
from incrl.rules import Derivation, Rule, RuleSet
from incrl.structure import Sequent, SimpleSequent, leaf
from incrl.systems import (TranslationError, contrapose, decide, decide_g, decide_qg,
                           dn_under_derivation, emit_gc_derivation, ko,
                           lemma1_check, monotonicity_derivation, transcribed_derivations)

p, q = Atom("p"), Atom("q")


def nn(f):
    return neg(neg(f))


def test_ko_examples():
    assert ko(p) == nn(p)
    assert ko(Under(p, q)) == nn(Under(nn(p), nn(q)))
    assert ko(neg(p)) == neg(nn(p))


@pytest.mark.parametrize("f", [Star(p, q), Arrow(p, q), BOT])
def test_ko_rejects_other_connectives(f):
    with pytest.raises(TranslationError):
        ko(f)


def test_ko_output_is_a_negation():
    for f in formulas(3):
        t = ko(f)
        assert type(t) is Arrow and t.right is BOT


def test_decide_examples():
    assert decide_qg(p, nn(p))
    assert not decide_qg(nn(p), p)
    assert decide_qg(Fuse(p, Under(p, q)), q)
    assert decide_g(nn(p), p)
    assert decide_g(p, nn(p))
    assert not decide_g(p, q)
    assert decide(nn(p), p, "g") and not decide(nn(p), p, "qg")
    assert decide(p, nn(p), RuleSet.GB)
    with pytest.raises(ValueError):
        decide(p, p, "qgc")


def test_deciders_reject_star():
    with pytest.raises(TranslationError):
        decide_qg(Star(p, q), p)


def test_translated_double_negation_collapses():
    assert lemma1_check(p)
    assert lemma1_check(Meet(p, q))
    assert lemma1_check(neg(p))


def test_simple_derivation_checks():
    idp = Derivation(SimpleSequent(p, p), Rule.Id, ())
    idq = Derivation(SimpleSequent(q, q), Rule.Id, ())
    mon = monotonicity_derivation(idp, idq)
    assert mon.conclusion == SimpleSequent(Fuse(p, q), Fuse(p, q))
    assert check_simple_derivation(mon, RuleSet.G)
    assert check_simple_derivation(dn_under_derivation(p, q), RuleSet.QG)
    dn2 = Derivation(SimpleSequent(nn(p), p), Rule.DN2, ())
    assert check_simple_derivation(dn2, RuleSet.G)
    assert not check_simple_derivation(dn2, RuleSet.QG)
    with pytest.raises(ValueError):
        check_simple_derivation(mon, RuleSet.GB)


def test_simple_checker_rejects_bad_nodes():
    idp = Derivation(SimpleSequent(p, p), Rule.Id, ())
    bad = Derivation(SimpleSequent(p, neg(neg(q))), Rule.MN,
                     (Derivation(SimpleSequent(neg(p), neg(p)), Rule.Id, ()),))
    assert not check_simple_derivation(bad, RuleSet.QG)
    assert not check_simple_derivation(Derivation(SimpleSequent(p, q), Rule.Id, ()))
    hyp = Derivation(SimpleSequent(p, q), Rule.Hyp, ())
    assert not check_simple_derivation(hyp)
    assert check_simple_derivation(hyp, assumptions=[SimpleSequent(p, q)])
    assert check_simple_derivation(contrapose(idp), RuleSet.QG)


def test_contrapose_with_fusion():
    d = monotonicity_derivation(Derivation(SimpleSequent(p, p), Rule.Id, ()),
                                Derivation(SimpleSequent(q, q), Rule.Id, ()))
    c = contrapose(d, p)
    assert c.conclusion == SimpleSequent(Fuse(neg(Fuse(p, q)), q), neg(p))
    assert check_simple_derivation(c, RuleSet.QG)
    with pytest.raises(ValueError):
        contrapose(d, neg(p))


def test_transcribed_derivations():
    items = transcribed_derivations()
    assert len(items) >= 8
    for name, system, d in items:
        assert check_simple_derivation(d, system), name
        a, b = d.conclusion.antecedent, d.conclusion.succedent
        # embedding: every G-derivable sequent translates to a qG theorem
        assert decide_qg(ko(a), ko(b)), name
        assert decide_g(a, b), name
        if system is RuleSet.QG:
            assert decide_qg(a, b), name


@pytest.mark.parametrize("a,b,exists", [(nn(p), p, True), (p, p, True), (p, q, False)])
def test_emit_gc(a, b, exists):
    d = emit_gc_derivation(a, b)
    assert (d is not None) == exists
    if d is not None:
        assert d.conclusion == Sequent(leaf(a), b)
        assert [d.rule, d.premises[0].rule] == [Rule.KoR, Rule.KoL]
        assert check_derivation(d, RuleSet.GC)
        assert check_derivation(d.premises[0].premises[0], RuleSet.QGC)
        assert not check_derivation(d, RuleSet.QGC)


def test_emit_gc_agrees_with_decide_g():
    rng = random.Random(3)
    for _ in range(150):
        a = random_formula(rng, rng.randint(1, 6), ("p", "q"), NEG_LANGUAGE, bot_weight=0)
        b = random_formula(rng, rng.randint(1, 6), ("p", "q"), NEG_LANGUAGE, bot_weight=0)
        d = emit_gc_derivation(a, b)
        assert (d is not None) == decide_g(a, b)
        if d is not None:
            assert check_derivation(d, RuleSet.GC)


def test_g_is_involutive_on_samples():
    rng = random.Random(7)
    for _ in range(100):
        a = random_formula(rng, rng.randint(1, 8), ("p", "q"), NEG_LANGUAGE, bot_weight=0)
        assert decide_g(nn(a), a) and decide_g(a, nn(a))


def test_qg_theorems_hold_in_small_algebras():
    algebras = list(enumerate_algebras(3, AlgebraClass.QINCRL))
    expanded = [expand(m) for m in algebras]
    rng = random.Random(13)
    hits = 0
    for _ in range(300):
        a = random_formula(rng, rng.randint(1, 6), ("p", "q"), NEG_LANGUAGE, bot_weight=0)
        b = random_formula(rng, rng.randint(1, 6), ("p", "q"), NEG_LANGUAGE, bot_weight=0)
        if not decide_qg(a, b):
            continue
        hits += 1
        s = SimpleSequent(a, b)
        assert all(valid(s, m, use_neg=True) for m in algebras)
        assert all(valid(s, m) for m in expanded)
    assert hits > 20
