"""Deciders for the single-antecedent calculi G and qG.

G and qG contain cut and are never searched directly.  A qG sequent
``a => b`` is decided by searching ``a => b`` in Gb, which proves exactly the
same negation-language sequents.  A G sequent is decided by first applying
the Kolmogorov translation to both sides and deciding the result in qG.
"""
from __future__ import annotations

from typing import Optional

from .formula import BOT, Arrow, Atom, Formula, Fuse, Join, Meet, Under, in_negation_language, neg
from .prover import Prover, SearchConfig, SearchLimit
from .rules import Derivation, Rule, RuleSet
from .structure import Sequent, SimpleSequent, leaf


class TranslationError(ValueError):
    pass


def ko(f: Formula) -> Formula:
    """Kolmogorov double-negation translation.

    Only defined on the negation language; ``*``, ``bot`` and arrows other
    than negations are rejected.
    """
    t = type(f)
    if t is Atom:
        return neg(neg(f))
    if t is Arrow:
        if f.right is not BOT:
            raise TranslationError("ko is undefined on '->' other than negation")
        return neg(ko(f.left))
    if t in (Meet, Join, Fuse, Under):
        return neg(neg(t(ko(f.left), ko(f.right))))
    raise TranslationError(f"ko is undefined on {type(f).__name__}")


def _require_negation_language(*fs):
    for f in fs:
        if not in_negation_language(f):
            raise TranslationError(f"{f} is outside the negation language")


def _prover(prover: Optional[Prover], rule_set=RuleSet.GB, cfg: Optional[SearchConfig] = None):
    if prover is not None:
        return prover
    cfg = cfg or SearchConfig()
    cfg.rule_set = rule_set
    return Prover(cfg)


def decide_qg(a: Formula, b: Formula, prover: Optional[Prover] = None,
              cfg: Optional[SearchConfig] = None) -> bool:
    """Whether ``a => b`` is provable in qG.

    Raises :class:`SearchLimit` when the budget runs out, so an exhausted
    search is never mistaken for a refutation.
    """
    _require_negation_language(a, b)
    return _prover(prover, RuleSet.GB, cfg).provable(Sequent(leaf(a), b))


def decide_g(a: Formula, b: Formula, prover: Optional[Prover] = None,
             cfg: Optional[SearchConfig] = None) -> bool:
    _require_negation_language(a, b)
    return decide_qg(ko(a), ko(b), prover, cfg)


def decide(a: Formula, b: Formula, system, prover=None, cfg=None) -> bool:
    rs = RuleSet(system)
    if rs is RuleSet.G:
        return decide_g(a, b, prover, cfg)
    if rs is RuleSet.QG:
        return decide_qg(a, b, prover, cfg)
    if rs is RuleSet.GB:
        return _prover(prover, RuleSet.GB, cfg).provable(Sequent(leaf(a), b))
    raise ValueError(f"no decider for {rs.value}")


def lemma1_check(a: Formula, prover: Optional[Prover] = None,
                 cfg: Optional[SearchConfig] = None) -> bool:
    """Decide ``ko(~~a) => ko(a)`` in qG."""
    _require_negation_language(a)
    return decide_qg(ko(neg(neg(a))), ko(a), prover, cfg)


def emit_gc_derivation(a: Formula, b: Formula, prover: Optional[Prover] = None,
                       cfg: Optional[SearchConfig] = None) -> Optional[Derivation]:
    """A Gc derivation of ``a => b``, or None when ``a => b`` is not G-provable.

    The translated sequent is proved in qGc and two ko steps at the root
    bring it back to ``a => b``.
    """
    _require_negation_language(a, b)
    p = _prover(prover, RuleSet.QGC, cfg)
    if RuleSet(p.config.rule_set) is not RuleSet.QGC:
        raise ValueError("emit_gc_derivation needs a qgc prover")
    ka, kb = ko(a), ko(b)
    inner = p.prove(Sequent(leaf(ka), kb))
    if inner.kind == "resource_exceeded":
        raise SearchLimit(inner.reason)
    if not inner:
        return None
    d = inner.derivation
    d = Derivation(Sequent(leaf(a), kb), Rule.KoL, (d,))
    return Derivation(Sequent(leaf(a), b), Rule.KoR, (d,))


# Hand-built derivations in the single-antecedent calculi.

def _node(a, b, rule, *premises) -> Derivation:
    return Derivation(SimpleSequent(a, b), rule, premises)


def _hyp(a, b) -> Derivation:
    return _node(a, b, Rule.Hyp)


def _cut(d1: Derivation, d2: Derivation) -> Derivation:
    return _node(d1.conclusion.antecedent, d2.conclusion.succedent, Rule.Cut, d1, d2)


def dn1_derivation(a: Formula) -> Derivation:
    """``a => ~~a`` by MN from the axiom ``~a => ~a``."""
    return _node(a, neg(neg(a)), Rule.MN, _node(neg(a), neg(a), Rule.Id))


def contrapose(d: Derivation, alpha: Optional[Formula] = None) -> Derivation:
    """From ``alpha . b => c`` derive ``~c . b => ~alpha``.

    With ``alpha`` omitted the fusion is dropped: from ``a => c`` derive
    ``~c => ~a``.  Both are a cut against ``c => ~~c`` followed by the
    negation rule.
    """
    c = d.conclusion.succedent
    to_dn = _cut(d, dn1_derivation(c))
    if alpha is None:
        a = d.conclusion.antecedent
        return _node(neg(c), neg(a), Rule.MN, to_dn)
    lhs = d.conclusion.antecedent
    if type(lhs) is not Fuse or alpha not in (lhs.left, lhs.right):
        raise ValueError("alpha must be an operand of the antecedent fusion")
    rest = lhs.right if lhs.left == alpha else lhs.left
    return _node(Fuse(neg(c), rest), neg(alpha), Rule.Neg, to_dn)


def monotonicity_derivation(d1: Derivation, d2: Derivation) -> Derivation:
    """From ``a1 => b1`` and ``a2 => b2`` derive ``a1 . a2 => b1 . b2``."""
    a1, b1 = d1.conclusion.antecedent, d1.conclusion.succedent
    a2, b2 = d2.conclusion.antecedent, d2.conclusion.succedent
    f1, f2 = Fuse(b1, a2), Fuse(b1, b2)
    left = _node(b1, Under(a2, f1), Rule.Res, _node(f1, f1, Rule.Id))
    left = _node(Fuse(a1, a2), f1, Rule.ResInv, _cut(d1, left))
    right = _node(b2, Under(b1, f2), Rule.Res, _node(f2, f2, Rule.Id))
    right = _node(f1, f2, Rule.ResInv, _cut(d2, right))
    return _cut(left, right)


def dn_under_derivation(a: Formula, b: Formula) -> Derivation:
    """``~~(~~a \\ ~~b) => ~~a \\ ~~b`` without the DN2 axiom."""
    A, B = neg(neg(a)), neg(neg(b))
    U = Under(A, B)
    step = _node(Fuse(A, U), B, Rule.ResInv, _node(U, U, Rule.Id))
    step = contrapose(step, U)               # ~B . A => ~U
    step = contrapose(step, neg(B))          # ~~U . A => ~~B
    back = contrapose(dn1_derivation(neg(b)))  # ~~~~b => ~~b
    step = _cut(step, back)
    return _node(neg(neg(U)), U, Rule.Res, step)


def dn_under_converse(a: Formula, b: Formula) -> Derivation:
    U = Under(neg(neg(a)), neg(neg(b)))
    return dn1_derivation(U)


def transcribed_derivations() -> list[tuple[str, RuleSet, Derivation]]:
    """A small corpus of closed single-antecedent derivations."""
    p, q, r, s = Atom("p"), Atom("q"), Atom("r"), Atom("s")
    id_p = _node(p, p, Rule.Id)
    id_q = _node(q, q, Rule.Id)
    p_to_pr = _node(p, Join(p, r), Rule.JoinR, id_p)
    sq_to_q = _node(Meet(s, q), q, Rule.MeetL, id_q)
    out = [
        ("dn1", RuleSet.QG, dn1_derivation(p)),
        ("dn1 compound", RuleSet.QG, dn1_derivation(Fuse(p, q))),
        ("dn2", RuleSet.G, _node(neg(neg(p)), p, Rule.DN2)),
        ("mon atoms", RuleSet.QG, monotonicity_derivation(id_p, id_q)),
        ("mon lattice", RuleSet.QG, monotonicity_derivation(p_to_pr, sq_to_q)),
        ("dn under", RuleSet.QG, dn_under_derivation(p, q)),
        ("dn under converse", RuleSet.QG, dn_under_converse(p, q)),
        ("contraposition", RuleSet.QG, contrapose(p_to_pr)),
        ("dn2 under mon", RuleSet.G,
         monotonicity_derivation(_node(neg(neg(p)), p, Rule.DN2), id_q)),
    ]
    return out
