"""Derivation checking.

The checks here are written from the premises towards the conclusion and do
not reuse the prover's backward rule generator, so they can certify prover
output.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .formula import BOT, Arrow, Formula, Fuse, Join, Meet, Star, Under, neg
from .rules import ARITY, Derivation, Rule, RuleSet
from .structure import (Comma, Leaf, Semi, Sequent, SimpleSequent, comma,
                        contexts, items, leaf, leaf_contexts, semi)


@dataclass
class CheckFailure:
    node: Derivation
    message: str

    def __str__(self):
        from .syntax import print_sequent
        return f"{self.node.rule.value} at {print_sequent(self.node.conclusion, True)}: {self.message}"


def first_failure(d: Derivation, rule_set, allow_cut: bool = False,
                  assumptions=()) -> Optional[CheckFailure]:
    """The first node (pre-order) that is not a correct rule instance."""
    rs = RuleSet(rule_set)
    allowed = set(rs.rules)
    if allow_cut:
        allowed.add(Rule.Cut)
    if assumptions:
        allowed.add(Rule.Hyp)
    assumptions = set(assumptions)
    check = _check_structured if rs.structured else _check_simple
    for node in d.nodes():
        if node.rule not in allowed:
            return CheckFailure(node, f"rule not in {rs.value}")
        if len(node.premises) != ARITY[node.rule]:
            return CheckFailure(node, f"expected {ARITY[node.rule]} premises")
        msg = check(node, assumptions)
        if msg:
            return CheckFailure(node, msg)
    return None


def check_derivation(d: Derivation, rule_set=RuleSet.GB, allow_cut: bool = False) -> bool:
    return first_failure(d, rule_set, allow_cut) is None


def check_simple_derivation(d: Derivation, system=RuleSet.G, assumptions=()) -> bool:
    rs = RuleSet(system)
    if rs.structured:
        raise ValueError("simple derivations are checked against g or qg")
    return first_failure(d, rs, assumptions=assumptions) is None


# structured calculi

def _check_structured(node: Derivation, assumptions) -> Optional[str]:
    c = node.conclusion
    ps = [p.conclusion for p in node.premises]
    if type(c) is not Sequent or any(type(p) is not Sequent for p in ps):
        return "structured sequents expected"
    ok = _STRUCTURED[node.rule](c, ps)
    return None if ok else "premises do not match the rule schema"


def _id(c, ps):
    return type(c.antecedent) is Leaf and c.antecedent.formula == c.succedent


def _dot_r(c, ps):
    f = c.succedent
    return (type(f) is Fuse and ps[0].succedent == f.left and ps[1].succedent == f.right
            and comma(ps[0].antecedent, ps[1].antecedent) == c.antecedent)


def _star_r(c, ps):
    f = c.succedent
    return (type(f) is Star and ps[0].succedent == f.left and ps[1].succedent == f.right
            and semi(ps[0].antecedent, ps[1].antecedent) == c.antecedent)


def _under_r(c, ps):
    f, p = c.succedent, ps[0]
    return (type(f) is Under and p.succedent == f.right
            and p.antecedent == comma(leaf(f.left), c.antecedent))


def _arrow_r(c, ps):
    f, p = c.succedent, ps[0]
    return (type(f) is Arrow and p.succedent == f.right
            and p.antecedent == semi(leaf(f.left), c.antecedent))


def _neg_r(c, ps):
    f = c.succedent
    return type(f) is Arrow and f.right is BOT and _arrow_r(c, ps)


def _meet_r(c, ps):
    f = c.succedent
    return (type(f) is Meet and all(p.antecedent == c.antecedent for p in ps)
            and ps[0].succedent == f.left and ps[1].succedent == f.right)


def _join_r(c, ps):
    f, p = c.succedent, ps[0]
    return (type(f) is Join and p.antecedent == c.antecedent
            and p.succedent in (f.left, f.right))


def _pairs_in(s, kind):
    """Contexts of ``s`` whose hole holds two leaves joined by ``kind``."""
    for ctx, sub in contexts(s):
        if type(sub) is kind:
            kids = sub.children if kind is Comma else (sub.left, sub.right)
            if len(kids) == 2 and all(type(k) is Leaf for k in kids):
                yield ctx, kids[0].formula, kids[1].formula


def _dot_l(c, ps):
    p = ps[0]
    if p.succedent != c.succedent:
        return False
    for ctx, a, b in _pairs_in(p.antecedent, Comma):
        if c.antecedent in (ctx.fill(leaf(Fuse(a, b))), ctx.fill(leaf(Fuse(b, a)))):
            return True
    return False


def _star_l(c, ps):
    p = ps[0]
    if p.succedent != c.succedent:
        return False
    for ctx, a, b in _pairs_in(p.antecedent, Semi):
        if c.antecedent in (ctx.fill(leaf(Star(a, b))), ctx.fill(leaf(Star(b, a)))):
            return True
    return False


def _meet_l(c, ps):
    p = ps[0]
    if p.succedent != c.succedent:
        return False
    for ctx, f in leaf_contexts(c.antecedent):
        if type(f) is Meet and p.antecedent in (ctx.fill(leaf(f.left)), ctx.fill(leaf(f.right))):
            return True
    return False


def _join_l(c, ps):
    if any(p.succedent != c.succedent for p in ps):
        return False
    for ctx, f in leaf_contexts(c.antecedent):
        if (type(f) is Join and ps[0].antecedent == ctx.fill(leaf(f.left))
                and ps[1].antecedent == ctx.fill(leaf(f.right))):
            return True
    return False


def _residual_l(kind, join):
    def check(c, ps):
        minor, major = ps
        if major.succedent != c.succedent:
            return False
        for ctx, b in leaf_contexts(major.antecedent):
            principal = leaf(kind(minor.succedent, b))
            if ctx.fill(join(minor.antecedent, principal)) == c.antecedent:
                return True
        return False
    return check


def _neg_l(c, ps):
    p = ps[0]
    return (c.succedent is BOT
            and c.antecedent == semi(p.antecedent, leaf(neg(p.succedent))))


def _bot(c, ps):
    p = ps[0]
    return p.succedent is BOT and any(sub == p.antecedent for _, sub in contexts(c.antecedent))


def _rbot(c, ps):
    p = ps[0]
    if c.succedent is not BOT or p.succedent is not BOT or type(p.antecedent) is not Semi:
        return False
    a = p.antecedent
    for grouped, other in ((a.left, a.right), (a.right, a.left)):
        parts = items(grouped)
        n = len(parts)
        for k in range(1, n):
            for idx in combinations(range(n), k):
                moved = [parts[i] for i in idx]
                kept = [parts[i] for i in range(n) if i not in idx]
                if semi(comma(*kept, other), comma(*moved)) == c.antecedent:
                    return True
    return False


def _ko_l(c, ps):
    from .systems import ko, TranslationError
    p = ps[0]
    if p.succedent != c.succedent:
        return False
    for ctx, f in leaf_contexts(c.antecedent):
        try:
            t = ko(f)
        except TranslationError:
            continue
        if ctx.fill(leaf(t)) == p.antecedent:
            return True
    return False


def _ko_r(c, ps):
    from .systems import ko, TranslationError
    p = ps[0]
    try:
        return p.antecedent == c.antecedent and p.succedent == ko(c.succedent)
    except TranslationError:
        return False


def _cut(c, ps):
    minor, major = ps
    if major.succedent != c.succedent:
        return False
    for ctx, f in leaf_contexts(major.antecedent):
        if f == minor.succedent and ctx.fill(minor.antecedent) == c.antecedent:
            return True
    return False


_STRUCTURED = {
    Rule.Id: _id,
    Rule.DotR: _dot_r, Rule.StarR: _star_r, Rule.UnderR: _under_r,
    Rule.ArrowR: _arrow_r, Rule.NegR: _neg_r, Rule.MeetR: _meet_r, Rule.JoinR: _join_r,
    Rule.DotL: _dot_l, Rule.StarL: _star_l, Rule.MeetL: _meet_l, Rule.JoinL: _join_l,
    Rule.UnderL: _residual_l(Under, comma), Rule.ArrowL: _residual_l(Arrow, semi),
    Rule.NegL: _neg_l, Rule.BotRule: _bot, Rule.RBot: _rbot,
    Rule.KoL: _ko_l, Rule.KoR: _ko_r, Rule.Cut: _cut,
    Rule.Hyp: lambda c, ps: False,
}


# single-antecedent calculi

def _unordered(f: Formula, x: Formula, y: Formula) -> bool:
    return type(f) is Fuse and ((f.left == x and f.right == y) or (f.left == y and f.right == x))


def _other(f: Formula, x: Formula):
    """The operand of fusion ``f`` next to ``x``, or None."""
    if type(f) is not Fuse:
        return None
    if f.left == x:
        return f.right
    if f.right == x:
        return f.left
    return None


def _negated(f: Formula):
    return f.left if type(f) is Arrow and f.right is BOT else None


def _check_simple(node: Derivation, assumptions) -> Optional[str]:
    c = node.conclusion
    ps = [p.conclusion for p in node.premises]
    if type(c) is not SimpleSequent or any(type(p) is not SimpleSequent for p in ps):
        return "simple sequents expected"
    a, b = c.antecedent, c.succedent
    r = node.rule
    if r is Rule.Id:
        ok = a == b
    elif r is Rule.DN2:
        ok = a == neg(neg(b))
    elif r is Rule.Hyp:
        ok = c in assumptions
    elif r is Rule.Res:
        # a.b => c  /  b => a\c
        p = ps[0]
        ok = type(b) is Under and p.succedent == b.right and _unordered(p.antecedent, b.left, a)
    elif r is Rule.ResInv:
        # b => a\c  /  a.b => c
        p = ps[0]
        ok = (type(p.succedent) is Under and p.succedent.right == b
              and _unordered(a, p.succedent.left, p.antecedent))
    elif r is Rule.MeetL:
        p = ps[0]
        ok = type(a) is Meet and p.succedent == b and p.antecedent in (a.left, a.right)
    elif r is Rule.MeetR:
        ok = (type(b) is Meet and ps[0].antecedent == a == ps[1].antecedent
              and ps[0].succedent == b.left and ps[1].succedent == b.right)
    elif r is Rule.JoinL:
        ok = (type(a) is Join and ps[0].succedent == b == ps[1].succedent
              and ps[0].antecedent == a.left and ps[1].antecedent == a.right)
    elif r is Rule.JoinR:
        p = ps[0]
        ok = type(b) is Join and p.antecedent == a and p.succedent in (b.left, b.right)
    elif r is Rule.Neg:
        # x.y => ~z  /  z.y => ~x
        p = ps[0]
        x, z = _negated(b), _negated(p.succedent)
        y = _other(p.antecedent, x) if x is not None else None
        ok = z is not None and y is not None and _unordered(a, z, y)
    elif r is Rule.MN:
        # x => ~z  /  z => ~x
        p = ps[0]
        ok = _negated(b) == p.antecedent and _negated(p.succedent) == a and _negated(b) is not None
    elif r is Rule.Cut:
        ok = (ps[0].antecedent == a and ps[1].succedent == b
              and ps[0].succedent == ps[1].antecedent)
    else:
        return "not a rule of the single-antecedent calculi"
    return None if ok else "premises do not match the rule schema"
