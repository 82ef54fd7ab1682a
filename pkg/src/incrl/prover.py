"""Backward proof search for the cut-free calculi Gb and qGc.

Exchange and associativity live in the data representation, so the only
structural rule left to search is the ``;``-swap rule for sequents with
succedent ``bot``.  That rule preserves the number of symbols and would loop
if applied backwards naively; instead, a goal it applies to is replaced by
its whole orbit under the rule, and the orbit is treated as one search node.

Every other backward step either strictly shrinks the goal or rewrites
``G => p`` (atomic ``p``) into ``G => bot``, so after collapsing orbits the
search graph is acyclic and finite.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .formula import BOT, Arrow, Atom, Formula, Fuse, Join, Meet, Star, Under, walk
from .rules import Derivation, Rule, RuleSet
from .structure import (Comma, Leaf, Semi, Sequent, Structure, comma, contexts,
                        items, leaf, leaf_contexts, semi, symbol_size)


@dataclass
class SearchConfig:
    max_symbol_size: Optional[int] = None
    time_budget: float = 10.0
    memo_capacity: int = 2_000_000
    rule_set: RuleSet = RuleSet.GB
    atomic_id: bool = False
    memoize: bool = True


class Outcome:
    kind = ""

    def __bool__(self):
        return self.kind == "proved"


@dataclass
class Proved(Outcome):
    derivation: Derivation
    kind = "proved"


@dataclass
class Refuted(Outcome):
    kind = "refuted"


@dataclass
class ResourceExceeded(Outcome):
    reason: str
    kind = "resource_exceeded"


class SearchLimit(Exception):
    """Raised by deciders when a search runs out of budget."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@lru_cache(maxsize=None)
def _has_bot(f: Formula) -> bool:
    return any(g is BOT for g in walk(f))


def _structure_has_bot(s: Structure) -> bool:
    if type(s) is Leaf:
        return _has_bot(s.formula)
    if type(s) is Semi:
        return _structure_has_bot(s.left) or _structure_has_bot(s.right)
    return any(_structure_has_bot(c) for c in s.children)


_contexts = lru_cache(maxsize=200_000)(contexts)


@lru_cache(maxsize=200_000)
def _leaf_contexts(s: Structure):
    return tuple(leaf_contexts(s))


def _sub_multisets(xs: tuple) -> Iterator[tuple[tuple, tuple]]:
    """Ordered splits ``(picked, rest)`` with both parts non-empty."""
    n = len(xs)
    seen = set()
    for k in range(1, n):
        for idx in combinations(range(n), k):
            picked = tuple(xs[i] for i in idx)
            tag = tuple(p.key for p in picked)
            if tag in seen:
                continue
            seen.add(tag)
            rest = tuple(xs[i] for i in range(n) if i not in idx)
            yield picked, rest


def rbot_moves(goal: Sequent) -> Iterator[Sequent]:
    """One backward (or forward; the rule is symmetric) step of the swap rule."""
    ant = goal.antecedent
    if goal.succedent is not BOT or type(ant) is not Semi:
        return
    for side, other in ((ant.left, ant.right), (ant.right, ant.left)):
        parts = items(side)
        if len(parts) < 2:
            continue
        for moved, kept in _sub_multisets(parts):
            yield Sequent(semi(comma(*kept, other), comma(*moved)), BOT)


def rbot_orbit(goal: Sequent) -> set[Sequent]:
    seen = {goal}
    todo = [goal]
    while todo:
        g = todo.pop()
        for h in rbot_moves(g):
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return seen


def _orbit_path(start: Sequent, target: Sequent) -> list[Sequent]:
    prev = {start: None}
    q = deque([start])
    while q:
        g = q.popleft()
        if g == target:
            break
        for h in rbot_moves(g):
            if h not in prev:
                prev[h] = g
                q.append(h)
    path = [target]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return path[::-1]


def _right_instances(goal: Sequent, rules) -> Iterator[tuple[Rule, tuple]]:
    ant, f = goal.antecedent, goal.succedent
    t = type(f)
    if t is Fuse and Rule.DotR in rules and type(ant) is Comma:
        for picked, rest in _sub_multisets(ant.children):
            yield Rule.DotR, (Sequent(comma(*picked), f.left), Sequent(comma(*rest), f.right))
    elif t is Star and Rule.StarR in rules and type(ant) is Semi:
        a, b = ant.left, ant.right
        yield Rule.StarR, (Sequent(a, f.left), Sequent(b, f.right))
        if a != b:
            yield Rule.StarR, (Sequent(b, f.left), Sequent(a, f.right))
    elif t is Under and Rule.UnderR in rules:
        yield Rule.UnderR, (Sequent(comma(leaf(f.left), ant), f.right),)
    elif t is Arrow:
        if Rule.ArrowR in rules:
            yield Rule.ArrowR, (Sequent(semi(leaf(f.left), ant), f.right),)
        elif Rule.NegR in rules and f.right is BOT:
            yield Rule.NegR, (Sequent(semi(leaf(f.left), ant), BOT),)
    elif t is Meet and Rule.MeetR in rules:
        yield Rule.MeetR, (Sequent(ant, f.left), Sequent(ant, f.right))
    elif t is Join and Rule.JoinR in rules:
        yield Rule.JoinR, (Sequent(ant, f.left),)
        if f.left != f.right:
            yield Rule.JoinR, (Sequent(ant, f.right),)


def _left_instances(goal: Sequent, rules) -> Iterator[tuple[Rule, tuple]]:
    ant, g = goal.antecedent, goal.succedent
    for ctx, f in _leaf_contexts(ant):
        t = type(f)
        if t is Fuse and Rule.DotL in rules:
            yield Rule.DotL, (Sequent(ctx.fill(comma(leaf(f.left), leaf(f.right))), g),)
        elif t is Star and Rule.StarL in rules:
            yield Rule.StarL, (Sequent(ctx.fill(semi(leaf(f.left), leaf(f.right))), g),)
        elif t is Meet and Rule.MeetL in rules:
            yield Rule.MeetL, (Sequent(ctx.fill(leaf(f.left)), g),)
            if f.left != f.right:
                yield Rule.MeetL, (Sequent(ctx.fill(leaf(f.right)), g),)
        elif t is Join and Rule.JoinL in rules:
            yield Rule.JoinL, (Sequent(ctx.fill(leaf(f.left)), g),
                               Sequent(ctx.fill(leaf(f.right)), g))
    under = Rule.UnderL in rules
    arrow = Rule.ArrowL in rules
    negl = Rule.NegL in rules
    if not (under or arrow or negl):
        return
    if negl and g is BOT and type(ant) is Semi:
        for x, y in ((ant.left, ant.right), (ant.right, ant.left)):
            if type(y) is Leaf and type(y.formula) is Arrow and y.formula.right is BOT:
                yield Rule.NegL, (Sequent(x, y.formula.left),)
    if not (under or arrow):
        return
    for ctx, sub in _contexts(ant):
        if under and type(sub) is Comma:
            done = set()
            ch = sub.children
            for i, c in enumerate(ch):
                if type(c) is Leaf and type(c.formula) is Under and c not in done:
                    done.add(c)
                    f = c.formula
                    delta = comma(*(ch[:i] + ch[i + 1:]))
                    yield Rule.UnderL, (Sequent(delta, f.left), Sequent(ctx.fill(leaf(f.right)), g))
        elif arrow and type(sub) is Semi:
            for x, y in ((sub.left, sub.right), (sub.right, sub.left)):
                if type(y) is Leaf and type(y.formula) is Arrow:
                    f = y.formula
                    yield Rule.ArrowL, (Sequent(x, f.left), Sequent(ctx.fill(leaf(f.right)), g))
                if sub.left == sub.right:
                    break


def _bot_instances(goal: Sequent, rules) -> Iterator[tuple[Rule, tuple]]:
    if Rule.BotRule not in rules:
        return
    ant = goal.antecedent
    if not _structure_has_bot(ant):
        # a sequent D => bot is only derivable when bot occurs inside D
        return
    for ctx, sub in _contexts(ant):
        if ctx.is_trivial and goal.succedent is BOT:
            continue
        if _structure_has_bot(sub):
            yield Rule.BotRule, (Sequent(sub, BOT),)


def backward_instances(goal: Sequent, rules, include_rbot: bool = True,
                       atomic_id: bool = False) -> Iterator[tuple[Rule, tuple]]:
    ant, f = goal.antecedent, goal.succedent
    if Rule.Id in rules and type(ant) is Leaf and ant.formula == f:
        if not atomic_id or type(f) is Atom or f is BOT:
            yield Rule.Id, ()
    seen = set()
    for gen in (_right_instances, _left_instances, _bot_instances):
        for rule, prems in gen(goal, rules):
            k = (rule, prems)
            if k not in seen:
                seen.add(k)
                yield rule, prems
    if include_rbot and Rule.RBot in rules:
        for h in rbot_moves(goal):
            yield Rule.RBot, (h,)


def applicable_rule_instances(goal: Sequent, rule_set=RuleSet.GB) -> list[tuple[Rule, list]]:
    """Every backward instance of every rule of ``rule_set`` at ``goal``.

    Cut is never listed.
    """
    rs = RuleSet(rule_set)
    return [(r, list(p)) for r, p in backward_instances(goal, rs.rules - {Rule.Cut})]


_IN_PROGRESS = object()
_FAILED = object()


class Prover:
    """A search engine with its own memo table.

    One instance may serve many queries; memo entries stay valid across
    queries with the same rule set and options.
    """

    def __init__(self, config: Optional[SearchConfig] = None):
        self.config = config or SearchConfig()
        rs = RuleSet(self.config.rule_set)
        if not rs.searchable:
            raise ValueError(f"rule set {rs.value} is not searchable")
        self.rules = rs.rules
        self.memo: dict = {}
        self.proofs: dict = {}
        self.nodes = 0
        self._deadline = None
        self._bound = None

    def prove(self, goal: Sequent) -> Outcome:
        if not isinstance(goal, Sequent):
            raise TypeError("goal must be a Sequent")
        cfg = self.config
        size = symbol_size(goal)
        if cfg.max_symbol_size is not None and cfg.max_symbol_size < size:
            raise ValueError("max_symbol_size is below the goal size")
        self._bound = cfg.max_symbol_size if cfg.max_symbol_size is not None else size
        self._deadline = time.monotonic() + cfg.time_budget
        self._depth = {}
        try:
            ok, _ = self._search(goal, 0)
        except SearchLimit as e:
            # unfinished entries must not leak into later queries
            self.memo = {k: v for k, v in self.memo.items() if v is not _IN_PROGRESS}
            return ResourceExceeded(e.reason)
        if ok:
            return Proved(self._build(goal, {}))
        return Refuted()

    def provable(self, goal: Sequent) -> bool:
        out = self.prove(goal)
        if isinstance(out, ResourceExceeded):
            raise SearchLimit(out.reason)
        return bool(out)

    def _tick(self):
        self.nodes += 1
        if self.nodes & 255 == 0 and time.monotonic() > self._deadline:
            raise SearchLimit("time budget exhausted")
        if len(self.memo) > self.config.memo_capacity:
            raise SearchLimit("memo capacity exhausted")

    def _search(self, goal: Sequent, depth: int):
        """Return ``(provable, low)`` where ``low`` is the shallowest
        in-progress goal the answer depended on."""
        memo = self.memo
        st = memo.get(goal)
        if st is not None:
            if st is _IN_PROGRESS:
                return False, self._depth[goal]
            if st is _FAILED:
                return False, depth + 1
            return True, depth + 1
        self._tick()
        if goal.succedent is BOT and type(goal.antecedent) is Semi and Rule.RBot in self.rules:
            members = sorted(rbot_orbit(goal))
            members.remove(goal)
            members.insert(0, goal)
        else:
            members = [goal]
        for m in members:
            memo[m] = _IN_PROGRESS
            self._depth[m] = depth
        low = depth + 1
        found = None
        for m in members:
            for rule, prems in backward_instances(m, self.rules, include_rbot=False,
                                                  atomic_id=self.config.atomic_id):
                if any(symbol_size(p) > self._bound for p in prems):
                    continue
                ok = True
                for p in prems:
                    pok, plow = self._search(p, depth + 1)
                    if not pok:
                        low = min(low, plow)
                        ok = False
                        break
                if ok:
                    found = (m, rule, prems)
                    break
            if found:
                break
        for m in members:
            del self._depth[m]
        if found:
            m, rule, prems = found
            self.proofs[m] = (rule, prems)
            for x in members:
                if x != m:
                    self.proofs[x] = ("orbit", m)
                if self.config.memoize:
                    memo[x] = True
                else:
                    del memo[x]
            return True, low
        for x in members:
            if self.config.memoize and low >= depth:
                memo[x] = _FAILED
            else:
                del memo[x]
        return False, low

    def _build(self, goal: Sequent, cache: dict) -> Derivation:
        if goal in cache:
            return cache[goal]
        entry = self.proofs[goal]
        if entry[0] == "orbit":
            target = entry[1]
            path = _orbit_path(goal, target)
            d = self._build(target, cache)
            for s in reversed(path[:-1]):
                d = Derivation(s, Rule.RBot, (d,))
        else:
            rule, prems = entry
            d = Derivation(goal, rule, tuple(self._build(p, cache) for p in prems))
        cache[goal] = d
        return d


def prove(goal: Sequent, cfg: Optional[SearchConfig] = None) -> Outcome:
    return Prover(cfg).prove(goal)
