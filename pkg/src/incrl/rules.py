"""Rule names, rule sets and the derivation tree type."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union

from .structure import Sequent, SimpleSequent


class Rule(str, enum.Enum):
    # structured calculi
    Id = "Id"
    DotL = "DotL"
    DotR = "DotR"
    StarL = "StarL"
    StarR = "StarR"
    UnderL = "UnderL"
    UnderR = "UnderR"
    ArrowL = "ArrowL"
    ArrowR = "ArrowR"
    MeetL = "MeetL"
    MeetR = "MeetR"
    JoinL = "JoinL"
    JoinR = "JoinR"
    BotRule = "Bot"
    RBot = "RBot"
    NegL = "NegL"
    NegR = "NegR"
    KoL = "KoL"
    KoR = "KoR"
    Cut = "Cut"
    # single-antecedent calculi
    DN2 = "DN2"
    Res = "Res"
    ResInv = "ResInv"
    Neg = "Neg"
    MN = "MN"
    Hyp = "Hyp"

    def __str__(self):
        return self.value


ARITY = {
    Rule.Id: 0, Rule.DN2: 0, Rule.Hyp: 0,
    Rule.DotL: 1, Rule.StarL: 1, Rule.UnderR: 1, Rule.ArrowR: 1, Rule.MeetL: 1,
    Rule.JoinR: 1, Rule.BotRule: 1, Rule.RBot: 1, Rule.NegL: 1, Rule.NegR: 1,
    Rule.KoL: 1, Rule.KoR: 1, Rule.Res: 1, Rule.ResInv: 1, Rule.Neg: 1, Rule.MN: 1,
    Rule.DotR: 2, Rule.StarR: 2, Rule.UnderL: 2, Rule.ArrowL: 2, Rule.MeetR: 2,
    Rule.JoinL: 2, Rule.Cut: 2,
}

# rules whose premises have strictly fewer symbols than their conclusion
CONNECTIVE_RULES = frozenset({
    Rule.DotL, Rule.DotR, Rule.StarL, Rule.StarR, Rule.UnderL, Rule.UnderR,
    Rule.ArrowL, Rule.ArrowR, Rule.MeetL, Rule.MeetR, Rule.JoinL, Rule.JoinR,
    Rule.NegL, Rule.NegR,
})


class RuleSet(str, enum.Enum):
    G = "g"
    QG = "qg"
    GB = "gb"
    QGC = "qgc"
    GC = "gc"

    @property
    def rules(self) -> frozenset:
        return RULES[self]

    @property
    def structured(self) -> bool:
        return self in (RuleSet.GB, RuleSet.QGC, RuleSet.GC)

    @property
    def searchable(self) -> bool:
        return self in (RuleSet.GB, RuleSet.QGC)

    def __str__(self):
        return self.value


_GB = frozenset({
    Rule.Id, Rule.DotL, Rule.DotR, Rule.StarL, Rule.StarR, Rule.UnderL, Rule.UnderR,
    Rule.ArrowL, Rule.ArrowR, Rule.MeetL, Rule.MeetR, Rule.JoinL, Rule.JoinR,
    Rule.BotRule, Rule.RBot,
})
_QGC = (_GB - {Rule.StarL, Rule.StarR, Rule.ArrowL, Rule.ArrowR}) | {Rule.NegL, Rule.NegR}
_G = frozenset({
    Rule.Id, Rule.DN2, Rule.Res, Rule.ResInv, Rule.MeetL, Rule.MeetR, Rule.JoinL,
    Rule.JoinR, Rule.Neg, Rule.MN, Rule.Cut,
})

RULES = {
    RuleSet.GB: _GB,
    RuleSet.QGC: _QGC,
    RuleSet.GC: _QGC | {Rule.KoL, Rule.KoR},
    RuleSet.G: _G,
    RuleSet.QG: _G - {Rule.DN2},
}


def memberships(rule: Rule) -> frozenset:
    return frozenset(rs for rs, rules in RULES.items() if rule in rules)


AnySequent = Union[Sequent, SimpleSequent]


@dataclass(frozen=True)
class Derivation:
    conclusion: AnySequent
    rule: Rule
    premises: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rule", Rule(self.rule))
        object.__setattr__(self, "premises", tuple(self.premises))

    def nodes(self) -> Iterator["Derivation"]:
        yield self
        for p in self.premises:
            yield from p.nodes()

    def sequents(self) -> Iterator[AnySequent]:
        for n in self.nodes():
            yield n.conclusion

    @property
    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    @property
    def height(self) -> int:
        return 1 + max((p.height for p in self.premises), default=0)

    def rules_used(self) -> set:
        return {n.rule for n in self.nodes()}

    def pretty(self, sugar: bool = True, indent: str = "  ") -> str:
        """Indented text rendering, conclusion first."""
        from .syntax import print_sequent
        lines = []

        def go(d, depth):
            lines.append(f"{indent * depth}{print_sequent(d.conclusion, sugar)}   [{d.rule.value}]")
            for p in d.premises:
                go(p, depth + 1)
        go(self, 0)
        return "\n".join(lines)
