"""
Cut-free proof search
=====================

Sequents are parsed into canonical structures, searched backwards, and
either proved with a checkable derivation or refuted exhaustively.
"""
from incrl.checker import check_derivation
from incrl.prover import Prover, SearchConfig, applicable_rule_instances, prove, rbot_orbit
from incrl.syntax import parse_sequent, print_sequent

# A comma is the structural counterpart of fusion.  The antecedent is a
# multiset, so the order in which it is written does not matter.
goal = parse_sequent("q , p => p . q")
print(print_sequent(goal), "==", print_sequent(parse_sequent("p , q => p . q")))

out = prove(goal)
print(out.kind)
print(out.derivation.pretty())

# Every backward step the search may take from a goal:
for rule, premises in applicable_rule_instances(parse_sequent("p ; ~p => bot")):
    print(f"  {rule.value:8s}", "  |  ".join(print_sequent(p, True) for p in premises))

# The semicolon is a second, non-associative fusion.  With succedent bot the
# swap rule regroups it; search treats the whole orbit as one node.
for s in sorted(rbot_orbit(parse_sequent("(p , q) ; r => bot")), key=str):
    print("  orbit:", print_sequent(s))

# Double negation can be introduced but not eliminated.
for text in ["p => ~~p", "~~p => p", "~~~p => ~p"]:
    print(f"{text:14s}", prove(parse_sequent(text)).kind)

# Derivations are certified by an independent checker.
d = prove(parse_sequent("(a \\ b) . (b \\ c) => a \\ c")).derivation
print("checks:", check_derivation(d), "nodes:", d.size, "height:", d.height)

# A shared prover keeps its memo table between queries.
shared = Prover(SearchConfig(time_budget=5.0))
for text in ["a . (b \\/ c) => (a . b) \\/ (a . c)", "a . a => a", "a => a . a"]:
    print(f"{text:40s}", shared.prove(parse_sequent(text)).kind)
print("memo entries:", len(shared.memo))
