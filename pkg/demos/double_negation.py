"""
Deciding the involutive logic through a double-negation translation
===================================================================

The quasi-involutive calculus lacks the axiom ~~a => a.  Translating both
sides with the Kolmogorov translation reduces the involutive logic to it,
and the cut-free calculus with a second fusion decides the latter.
"""
from incrl.checker import check_derivation
from incrl.formula import neg
from incrl.generate import formulas
from incrl.rules import RuleSet
from incrl.syntax import parse_formula, print_formula
from incrl.systems import decide_g, decide_qg, emit_gc_derivation, ko, lemma1_check

for text in ["p", "p \\ q", "~p", "p . (q /\\ ~p)"]:
    f = parse_formula(text)
    print(f"ko({text}) = {print_formula(ko(f), True)}")

# The two logics part ways exactly at double negation elimination.
p = parse_formula("p")
print("qg  ~~p => p :", decide_qg(neg(neg(p)), p))
print("g   ~~p => p :", decide_g(neg(neg(p)), p))
print("g   p => q   :", decide_g(p, parse_formula("q")))

# A cut-free derivation in the extended calculus: a proof of the translated
# sequent, closed by the two translation rules at the root.
d = emit_gc_derivation(neg(neg(p)), p)
print(d.pretty())
print("valid gc derivation:", check_derivation(d, RuleSet.GC))

# ko(~~a) => ko(a) holds for every formula; check it over every formula with
# at most two connectives.
fs = list(formulas(2))
print(f"ko(~~a) => ko(a) holds for {sum(map(lemma1_check, fs))}/{len(fs)} formulas")
