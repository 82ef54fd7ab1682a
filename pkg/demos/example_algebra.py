"""
A five-element involutive algebra without unit
==============================================

Tables are numpy arrays; every law is checked over the full grid of
arguments and reports a witness when it fails.
"""
from incrl.algebra import (check_class, classify_negation, dump_algebra, evaluate, example1,
                           expand, no_unit_witness, valid)
from incrl.enumeration import countermodel
from incrl.syntax import parse_formula, parse_sequent

m = example1()
print(dump_algebra(m))
print(check_class(m, "IncRL-").describe())
print("negation:", classify_negation(m).value)

# x . ~x takes different values, so no element plays the role of a unit's
# negation.
for x in m.carrier:
    i = m.index(x)
    print(f"  {x} . ~{x} = {m.name(m.dot[i, m.neg[i]])}")
print("no unit witness:", no_unit_witness(m))

# Breaking the negation table is caught with a witness.
broken = m.neg.copy()
broken[m.index("a")] = m.index("b")
print(check_class(m.replace(neg=broken), "IncRL-").result("dn").describe())

# Adding a second fusion: a * b is bottom exactly when a <= ~b.
e = expand(m)
print("star table:\n", e.star)
print(check_class(e, "cbRL-").describe())

mu = {"p": "a", "q": "b"}
for text in ["p . q", "p * q", "~p -> q"]:
    print(f"  {text} = {e.name(evaluate(parse_formula(text), e, mu))}")

# The algebra is involutive, so ~~p => p holds here; a smaller
# quasi-involutive algebra refutes it.
print("~~p => p valid here:", valid(parse_sequent("~~p => p"), e))
cm, assignment = countermodel(parse_sequent("~~p => p"), 3)
print("countermodel with", assignment)
print(dump_algebra(cm))
