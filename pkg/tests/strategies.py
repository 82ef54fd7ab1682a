"""Hypothesis strategies shared by the tests."""
from hypothesis import strategies as st

from incrl.formula import BOT, Arrow, Atom, Fuse, Join, Meet, Star, Under
from incrl.structure import comma, leaf, semi

p, q, r = Atom("p"), Atom("q"), Atom("r")

_atoms = st.sampled_from([p, q, r, BOT])
_binary = st.sampled_from([Fuse, Under, Meet, Join, Star, Arrow])
formulas = st.recursive(
    _atoms, lambda sub: st.tuples(_binary, sub, sub).map(lambda t: t[0](t[1], t[2])),
    max_leaves=8)
structures = st.recursive(
    formulas.map(leaf),
    lambda sub: st.one_of(st.tuples(sub, sub).map(lambda t: comma(*t)),
                          st.tuples(sub, sub).map(lambda t: semi(*t))),
    max_leaves=5)
