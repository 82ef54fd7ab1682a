"""
Small algebras and a soundness sweep
====================================

Every algebra of a class up to four elements, counted up to isomorphism,
then used as a battery of models for sequents the prover proves.
"""
import random
import time

from incrl.algebra import valid
from incrl.enumeration import enumerate_algebras, expanded_algebras
from incrl.generate import random_sequent
from incrl.prover import prove

classes = ["lattice", "cRL-", "qIncRL-", "IncRL-", "mncRL-", "dncRL-", "cbRL-"]
print(f"{'class':10s}" + "".join(f"{n:>7d}" for n in range(1, 5)) + "   seconds")
for cls in classes:
    start = time.perf_counter()
    row = [sum(1 for _ in enumerate_algebras(n, cls, min_size=n)) for n in range(1, 5)]
    print(f"{cls:10s}" + "".join(f"{c:>7d}" for c in row) + f"   {time.perf_counter() - start:.2f}")

# A proved sequent must hold in every model; an unprovable one usually fails
# somewhere, though absence of a countermodel is never a proof.
models = list(expanded_algebras(3))
rng = random.Random(0)
proved = refuted_with_model = refuted_without = 0
for _ in range(300):
    s = random_sequent(rng, 10)
    holds = all(valid(s, m) for m in models)
    if prove(s):
        assert holds
        proved += 1
    elif holds:
        refuted_without += 1
    else:
        refuted_with_model += 1
print(f"{len(models)} models; proved {proved}, refuted with a countermodel "
      f"{refuted_with_model}, refuted without one {refuted_without}")
