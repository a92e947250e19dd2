"""Following one variable through a labeled lattice.

Run:  python3 demos/02_strata_of_a_variable.py

The 16-element lattice in data/x_labeled16.json carries the variable x on three
elements.  Peeling off the elements above the atoms of highest x-degree,
layer by layer, gives the x-strata.  The induced labeling shows where x
"really" lives once the labeling is pushed through the lcm construction.
"""
import json
from pathlib import Path

from lcmlat import Labeling, check_C2, Monomial, from_hasse, induced_labeling, is_coordinatization, x_strata

data = json.loads((Path(__file__).resolve().parents[1] / "data" / "x_labeled16.json").read_text())
P, node = from_hasse([tuple(c) for c in data["covers"]])
num = {v: k for k, v in node.items()}
M = Labeling.build(P, {node[int(k)]: Monomial(v) for k, v in data["labels"].items()}, ["x"])

S = x_strata(P, M, "x")
for s, A, unique in S.layers:
    print(f"A_{s}: {sorted(num[p] for p in A)}  unique max: {unique}")
print("left over:", sorted(num[p] for p in S.residual))

D = induced_labeling(P, M)
print("\nx in the induced labeling:",
      {num[p]: e for p, e in sorted(D.support_of("x").items())})

# Give every other meet-irreducible its own variable, keeping x where it is.
fresh = {}
for p in sorted(P.meet_irreducibles()):
    if p not in M.labels:
        fresh[p] = Monomial.var(f"y{num[p]}")
full = Labeling.build(P, {**M.labels, **fresh})
v = is_coordinatization(P, full)
print("\nwith fresh variables on the remaining meet-irreducibles:", bool(v))
print("  C1 witnesses:", [num[p] for p in v.c1.witnesses])

labels = dict(M.labels)
for p in P.meet_irreducibles():
    labels[p] = Monomial.var(f"y{num[p]}") * M.label(p)
solo = Labeling.build(P, labels)
v = is_coordinatization(P, solo)
print("with x kept and a separate variable on every meet-irreducible:", bool(v))
print("  C2 on the labeling itself:", check_C2(P, solo).passed)
