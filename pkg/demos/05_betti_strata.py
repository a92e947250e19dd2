"""Betti strata in the lattice of all atomic lattices on n atoms.

Run:  python3 demos/05_betti_strata.py

L(n) is ordered by inclusion of support families.  Grouping its members by
total Betti numbers gives the strata; subtree lattices of trees sit at the
top of theirs, since every lattice one step above has a larger b_2.
"""
from collections import Counter

from lcmlat import Tree, betti_strata, check_tree_proposition, enumerate_L

for n in (3, 4):
    U = enumerate_L(n)
    rep = betti_strata(U)
    print(f"L({n}): {len(U)} lattices, {len(rep.strata)} strata,"
          f" {sum(rep.maximal)} maximal in their stratum")

U = enumerate_L(3)
rep = betti_strata(U)
for t, members in sorted(rep.strata.items()):
    print(f"  totals {t}: {len(members)} lattice(s)")

print()
for edges in ([[1, 2], [2, 3]], [[1, 2], [1, 3], [1, 4]], [[1, 3], [2, 3], [3, 4], [4, 5]]):
    r = check_tree_proposition(Tree.from_edges(edges))
    bumps = Counter(t for _, t, _ in r.covers)
    print(f"tree {edges}: base {r.base_totals}, covers {dict(bumps)}, holds: {r.holds}")
