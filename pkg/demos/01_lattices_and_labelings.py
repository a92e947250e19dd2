"""Atomic lattices, labelings and the ideals they generate.

Run:  python3 demos/01_lattices_and_labelings.py

A finite atomic lattice is stored as the family of its atom supports.
Putting monomials on its elements (a labeling) produces a monomial ideal,
one generator per atom.  Whether the lcm lattice of that ideal is the
lattice we started from is exactly the question "is this a coordinatization?".
"""
from lcmlat import (
    Labeling,
    Monomial,
    MonomialIdeal,
    boolean_lattice,
    deficit_labeling,
    from_family,
    generate_ideal,
    is_coordinatization,
    lcm_lattice,
)

# The 3-atom lattice whose only non-atom proper elements are {0,1} and {1,2}.
P = from_family([[], [0], [1], [2], [0, 1], [1, 2], [0, 1, 2]], 3)
print("elements:", len(P), " meet-irreducibles:", sorted(P.meet_irreducibles()))

# One fresh variable on each meet-irreducible gives the minimal squarefree ideal.
names = "abcd"
labels = {p: Monomial.var(names[k]) for k, p in enumerate(sorted(P.meet_irreducibles()))}
M = Labeling.build(P, labels)
print("generated ideal:", generate_ideal(P, M))
v = is_coordinatization(P, M)
print("coordinatization?", bool(v))

# Dropping a label breaks it; the verdict says which condition failed.
dropped = max(labels)
M_bad = Labeling.build(P, {p: m for p, m in labels.items() if p != dropped})
v = is_coordinatization(P, M_bad)
print(f"without the label on {dropped}:", bool(v), " C1 witnesses:", v.c1.witnesses)

# Going the other way: start from an ideal and recover a labeling of its lcm lattice.
I = MonomialIdeal.from_monomials([Monomial({"x": 2, "y": 1}), Monomial({"y": 2, "z": 1}),
                                  Monomial({"x": 1, "z": 2})])
L = lcm_lattice(I)
D = deficit_labeling(L)
print("\nideal:", I, " lcm lattice size:", len(L.lattice))
for p, m in sorted(D.labels.items()):
    print(f"  deficit label at {p} (support {L.lattice.support(p):03b}): {m}")
print("regenerated:", generate_ideal(L.lattice, D))

B3 = boolean_lattice(3)
print("\nB3 has", len(B3), "elements and", len(B3.meet_irreducibles()), "meet-irreducibles")
