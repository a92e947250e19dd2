"""Tree ideals: coordinatizing the lattice of subtrees of a tree.

Run:  python3 demos/04_tree_ideals.py

Each edge of a tree splits it into two components; the subtrees spanned by
each side are meet-irreducible in the subtree lattice and get variables
x_e and y_e.  The resulting ideal is Cohen-Macaulay of codimension 2, and
its generators recover the whole tree.
"""
from lcmlat import (
    Tree,
    check_cmstar_conditions,
    codimension,
    floystad_coordinatization,
    floystad_tree_ideal,
    generate_ideal,
    graded_betti,
    is_cohen_macaulay,
    projective_dimension,
    subtree_lattice,
    support_family,
)

T = Tree.from_edges([[1, 3], [2, 3], [3, 4], [4, 5]])
I = floystad_tree_ideal(T)
print("tree ideal:", I)

M = floystad_coordinatization(T)
print("same ideal from the subtree labeling:", generate_ideal(M.lattice, M) == I)

P = subtree_lattice(T)
print("subtree lattice:", len(P), "elements; Betti totals", graded_betti(P).totals)
print("codim", codimension(I), " pdim", projective_dimension(I), " CM:", is_cohen_macaulay(I))

F = support_family(I)
rep = check_cmstar_conditions(T.as_complex(), F, T.n_vertices, d=1)
print("\nsupport family of the tree ideal:")
for var, V in F.as_dict().items():
    print(f"  {var}: {sorted(V)}")
print("cover / acyclic / separating:", rep.cover.passed, rep.acyclic.passed, rep.separating.passed)
