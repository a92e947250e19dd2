"""Standard labelings coming from simplicial complexes.

Run:  python3 demos/03_constructions.py

* nearly Scarf: one variable per face of a complex that is not a simplex;
  the lcm lattice is the face poset with a top added.
* Faridi: one variable per facet; for simplicial trees the complex itself
  supports a minimal resolution.
"""
from lcmlat import (
    FacetComplex,
    augmented_face_poset,
    faridi_ideal,
    graded_betti,
    is_isomorphic_atomfixed,
    lcm_lattice,
    nearly_scarf,
    supports_resolution,
)

path = FacetComplex(["1", "2", "3"], [["1", "2"], ["2", "3"]])
P, M, I = nearly_scarf(path)
print("nearly Scarf ideal of the path 1-2-3:", I)
print("lcm lattice = augmented face poset:",
      is_isomorphic_atomfixed(lcm_lattice(I).lattice, augmented_face_poset(path)))
print("Betti totals:", graded_betti(P).totals)

# Two triangles sharing an edge form a simplicial tree.
D = FacetComplex(["1", "2", "3", "4"], [["1", "2", "3"], ["2", "3", "4"]])
J = faridi_ideal(D)
r = supports_resolution(D, J)
print("\nfacet ideal of two triangles on a shared edge:", J)
print("supports:", r.status, " f-vector", r.f_vector, " Betti totals", r.betti_totals)

# The boundary of a square does not support the resolution of its vertex ideal.
square = FacetComplex(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]])
r = supports_resolution(square, faridi_ideal(FacetComplex(["a", "b", "c", "d"],
                                                          [["a"], ["b"], ["c"], ["d"]])))
print("\n4-cycle over four coprime variables:", r.status)
