"""Finite atomic lattices as lcm lattices of monomial ideals.

Lattices are families of atom supports; labelings turn them into monomial
ideals, and exact simplicial homology gives their Betti numbers.
"""
from .lattice_core import (
    FiniteAtomicLattice,
    Poset,
    SimplicialComplex,
    boolean_lattice,
    crosscut_complex,
    from_family,
    from_hasse,
    from_masks,
    is_isomorphic_atomfixed,
    order_complex,
)
from .monomial_algebra import (
    LcmLattice,
    Monomial,
    MonomialIdeal,
    SupportFamily,
    VariableTable,
    codimension,
    divides,
    gcd,
    is_cohen_macaulay,
    lcm,
    lcm_lattice,
    minimal_generators,
    projective_dimension,
    quotient,
    support_family,
)
from .coordinatize import (
    Labeling,
    check_C1,
    check_C2,
    coordinatization_oracle,
    deficit_labeling,
    generate_ideal,
    induced_labeling,
    is_coordinatization,
    variable_to_element,
    x_strata,
)
from .constructions import (
    FacetComplex,
    Tree,
    augmented_face_poset,
    faridi_ideal,
    faridi_labeling,
    floystad_coordinatization,
    floystad_tree_ideal,
    meet_irreducible_subtrees,
    minimal_squarefree,
    nearly_scarf,
    subtree_lattice,
)
from .homology import (
    GF2,
    QQ,
    BettiTable,
    Field,
    check_cmstar_conditions,
    graded_betti,
    is_acyclic,
    is_reduced_family,
    reduced_homology,
    refinement_leq,
    restriction_connected,
    supports_resolution,
)
from .strata import (
    betti_strata,
    check_tree_proposition,
    covers_above,
    enumerate_L,
    exists_join_preserving_atom_bijection,
    is_maximal_in_stratum,
    leq_in_L,
)

__version__ = "0.1.0"
