import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from lcmlat import (
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
    reduced_homology,
)
from lcmlat.lattice_core import (
    AtomCountMismatch,
    AtomOutOfRange,
    DuplicateElement,
    InvalidElement,
    MissingAtom,
    MissingTop,
    NotComparable,
    NotIntersectionClosed,
    crosscut_complex_bruteforce,
    from_json,
)
from lcmlat.strata import enumerate_L

import brute

B2 = from_family([[], [0], [1], [0, 1]], 2)
PATH3 = from_family([[], [0], [1], [2], [0, 1], [1, 2], [0, 1, 2]], 3)


def random_lattice(rng, n):
    """Closure of a few random supports together with the atoms and [n]."""
    fam = {0, (1 << n) - 1} | {1 << i for i in range(n)}
    for _ in range(rng.randint(0, 4)):
        fam.add(rng.randrange(1, 1 << n))
    changed = True
    while changed:
        new = {a & b for a in fam for b in fam} - fam
        changed = bool(new)
        fam |= new
    return from_masks(fam, n)


class TestConstruction:
    def test_b2(self):
        assert len(B2) == 4
        assert B2.atoms == (1, 2)
        assert B2.top == 3 and B2.bottom == 0

    def test_path_family(self):
        assert len(PATH3) == 7

    def test_bottom_adjoined(self):
        P = from_family([[0], [1], [0, 1]], 2)
        assert P == B2

    @pytest.mark.parametrize("sets, n, err", [
        ([[], [0], [1]], 2, MissingTop),
        ([[], [0], [0, 1]], 2, MissingAtom),
        ([[], [0], [1], [2], [0, 1], [1, 2], [0, 1, 2]], 4, MissingTop),
        ([[], [0], [1], [0, 1], [1, 0]], 2, DuplicateElement),
        ([[], [0], [1], [5], [0, 1]], 2, AtomOutOfRange),
    ])
    def test_rejects(self, sets, n, err):
        with pytest.raises(err):
            from_family(sets, n)

    def test_not_closed_reports_pair(self):
        fam = [[], [0], [1], [2], [3], [0, 1, 2], [1, 2, 3], [0, 1, 2, 3]]
        with pytest.raises(NotIntersectionClosed) as e:
            from_family(fam, 4)
        a, b = e.value.pair
        assert a & b == 0b0110

    def test_json_roundtrip(self):
        for P in (B2, PATH3, boolean_lattice(3)):
            assert from_json(P.to_json()) == P


class TestOrder:
    def test_meet_join_b3(self):
        B = boolean_lattice(3)
        for p, q in itertools.product(B, B):
            assert B.support(B.meet(p, q)) == B.support(p) & B.support(q)
            assert B.support(B.join(p, q)) == B.support(p) | B.support(q)

    def test_join_in_path(self):
        a0, a2 = PATH3.atom(0), PATH3.atom(2)
        assert PATH3.join(a0, a2) == PATH3.top

    def test_covers_b2(self):
        assert len(B2.covers) == 4

    def test_filter_and_ideal(self):
        a = PATH3.atom(1)
        assert PATH3.filter(a) == frozenset(p for p in PATH3 if PATH3.support(p) & 2)
        assert PATH3.order_ideal(a) == frozenset({0, a})
        assert PATH3.filter_complement(a) | PATH3.filter(a) == frozenset(PATH3)

    def test_meet_irreducibles(self, example_tree):
        from lcmlat import subtree_lattice
        assert B2.meet_irreducibles() == frozenset(B2.atoms)
        B3 = boolean_lattice(3)
        assert {B3.support(p) for p in B3.meet_irreducibles()} == {0b011, 0b101, 0b110}
        assert len(subtree_lattice(example_tree).meet_irreducibles()) == 8

    def test_meet_irreducibles_match_definition(self):
        rng = random.Random(5)
        for _ in range(60):
            P = random_lattice(rng, rng.randint(2, 5))
            assert P.meet_irreducibles() == P.meet_irreducibles_by_definition()

    def test_intervals(self):
        B3 = boolean_lattice(3)
        Q = B3.open_interval(B3.bottom, B3.top)
        assert len(Q) == 6
        assert len(B3.closed_interval(B3.bottom, B3.top)) == 8
        with pytest.raises(NotComparable):
            B3.open_interval(B3.atom(0), B3.atom(1))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 5), st.integers(0, 10**6))
    def test_lattice_axioms(self, n, seed):
        P = random_lattice(random.Random(seed), n)
        for p, q in itertools.product(P, P):
            j, m = P.join(p, q), P.meet(p, q)
            assert P.leq(p, j) and P.leq(q, j)
            assert P.leq(m, p) and P.leq(m, q)
            for r in P:
                if P.leq(p, r) and P.leq(q, r):
                    assert P.leq(j, r)
        for p in P:
            assert P.join_all(P.atom(i) for i in range(n) if P.support(p) >> i & 1) == p

    def test_covers_agree_with_networkx(self):
        rng = random.Random(11)
        for _ in range(30):
            P = random_lattice(rng, rng.randint(2, 5))
            G = nx.DiGraph([(p, q) for p in P for q in P if P.lt(p, q)])
            G.add_nodes_from(P)
            assert set(nx.transitive_reduction(G).edges) == set(P.covers)


class TestHasse:
    def test_sixteen_element_hasse(self, lattice16):
        P, node, _ = lattice16
        assert len(P) == 16 and P.n_atoms == 5
        assert {k for k, v in node.items() if P.leq(node[1], v)} == {1, 6, 10, 13, 15}

    def test_rejects_bad_covers(self):
        from lcmlat.lattice_core import LatticeError
        with pytest.raises(LatticeError):
            from_hasse([(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)])

    def test_roundtrip(self):
        for P in (B2, PATH3, boolean_lattice(3)):
            Q, mapping = from_hasse(P.covers)
            assert Q == P and all(mapping[p] == p for p in P)


class TestIsomorphism:
    def test_self(self):
        assert is_isomorphic_atomfixed(PATH3, PATH3)

    def test_atom_mismatch(self):
        with pytest.raises(AtomCountMismatch):
            is_isomorphic_atomfixed(B2, PATH3)

    def test_chain_not_atomic(self):
        with pytest.raises(MissingAtom):
            from_family([[], [0], [0, 1]], 2)

    def test_distinct_seven_element(self):
        other = from_family([[], [0], [1], [2], [0, 1], [0, 2], [0, 1, 2]], 3)
        assert len(other) == 7
        assert not is_isomorphic_atomfixed(PATH3, other)


class TestComplexes:
    def test_order_complex_antichain(self):
        X = order_complex(Poset.antichain(2))
        assert X.f_vector() == (1, 2)

    def test_order_complex_chain(self):
        X = order_complex(Poset.chain(3))
        assert X.dimension == 2 and len(X.facets) == 1

    def test_hexagon(self):
        B3 = boolean_lattice(3)
        X = order_complex(B3.open_interval(B3.bottom, B3.top))
        assert X.f_vector() == (1, 6, 6)
        assert reduced_homology(X)[1] == 1

    def test_empty_poset(self):
        X = order_complex(Poset([], []))
        assert X.f_vector() == (1,)
        assert reduced_homology(X) == {-1: 1}

    def test_crosscut_b2(self):
        X = crosscut_complex(B2, B2.top)
        assert X.f_vector() == (1, 2)

    def test_crosscut_b3_hollow_triangle(self):
        B3 = boolean_lattice(3)
        X = crosscut_complex(B3, B3.top)
        assert X.f_vector() == (1, 3, 3)
        assert reduced_homology(X)[1] == 1

    def test_crosscut_tree_edge(self, example_tree):
        from lcmlat import subtree_lattice
        P = subtree_lattice(example_tree)
        p = P.id_of(0b11000)
        X = crosscut_complex(P, p)
        assert X.f_vector() == (1, 2)
        assert reduced_homology(X)[0] == 1

    def test_crosscut_invalid(self):
        with pytest.raises(InvalidElement):
            crosscut_complex(B2, B2.bottom)
        with pytest.raises(InvalidElement):
            crosscut_complex(B2, 99)

    def test_crosscut_matches_bruteforce(self):
        for P in enumerate_L(4).members[::7]:
            for p in P:
                if p != P.bottom:
                    assert crosscut_complex(P, p).facets == crosscut_complex_bruteforce(P, p).facets

    def test_induced(self):
        X = SimplicialComplex([1, 2, 3], [[1, 2], [2, 3]])
        assert X.induced([1, 3]).f_vector() == (1, 2)

    def test_face_count_oracle(self):
        X = SimplicialComplex("abcd", ["abc", "cd"])
        faces = {tuple(sorted(f)) for f in X.faces}
        expect = {()}
        for F in ("abc", "cd"):
            for k in range(1, len(F) + 1):
                expect |= set(itertools.combinations(F, k))
        assert faces == expect
        assert reduced_homology(X) == {d: v for d, v in brute.reduced_betti(sorted(expect)).items()}


def test_lattice_type():
    assert isinstance(B2, FiniteAtomicLattice)
