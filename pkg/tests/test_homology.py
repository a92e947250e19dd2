import random

import pytest
from hypothesis import given, settings, strategies as st

from lcmlat import (
    GF2,
    QQ,
    Field,
    MonomialIdeal,
    Monomial,
    SimplicialComplex,
    boolean_lattice,
    check_cmstar_conditions,
    floystad_tree_ideal,
    from_masks,
    graded_betti,
    is_acyclic,
    is_reduced_family,
    reduced_homology,
    refinement_leq,
    restriction_connected,
    subtree_lattice,
    support_family,
    supports_resolution,
)
from lcmlat.homology import EmptySet, TooLarge, VertexGeneratorMismatch, graded_betti_order_complex
from lcmlat.linalg import rank_mod_p, rank_rational
from lcmlat.strata import enumerate_L

import brute
from corpus import TRIANGLE

HOLLOW = SimplicialComplex([1, 2, 3], [[1, 2], [2, 3], [1, 3]])


def family(*sets):
    return [[i - 1 for i in s] for s in sets]


class TestRank:
    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
    def test_rational_matches_fraction_oracle(self, rows):
        assert rank_rational(rows) == brute.rank_q(rows)

    def test_characteristic_matters(self):
        rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        assert rank_rational(rows) == 3
        assert rank_mod_p(rows, 2) == 2

    def test_field_parse(self):
        assert Field.parse("q") == QQ and Field.parse("f2") == GF2
        assert Field.parse("F3").characteristic == 3
        with pytest.raises(ValueError):
            Field.parse("f4")
        with pytest.raises(ValueError):
            Field.parse("reals")


class TestReducedHomology:
    def test_empty_complex(self):
        assert reduced_homology(SimplicialComplex([], [])) == {-1: 1}

    def test_two_points(self):
        assert reduced_homology(SimplicialComplex([1, 2], [[1], [2]]))[0] == 1

    def test_hollow_triangle(self):
        h = reduced_homology(HOLLOW)
        assert h[1] == 1 and h[0] == 0

    def test_acyclic(self):
        assert is_acyclic(SimplicialComplex([1], [[1]]))
        assert is_acyclic(SimplicialComplex(range(4), [[0, 1], [1, 2], [1, 3]]))
        assert not is_acyclic(HOLLOW)

    def test_projective_plane_torsion(self):
        # 6-vertex RP^2: Q-acyclic, but H_1 and H_2 are Z/2 over GF(2)
        facets = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5],
                  [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]
        X = SimplicialComplex(range(1, 7), facets)
        assert is_acyclic(X, QQ)
        h = reduced_homology(X, GF2)
        assert h[1] == 1 and h[2] == 1

    def test_random_against_oracle(self):
        rng = random.Random(3)
        for _ in range(40):
            facets = [rng.sample(range(6), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))]
            X = SimplicialComplex(range(6), facets)
            faces = sorted(tuple(sorted(f)) for f in X.faces)
            assert {d: v for d, v in reduced_homology(X).items()} == brute.reduced_betti(faces)


class TestBetti:
    def test_b3(self):
        assert graded_betti(boolean_lattice(3)).totals == (1, 3, 3, 1)

    def test_b2(self):
        assert graded_betti(boolean_lattice(2)).totals == (1, 2, 1)

    def test_example_tree(self, example_tree, frozen):
        P = subtree_lattice(example_tree)
        B = graded_betti(P)
        assert list(B.totals) == frozen["example_tree"]["totals"] == [1, 5, 4]
        twos = {P.support(p) for (i, p), v in B.graded.items() if i == 2 and v}
        assert twos == {0b00101, 0b00110, 0b01100, 0b11000}
        assert all(B.graded[(2, P.id_of(m))] == 1 for m in twos)

    def test_crosscut_vs_order_complex_l3(self):
        for P in enumerate_L(3).members:
            for F in (QQ, GF2):
                assert graded_betti(P, F).graded == graded_betti_order_complex(P, F).graded

    def test_l3_against_oracle(self, frozen):
        for row in frozen["L3"]:
            P = from_masks(row["family"], 3)
            assert list(graded_betti(P).totals) == row["totals"]


class TestSupports:
    def test_example_tree(self, example_tree):
        I = floystad_tree_ideal(example_tree)
        r = supports_resolution(example_tree.as_complex(), I)
        assert r.status == "supports_minimally"
        assert r.f_vector == (1, 5, 4) == r.betti_totals

    def test_faridi_simplex(self):
        I = MonomialIdeal.from_monomials([Monomial.var("a"), Monomial.var("b"), Monomial.var("c")])
        assert supports_resolution(TRIANGLE, I).status == "supports_minimally"

    def test_two_points_fail(self):
        X = SimplicialComplex(["1", "2"], [["1"], ["2"]])
        I = MonomialIdeal.from_monomials([Monomial.var("x"), Monomial.var("y")])
        r = supports_resolution(X, I)
        assert r.status == "neither" and not r.supports
        assert r.failures[0][1] == "xy"

    def test_full_simplex_not_minimal(self):
        # the solid triangle supports a resolution of (xy, yz, xz) but has one face too many
        I = MonomialIdeal.from_monomials([Monomial({"x": 1, "y": 1}), Monomial({"y": 1, "z": 1}),
                                          Monomial({"x": 1, "z": 1})])
        assert supports_resolution(TRIANGLE, I).status == "supports"

    def test_mismatch(self):
        I = MonomialIdeal.from_monomials([Monomial.var("x")])
        with pytest.raises(VertexGeneratorMismatch):
            supports_resolution(TRIANGLE, I)


class TestFamilies:
    def test_example_tree_passes(self, example_tree):
        I = floystad_tree_ideal(example_tree)
        F = support_family(I)
        rep = check_cmstar_conditions(example_tree.as_complex(), F, 5, d=1)
        assert rep.passed and rep.reduced and rep.connected

    def test_full_set_fails_condition_1(self):
        X = SimplicialComplex(range(3), [[0, 1], [1, 2]])
        rep = check_cmstar_conditions(X, family({1, 2, 3}, {1}, {3}), 3, d=1)
        assert not rep.cover

    def test_missing_separator_fails_condition_3(self):
        X = SimplicialComplex(range(3), [[0, 1], [1, 2]])
        good = family({1}, {2, 3}, {1, 2}, {3})
        assert check_cmstar_conditions(X, good, 3, d=1).separating
        rep = check_cmstar_conditions(X, family({1}, {2, 3}, {1, 2}), 3, d=1)
        assert not rep.separating
        # nothing avoids vertex 1 while meeting vertex 2
        assert rep.separating.witnesses == (([1], [1, 2]),)

    def test_too_large(self):
        X = SimplicialComplex(range(21), [[i, i + 1] for i in range(20)])
        with pytest.raises(TooLarge):
            check_cmstar_conditions(X, [[0]], 21)

    def test_reduced(self):
        ok, w = is_reduced_family(family({1}, {2}, {1, 2}))
        assert not ok and w == ([0, 1], [[0], [1]])
        assert is_reduced_family(family({1}, {2}))[0]

    def test_example_reduced(self, example_tree):
        assert is_reduced_family(support_family(floystad_tree_ideal(example_tree)))[0]

    def test_refinement(self):
        assert refinement_leq(family({1}, {2}), family({1, 2}))
        assert not refinement_leq(family({1, 2}), family({1}, {2}))

    def test_restriction_connected(self, example_tree):
        X = example_tree.as_complex()
        assert restriction_connected(X, [1, 2, 3, 4])
        path = SimplicialComplex(range(3), [[0, 1], [1, 2]])
        assert not restriction_connected(path, [0, 2])
        assert restriction_connected(path, [2])
        with pytest.raises(EmptySet):
            restriction_connected(path, [])
