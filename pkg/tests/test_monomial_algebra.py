import random

import pytest
from hypothesis import given, strategies as st

from lcmlat import (
    Monomial,
    MonomialIdeal,
    boolean_lattice,
    codimension,
    divides,
    floystad_tree_ideal,
    gcd,
    is_cohen_macaulay,
    is_isomorphic_atomfixed,
    lcm,
    lcm_lattice,
    minimal_generators,
    projective_dimension,
    quotient,
    subtree_lattice,
    support_family,
)
from lcmlat.monomial_algebra import (
    NonMinimalGenerators,
    NotDivisible,
    SupportFamily,
    VariableTable,
)

import brute

VARS = "xyz"
monomials = st.dictionaries(st.sampled_from(VARS), st.integers(0, 3)).map(Monomial)


def M(s: str) -> Monomial:
    """Parse products of single-letter variables like ``x2yz``."""
    out: dict[str, int] = {}
    i = 0
    while i < len(s):
        v = s[i]
        i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        out[v] = out.get(v, 0) + (int(s[i:j]) if j > i else 1)
        i = j
    return Monomial(out)


def ideal(*gens: str) -> MonomialIdeal:
    return MonomialIdeal.from_monomials([M(g) for g in gens], sorted({c for g in gens for c in g if c.isalpha()}))


class TestMonomial:
    def test_basic_ops(self):
        assert lcm(M("xy"), M("yz")) == M("xyz")
        assert gcd(M("xy"), M("yz")) == M("y")
        assert quotient(M("xyz"), M("xy")) == M("z")

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            quotient(M("x"), M("y"))

    def test_no_zero_exponents(self):
        m = Monomial({"x": 0, "y": 2})
        assert m.exponents() == {"y": 2}
        assert Monomial().is_one()

    def test_format(self):
        m = Monomial({"x1": 1, "y2": 1, "x3": 1, "x4": 1})
        assert m.format(["x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"]) == "x1y2x3x4"
        assert Monomial({"x": 3}).format(["x"]) == "x^3"
        assert Monomial().format([]) == "1"

    def test_truth_value_is_ambiguous(self):
        with pytest.raises(TypeError):
            bool(Monomial())

    @given(monomials, monomials)
    def test_lattice_laws(self, a, b):
        assert divides(gcd(a, b), a) and divides(a, lcm(a, b))
        assert gcd(a, b) * lcm(a, b) == a * b
        assert quotient(a * b, b) == a
        assert lcm(a, b).exponents() == brute.m_lcm(a.exponents(), b.exponents())
        assert divides(a, b) == brute.m_divides(a.exponents(), b.exponents())


class TestVariableTable:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            VariableTable(("x", "x"))

    def test_rejects_empty_name(self):
        with pytest.raises(ValueError):
            VariableTable(("",))


class TestMinimalGenerators:
    @pytest.mark.parametrize("given_, expected", [
        (("x", "xy"), "(x)"),
        (("xy", "yz", "xyz"), "(xy, yz)"),
        (("xy", "xy", "z"), "(xy, z)"),
    ])
    def test_examples(self, given_, expected):
        assert str(minimal_generators(ideal(*given_))) == expected

    def test_example_tree_unchanged(self, example_tree):
        I = floystad_tree_ideal(example_tree)
        assert minimal_generators(I) == I


class TestLcmLattice:
    def test_xy(self):
        L = lcm_lattice(ideal("x", "y"))
        assert L.lattice == boolean_lattice(2)
        assert [str(m) for m in L.labels] == ["1", "x", "y", "xy"]

    def test_xy_yz(self):
        L = lcm_lattice(ideal("xy", "yz"))
        assert [m.format("xyz") for m in L.labels] == ["1", "xy", "yz", "xyz"]

    def test_non_minimal(self):
        with pytest.raises(NonMinimalGenerators):
            lcm_lattice(ideal("x", "xy"))
        with pytest.raises(NonMinimalGenerators):
            lcm_lattice(ideal("x", "x", "y"))

    def test_example_tree(self, example_tree):
        L = lcm_lattice(floystad_tree_ideal(example_tree))
        assert len(L.lattice) == 18
        assert is_isomorphic_atomfixed(L.lattice, subtree_lattice(example_tree))

    def test_against_oracle(self):
        rng = random.Random(7)
        checked = 0
        for _ in range(300):
            gens = [{v: rng.randint(0, 3) for v in "wxyz"} for _ in range(rng.randint(1, 5))]
            fam = brute.lcm_family(gens)
            I = MonomialIdeal.from_monomials([Monomial(g) for g in gens], "wxyz")
            if fam is None:
                with pytest.raises(NonMinimalGenerators):
                    lcm_lattice(I)
                continue
            L = lcm_lattice(I)
            assert L.lattice.family == fam
            labels = brute.lcm_labels(fam, gens)
            for p in L.lattice:
                assert L.label(p).exponents() == labels[L.lattice.support(p)]
            checked += 1
        assert checked > 50


class TestSupportFamily:
    def test_example_tree(self, example_tree):
        F = support_family(floystad_tree_ideal(example_tree))
        d = F.as_dict()
        assert d["y1"] == frozenset({1, 2, 3, 4})
        assert d["x4"] == frozenset({0, 1, 2, 3})
        assert len(F.entries) == 8

    def test_json_roundtrip(self, example_tree):
        F = support_family(floystad_tree_ideal(example_tree))
        assert SupportFamily.from_json(F.to_json()) == F

    def test_json_range_check(self):
        with pytest.raises(ValueError):
            SupportFamily.from_json({"n": 2, "sets": {"x": [3]}})


class TestCohenMacaulay:
    @pytest.mark.parametrize("gens", [("x", "y"), ("xy", "yz", "xz")])
    def test_small(self, gens):
        I = ideal(*gens)
        assert codimension(I) == 2
        assert projective_dimension(I) == 2
        assert is_cohen_macaulay(I)

    def test_example_tree(self, example_tree):
        I = floystad_tree_ideal(example_tree)
        assert codimension(I) == 2
        assert projective_dimension(I) == 2
        assert is_cohen_macaulay(I)

    def test_four_cycle_not_cm(self):
        I = MonomialIdeal.from_monomials([M("ac"), M("ad"), M("bc"), M("bd")], "abcd")
        assert codimension(I) == 2
        assert projective_dimension(I) == 3
        assert not is_cohen_macaulay(I)

    def test_disjoint_edges(self):
        I = MonomialIdeal.from_monomials([M("ab"), M("cd")], "abcd")
        assert codimension(I) == 2 and is_cohen_macaulay(I)


def test_ideal_json_roundtrip(example_tree):
    I = floystad_tree_ideal(example_tree)
    assert MonomialIdeal.from_json(I.to_json()) == I
