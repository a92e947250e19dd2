"""The lattice L(n) of finite atomic lattices on n labeled atoms, and its Betti strata.

Members are stored as frozensets of support bitmasks.  ``P <= Q`` in L(n)
exactly when the family of ``P`` is contained in the family of ``Q``; a cover
adds a single support set.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .constructions import Tree, subtree_lattice
from .homology import Field, TooLarge, total_betti
from .lattice_core import (
    AtomCountMismatch,
    FiniteAtomicLattice,
    bits,
    from_masks,
    popcount,
)

MAX_ATOMS = 5


def candidate_supports(n: int) -> list[int]:
    """Subsets of ``[n]`` that may or may not be present: sizes 2..n-1."""
    full = (1 << n) - 1
    cands = [m for m in range(1, full) if popcount(m) >= 2]
    return sorted(cands, key=lambda m: (popcount(m), m))


def base_supports(n: int) -> frozenset[int]:
    return frozenset([0, (1 << n) - 1] + [1 << i for i in range(n)])


def family_key(family: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(family))


def is_intersection_closed(family: Iterable[int]) -> bool:
    fam = set(family)
    return all(a & b in fam for a, b in combinations(fam, 2))


def _closure(fam: set[int]) -> set[int]:
    out = set(fam)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                c = a & b
                if c not in out:
                    out.add(c)
                    new.append(c)
        frontier = new
    return out


def _enumerate_branch(n: int, start: int | None) -> list[tuple[int, ...]]:
    """Closed families whose first chosen candidate is ``start`` (None: no candidates)."""
    cands = candidate_supports(n)
    pos = {c: i for i, c in enumerate(cands)}
    base = set(base_supports(n))
    if start is None:
        return [family_key(base)]
    out = []

    def rec(chosen: set[int], fam: set[int], nxt: int):
        out.append(family_key(fam))
        for j in range(nxt, len(cands)):
            c = cands[j]
            if c in fam:
                continue
            fam2 = _closure(fam | {c})
            added = fam2 - fam
            # canonical extension: nothing new before position j
            if any(pos[a] < j for a in added if a in pos):
                continue
            rec(chosen | {c}, fam2, j + 1)

    first = _closure(base | {cands[start]})
    if any(pos[a] < start for a in first - base if a in pos):
        return []
    rec({cands[start]}, first, start + 1)
    return out


def _branch_job(args):
    return _enumerate_branch(*args)


@dataclass
class LnUniverse:
    """All finite atomic lattices on ``n`` labeled atoms."""

    n: int
    families: list[frozenset[int]]
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self.index = {family_key(f): i for i, f in enumerate(self.families)}

    def __len__(self):
        return len(self.families)

    def lattice(self, i: int) -> FiniteAtomicLattice:
        return self.members[i]

    @cached_property
    def members(self) -> list[FiniteAtomicLattice]:
        return [from_masks(f, self.n) for f in self.families]

    def index_of(self, P: FiniteAtomicLattice | Iterable[int]) -> int:
        fam = P.family if isinstance(P, FiniteAtomicLattice) else P
        return self.index[family_key(fam)]

    @cached_property
    def _bitsets(self) -> list[int]:
        # family as a bitset over all 2**n subsets, for fast inclusion tests
        out = []
        for f in self.families:
            b = 0
            for m in f:
                b |= 1 << m
            out.append(b)
        return out

    def leq(self, i: int, j: int) -> bool:
        a, b = self._bitsets[i], self._bitsets[j]
        return a & ~b == 0

    def greater(self, i: int) -> list[int]:
        a = self._bitsets[i]
        return [j for j, b in enumerate(self._bitsets) if j != i and a & ~b == 0]

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` where member ``j`` adds one support set to member ``i``."""
        out = []
        for i, f in enumerate(self.families):
            for c in candidate_supports(self.n):
                if c not in f:
                    j = self.index.get(family_key(f | {c}))
                    if j is not None:
                        out.append((i, j))
        return out


def enumerate_L(n: int, allow_five: bool = False, workers: int = 1) -> LnUniverse:
    """Enumerate L(n) in lexicographic order of sorted bitmask lists.

    ``n = 5`` requires ``allow_five=True``; larger ``n`` raises TooLarge.
    With ``workers > 1`` the top-level branches run in separate processes;
    the output is sorted afterwards so it does not depend on the split.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ATOMS or (n == MAX_ATOMS and not allow_five):
        raise TooLarge(f"L({n}) is beyond the enumeration cap" +
                       ("" if n > MAX_ATOMS else "; pass allow_five=True"))
    jobs = [(n, None)] + [(n, s) for s in range(len(candidate_supports(n)))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_branch_job, jobs))
    else:
        parts = [_branch_job(j) for j in jobs]
    keys = sorted({k for part in parts for k in part})
    return LnUniverse(n, [frozenset(k) for k in keys])


def enumerate_L_bruteforce(n: int) -> list[tuple[int, ...]]:
    """Every subset of candidate supports, filtered by intersection closure (n <= 4)."""
    if n > 4:
        raise TooLarge("brute force is limited to n <= 4")
    cands = candidate_supports(n)
    base = base_supports(n)
    out = []
    for k in range(len(cands) + 1):
        for choice in combinations(cands, k):
            fam = base | set(choice)
            if is_intersection_closed(fam):
                out.append(family_key(fam))
    return sorted(out)


# -- order ------------------------------------------------------------------------

def leq_in_L(P: FiniteAtomicLattice, Q: FiniteAtomicLattice) -> bool:
    """``P <= Q`` in L(n): every support of ``P`` is a support of ``Q``."""
    if P.n_atoms != Q.n_atoms:
        raise AtomCountMismatch(f"{P.n_atoms} atoms vs {Q.n_atoms} atoms")
    return P.family <= Q.family


def exists_join_preserving_atom_bijection(P: FiniteAtomicLattice, Q: FiniteAtomicLattice,
                                          cap: int = 64) -> bool:
    """Search for a join-preserving map ``P -> Q`` fixing every atom.

    Backtracking over images of the non-atom elements of ``P``; such a map
    exists exactly when ``P >= Q`` in L(n).
    """
    if P.n_atoms != Q.n_atoms:
        raise AtomCountMismatch(f"{P.n_atoms} atoms vs {Q.n_atoms} atoms")
    if len(P) > cap or len(Q) > cap:
        raise TooLarge("lattices too large for the map search")
    image = {P.bottom: Q.bottom}
    for i in range(P.n_atoms):
        image[P.atom(i)] = Q.atom(i)
    rest = [p for p in P if p not in image]

    def consistent(p: int) -> bool:
        # every pair involving p, and every pair whose join is p
        for a, fa in image.items():
            j = P.join(p, a)
            if j in image and image[j] != Q.join(image[p], fa):
                return False
            for b, fb in image.items():
                if P.join(a, b) == p and image[p] != Q.join(fa, fb):
                    return False
        return True

    def rec(k: int) -> bool:
        if k == len(rest):
            return True
        p = rest[k]
        for q in Q:
            image[p] = q
            if consistent(p) and rec(k + 1):
                return True
            del image[p]
        return False

    # atoms and bottom must already be consistent among themselves
    for p in list(image):
        if not consistent(p):
            return False
    return rec(0)


def covers_above(P: FiniteAtomicLattice, universe: LnUniverse | None = None) -> list[FiniteAtomicLattice]:
    """Lattices obtained from ``P`` by adding one support set."""
    fam = P.family
    out = []
    for c in candidate_supports(P.n_atoms):
        if c in fam:
            continue
        new = fam | {c}
        if not is_intersection_closed(new):
            continue
        if universe is not None and family_key(new) not in universe.index:
            continue
        out.append(from_masks(new, P.n_atoms))
    return out


# -- Betti strata -------------------------------------------------------------------

def _pad(t: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(t) + (0,) * (n - len(t))


@dataclass
class StratumReport:
    totals: list[tuple[int, ...]]
    strata: dict[tuple[int, ...], list[int]]
    maximal: list[bool]

    def stratum_of(self, i: int) -> tuple[int, ...]:
        return self.totals[i]

    def to_json(self, universe: LnUniverse) -> dict:
        return {
            "n": universe.n,
            "count": len(universe),
            "strata": [
                {"totals": list(t), "members": [
                    {"index": i, "family": [bits(m) for m in sorted(universe.families[i],
                                                                    key=lambda m: (popcount(m), m))],
                     "maximal_in_stratum": self.maximal[i]} for i in members]}
                for t, members in sorted(self.strata.items())
            ],
        }


def betti_strata(universe: LnUniverse, field=None) -> StratumReport:
    F = Field.parse(field)
    totals = [total_betti(P, F) for P in universe.members]
    strata: dict[tuple[int, ...], list[int]] = {}
    for i, t in enumerate(totals):
        strata.setdefault(t, []).append(i)
    maximal = [all(totals[j] != totals[i] for j in universe.greater(i))
               for i in range(len(universe))]
    return StratumReport(totals, strata, maximal)


def is_maximal_in_stratum(P: FiniteAtomicLattice, universe: LnUniverse, field=None):
    """``(flag, violator)``; ``violator`` is the first greater member with equal totals."""
    F = Field.parse(field)
    i = universe.index_of(P)
    mine = total_betti(P, F)
    for j in universe.greater(i):
        if total_betti(universe.lattice(j), F) == mine:
            return False, universe.lattice(j)
    return True, None


@dataclass
class TreePropositionReport:
    tree: Tree
    base_totals: tuple[int, ...]
    covers: list[tuple[list[list[int]], tuple[int, ...], bool]]

    @property
    def holds(self) -> bool:
        return all(ok for _, _, ok in self.covers)


def strictly_increases(base: Sequence[int], other: Sequence[int]) -> bool:
    """Componentwise at least ``base`` with a strict increase in ``b_2``."""
    n = max(len(base), len(other), 3)
    a, b = _pad(base, n), _pad(other, n)
    return all(y >= x for x, y in zip(a, b)) and b[2] > a[2]


def check_tree_proposition(T: Tree, field=None, allow_six: bool = False) -> TreePropositionReport:
    """Every lattice covering the subtree lattice has strictly larger total Betti numbers."""
    if T.n_vertices > 6 or (T.n_vertices == 6 and not allow_six):
        raise TooLarge("trees are limited to 5 vertices (6 with allow_six=True)")
    F = Field.parse(field)
    P = subtree_lattice(T)
    base = total_betti(P, F)
    rows = []
    for Q in covers_above(P):
        t = total_betti(Q, F)
        added = sorted(Q.family - P.family)
        rows.append(([bits(m) for m in added], t, strictly_increases(base, t)))
    return TreePropositionReport(T, base, rows)
