"""Reduced homology, Betti numbers of lattices and resolution-support checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .lattice_core import (
    FiniteAtomicLattice,
    SimplicialComplex,
    bits,
    crosscut_complex,
    order_complex,
    popcount,
    to_mask,
)
from .linalg import is_prime, rank_mod_p, rank_rational
from .monomial_algebra import MonomialIdeal, SupportFamily, lcm_lattice


class TooLarge(ValueError):
    pass


class VertexGeneratorMismatch(ValueError):
    pass


class EmptySet(ValueError):
    pass


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic == 0`` is Q, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @classmethod
    def parse(cls, spec: "str | Field | None") -> "Field":
        """Accepts ``q``, ``f2``, ``f<p>`` (or an existing Field / None for Q)."""
        if spec is None:
            return QQ
        if isinstance(spec, Field):
            return spec
        s = spec.strip().lower()
        if s in ("q", "qq", "rationals"):
            return QQ
        if s.startswith("f") and s[1:].isdigit():
            return cls(int(s[1:]))
        raise ValueError(f"unknown field {spec!r}; use q, f2 or f<p>")

    def rank(self, rows) -> int:
        if self.characteristic == 0:
            return rank_rational(rows)
        return rank_mod_p(rows, self.characteristic)

    def __str__(self):
        return "q" if self.characteristic == 0 else f"f{self.characteristic}"


QQ = Field(0)
GF2 = Field(2)


def _boundary(upper: Sequence[tuple], lower: Sequence[tuple]) -> list[list[int]]:
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, face in enumerate(upper):
        for k in range(len(face)):
            rows[index[face[:k] + face[k + 1:]]][j] = -1 if k % 2 else 1
    return rows


def _sorted_face(f) -> tuple:
    try:
        return tuple(sorted(f))
    except TypeError:
        return tuple(sorted(f, key=repr))


def reduced_homology(X: SimplicialComplex, field: Field | str | None = None) -> dict[int, int]:
    """Dimensions of reduced homology in degrees ``-1 .. dim X``.

    The empty complex has ``H_{-1} = 1``; the void complex has no homology.
    """
    F = Field.parse(field)
    if X.void:
        return {-1: 0}
    by_size: dict[int, list[tuple]] = {}
    for f in X.faces:
        by_size.setdefault(len(f), []).append(_sorted_face(f))
    top = max(by_size)
    ranks = {}
    for k in range(1, top + 1):
        ranks[k] = F.rank(_boundary(by_size[k], by_size[k - 1]))
    out = {}
    for k in range(0, top + 1):
        dim_chain = len(by_size.get(k, ()))
        out[k - 1] = dim_chain - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def is_acyclic(X: SimplicialComplex, field: Field | str | None = None) -> bool:
    return not any(reduced_homology(X, field).values())


# -- Betti numbers -------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Betti numbers of ``S/M`` indexed by lattice elements.

    ``graded`` only stores nonzero entries ``(i, element) -> b_{i,p}``;
    ``totals[i]`` is ``b_i``.  By convention ``b_{0, bottom} = 1``.
    """

    graded: dict
    totals: tuple[int, ...]
    field: Field = QQ

    def __getitem__(self, key) -> int:
        return self.graded.get(key, 0)

    def row(self, i: int) -> dict[int, int]:
        return {p: b for (j, p), b in self.graded.items() if j == i}


def _totals(graded: dict) -> tuple[int, ...]:
    length = max(i for i, _ in graded) + 1
    t = [0] * length
    for (i, _), b in graded.items():
        t[i] += b
    return tuple(t)


def _betti_from(P: FiniteAtomicLattice, complex_at, F: Field) -> BettiTable:
    graded = {(0, P.bottom): 1}
    for p in P:
        if p == P.bottom:
            continue
        for deg, dim in reduced_homology(complex_at(p), F).items():
            if dim:
                graded[(deg + 2, p)] = dim
    return BettiTable(graded, _totals(graded), F)


def graded_betti(P: FiniteAtomicLattice, field: Field | str | None = None) -> BettiTable:
    """``b_{i,p}`` as reduced homology in degree ``i - 2`` of the crosscut complex below ``p``."""
    F = Field.parse(field)
    return _cached_betti(P, F)


@lru_cache(maxsize=4096)
def _cached_betti(P: FiniteAtomicLattice, F: Field) -> BettiTable:
    return _betti_from(P, lambda p: crosscut_complex(P, p), F)


def graded_betti_order_complex(P: FiniteAtomicLattice, field=None) -> BettiTable:
    """Same numbers computed from order complexes of the open intervals."""
    F = Field.parse(field)
    return _betti_from(P, lambda p: order_complex(P.open_interval(P.bottom, p)), F)


def total_betti(P: FiniteAtomicLattice, field=None) -> tuple[int, ...]:
    return graded_betti(P, field).totals


# -- cellular resolutions ------------------------------------------------------

def _positions(X) -> dict:
    return {v: i for i, v in enumerate(X.vertices)}


def _masked_complex(X) -> SimplicialComplex:
    """``X`` with vertices renamed to their positions."""
    pos = _positions(X)
    return SimplicialComplex(range(len(X.vertices)), [[pos[v] for v in f] for f in X.facets])


@dataclass(frozen=True)
class SupportResult:
    status: str  # "supports_minimally", "supports" or "neither"
    failures: tuple = ()
    f_vector: tuple[int, ...] = ()
    betti_totals: tuple[int, ...] = ()

    @property
    def supports(self) -> bool:
        return self.status != "neither"


def supports_resolution(X, I: MonomialIdeal, field=None) -> SupportResult:
    """Whether the complex ``X`` supports a (minimal) free resolution of ``S/I``.

    Vertex ``i`` of ``X`` (in declaration order) stands for generator ``i``.
    The complex supports a resolution iff for every nonbottom element ``p``
    of the lcm lattice, the subcomplex on the generators dividing ``l_p`` is
    acyclic.  Minimality is tested by comparing face numbers with the total
    Betti numbers.
    """
    F = Field.parse(field)
    if len(X.vertices) != len(I.generators):
        raise VertexGeneratorMismatch(
            f"{len(X.vertices)} vertices vs {len(I.generators)} generators")
    L = lcm_lattice(I)
    P = L.lattice
    Y = _masked_complex(X)
    failures = []
    for p in P:
        if p == P.bottom:
            continue
        h = reduced_homology(Y.induced(bits(P.support(p))), F)
        if any(h.values()):
            failures.append((p, str(L.label(p)), {k: v for k, v in h.items() if v}))
    fv = Y.f_vector()
    totals = graded_betti(P, F).totals
    if failures:
        status = "neither"
    else:
        n = max(len(fv), len(totals))
        pad = lambda t: tuple(t) + (0,) * (n - len(t))  # noqa: E731
        status = "supports_minimally" if pad(fv) == pad(totals) else "supports"
    return SupportResult(status, tuple(failures), fv, totals)


# -- family conditions ----------------------------------------------------------

@dataclass(frozen=True)
class Check:
    passed: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class FamilyChecksReport:
    cover: Check          # no d sets cover [n]
    acyclic: Check        # restrictions to complements of unions are acyclic
    separating: Check     # every face pair F < G is separated by some set
    reduced: Check = field(default_factory=lambda: Check(True))
    connected: Check = field(default_factory=lambda: Check(True))

    @property
    def passed(self) -> bool:
        return self.cover.passed and self.acyclic.passed and self.separating.passed

    def as_dict(self) -> dict:
        return {name: {"passed": c.passed, "witnesses": [list(w) if isinstance(w, tuple) else w
                                                          for w in c.witnesses]}
                for name, c in (("condition_1", self.cover), ("condition_2", self.acyclic),
                                ("condition_3", self.separating), ("reduced", self.reduced),
                                ("connected", self.connected))}


def _family_masks(Fam) -> list[int]:
    if isinstance(Fam, SupportFamily):
        return Fam.sets()
    return [m if isinstance(m, int) else to_mask(m) for m in Fam]


def check_cmstar_conditions(X, Fam, n: int, d: int | None = None,
                            field=None) -> FamilyChecksReport:
    """Run the three combinatorial conditions of a family labeling ``X``.

    ``Fam`` holds 0-based vertex index sets (or a :class:`SupportFamily`).
    ``d`` defaults to the dimension of ``X``.
    """
    F = Field.parse(field)
    if len(X.vertices) != n:
        raise VertexGeneratorMismatch(f"complex has {len(X.vertices)} vertices, expected {n}")
    if n > 20:
        raise TooLarge(f"{n} vertices is beyond the exhaustive union search")
    Y = _masked_complex(X)
    if d is None:
        d = Y.dimension
    sets = _family_masks(Fam)
    full = (1 << n) - 1

    w1 = []
    for combo in combinations(range(len(sets)), min(d, len(sets))):
        u = 0
        for i in combo:
            u |= sets[i]
        if u == full:
            w1.append(tuple(bits(sets[i]) for i in combo))

    unions = {0}
    for s in sets:
        unions |= {u | s for u in unions}
    w2 = []
    for W in sorted(unions, key=lambda m: (popcount(m), m)):
        if W == full:
            continue  # nothing is left to restrict to
        h = reduced_homology(Y.induced(bits(full & ~W)), F)
        if any(h.values()):
            w2.append((bits(W), {k: v for k, v in h.items() if v}))

    w3 = []
    faces = [to_mask(f) for f in Y.faces]
    for f in faces:
        for g in faces:
            if f != g and f & ~g == 0:
                if not any(s & f == 0 and s & g for s in sets):
                    w3.append((bits(f), bits(g)))

    red, red_w = is_reduced_family(sets)
    conn = [bits(s) for s in sets if s and not restriction_connected(X, bits(s))]
    return FamilyChecksReport(
        Check(not w1, tuple(w1)), Check(not w2, tuple(w2)), Check(not w3, tuple(w3)),
        Check(red, (red_w,) if red_w else ()), Check(not conn, tuple(conn)))


def _partitions_into(target: int, pieces: list[int], min_parts: int):
    """A list of members of ``pieces`` partitioning ``target``, or None."""
    if target == 0:
        return [] if min_parts <= 0 else None
    low = target & -target
    for s in pieces:
        if s & low and s & ~target == 0:
            rest = _partitions_into(target & ~s, pieces, min_parts - 1)
            if rest is not None:
                return [s] + rest
    return None


def is_reduced_family(Fam) -> tuple[bool, tuple | None]:
    """No member is a disjoint union of two or more other members.

    Returns ``(ok, witness)`` with ``witness = (member, parts)`` on failure.
    """
    sets = list(dict.fromkeys(_family_masks(Fam)))
    for s in sets:
        others = [t for t in sets if t != s and t and t & ~s == 0]
        parts = _partitions_into(s, others, 2)
        if parts is not None:
            return False, (bits(s), [bits(t) for t in parts])
    return True, None


def refinement_leq(Fam, Gam) -> bool:
    """True when every member of ``Gam`` is a disjoint union of members of ``Fam``.

    In other words ``Fam`` consists of refinements of the members of ``Gam``
    plus possibly extra subsets.
    """
    fs = list(dict.fromkeys(_family_masks(Fam)))
    for g in _family_masks(Gam):
        if _partitions_into(g, [f for f in fs if f and f & ~g == 0], 1) is None:
            return False
    return True


def restriction_connected(X, S: Iterable) -> bool:
    """Connectivity of the 1-skeleton of ``X`` restricted to vertex positions ``S``."""
    S = set(S)
    if not S:
        raise EmptySet("restriction to the empty set")
    Y = _masked_complex(X).induced(S)
    adj = {v: set() for v in S}
    for f in Y.facets:
        fl = list(f)
        for a in fl:
            adj[a].update(fl)
    start = next(iter(S))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return seen == S
