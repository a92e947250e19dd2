"""Named coordinatizations: nearly Scarf, minimal squarefree, Faridi and tree ideals."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .coordinatize import Labeling, generate_ideal
from .lattice_core import (
    FiniteAtomicLattice,
    SimplicialComplex,
    bits,
    from_masks,
    popcount,
    to_mask,
)
from .monomial_algebra import Monomial, MonomialIdeal, VariableTable


class IsSimplex(ValueError):
    pass


# -- simplicial complexes given by facets ---------------------------------------

class FacetComplex(SimplicialComplex):
    """A simplicial complex given by an antichain of facets covering all vertices.

    Unlike :class:`SimplicialComplex`, comparable facets or unused vertices
    are rejected instead of silently normalized.
    """

    def __init__(self, vertices: Iterable, facets: Iterable[Iterable]):
        facets = [frozenset(f) for f in facets]
        vertices = list(dict.fromkeys(vertices))
        if not facets:
            raise ValueError("a facet complex needs at least one facet")
        for a, b in combinations(facets, 2):
            if a <= b or b <= a:
                raise ValueError(f"facets {sorted(a)} and {sorted(b)} are comparable")
        unused = set(vertices) - set().union(*facets)
        if unused:
            raise ValueError(f"vertices {sorted(unused)} lie in no facet")
        super().__init__(vertices, facets)

    @classmethod
    def from_json(cls, data: dict) -> "FacetComplex":
        return cls([str(v) for v in data["vertices"]], [[str(v) for v in f] for f in data["facets"]])

    def to_json(self) -> dict:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return {"vertices": [str(v) for v in self.vertices],
                "facets": [[str(v) for v in sorted(f, key=pos.get)] for f in self.facets]}

    def mask(self, face) -> int:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return to_mask(pos[v] for v in face)

    def face_masks(self) -> list[int]:
        """Nonempty faces as vertex-position bitmasks."""
        return [self.mask(f) for f in self.faces if f]

    def facet_masks(self) -> list[int]:
        return [self.mask(f) for f in self.facets]

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def face_name(self, mask: int) -> str:
        return "x_{" + ",".join(str(self.vertices[i]) for i in bits(mask)) + "}"


def augmented_face_poset(D: FacetComplex) -> FiniteAtomicLattice:
    """Faces of ``D`` by vertex support, with the empty face and, unless
    ``D`` is a simplex, a new top on the full vertex set."""
    n = len(D.vertices)
    masks = set(D.face_masks()) | {0, (1 << n) - 1}
    return from_masks(masks, n)


def _face_variables(D: FacetComplex, include_empty: bool = False) -> VariableTable:
    masks = sorted(set(D.face_masks()), key=lambda m: (popcount(m), bits(m)))
    names = ([D.face_name(0)] if include_empty else []) + [D.face_name(m) for m in masks]
    return VariableTable(tuple(names))


def nearly_scarf(D: FacetComplex, include_empty_face: bool = False):
    """One variable per face, placed on that face's element of the face poset.

    Returns ``(lattice, labeling, ideal)``.  The generator of vertex ``v``
    is the product of the variables of faces not containing ``v``.
    """
    if len(D.vertices) < 2:
        raise ValueError("need at least two vertices")
    if D.is_simplex():
        raise IsSimplex("the nearly Scarf labeling needs a complex that is not a simplex")
    P = augmented_face_poset(D)
    table = _face_variables(D, include_empty_face)
    labels = {P.id_of(m): Monomial.var(D.face_name(m)) for m in D.face_masks()}
    if include_empty_face:
        labels[P.bottom] = Monomial.var(D.face_name(0))
    M = Labeling(P, labels, table)
    return P, M, generate_ideal(P, M)


def nearly_scarf_generators(D: FacetComplex, include_empty_face: bool = False) -> list[Monomial]:
    """Direct product formula, independent of the lattice route."""
    faces = D.face_masks()
    out = []
    for v in range(len(D.vertices)):
        names = [D.face_name(f) for f in faces if not f >> v & 1]
        if include_empty_face:
            names.append(D.face_name(0))
        out.append(Monomial({n: 1 for n in names}))
    return out


def minimal_squarefree(P: FiniteAtomicLattice, prefix: str = "z"):
    """Distinct variables on the meet-irreducibles strictly between bottom and top.

    Variables are numbered ``z1, z2, ...`` in element-id order.  Returns
    ``(labeling, ideal)``.
    """
    if P.n_atoms < 2:
        raise ValueError("need at least two atoms")
    mi = sorted(p for p in P.meet_irreducibles() if p not in (P.bottom, P.top))
    names = tuple(f"{prefix}{k + 1}" for k in range(len(mi)))
    labels = {p: Monomial.var(n) for p, n in zip(mi, names)}
    M = Labeling(P, labels, VariableTable(names))
    return M, generate_ideal(P, M)


def faridi_labeling(D: FacetComplex) -> Labeling:
    """Label every facet (except the top face of a simplex) and every
    codimension-one face of every facet with its face variable."""
    if len(D.vertices) < 2:
        raise ValueError("need at least two vertices")
    P = augmented_face_poset(D)
    chosen = set()
    for f in D.facet_masks():
        if not D.is_simplex():
            chosen.add(f)
        for i in bits(f):
            chosen.add(f & ~(1 << i))
    table = _face_variables(D, include_empty=0 in chosen)
    labels = {P.id_of(m): Monomial.var(D.face_name(m)) for m in chosen}
    return Labeling(P, labels, table)


def faridi_ideal(D: FacetComplex) -> MonomialIdeal:
    """Squarefree generators read off facets containing / avoiding each vertex."""
    if len(D.vertices) < 2:
        raise ValueError("need at least two vertices")
    facets = D.facet_masks()
    gens = []
    used = set()
    for v in range(len(D.vertices)):
        bit = 1 << v
        names = set()
        for G in facets:
            if G & bit:
                names.add(G & ~bit)
            else:
                names.add(G)
                names.update(G & ~(1 << i) for i in bits(G))
        used |= names
        gens.append(Monomial({D.face_name(m): 1 for m in names}))
    table = _face_variables(D, include_empty=0 in used)
    return MonomialIdeal(table, tuple(gens))


# -- trees -------------------------------------------------------------------------

@dataclass(frozen=True)
class Tree:
    """A tree on vertices ``0..V-1`` with an ordered edge list.

    Edges are stored as ``(j, k)`` with ``j < k``; edge ``i`` is
    ``edges[i]``.  File format and printed names are 1-based.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        V = self.n_vertices
        if V < 1:
            raise ValueError("a tree needs a vertex")
        if len(edges) != V - 1:
            raise ValueError(f"{V} vertices need {V - 1} edges, got {len(edges)}")
        for j, k in edges:
            if not (0 <= j < V and 0 <= k < V) or j == k:
                raise ValueError(f"bad edge {(j + 1, k + 1)}")
        if len(set(edges)) != len(edges):
            raise ValueError("repeated edge")
        if not _connected(V, edges, (1 << V) - 1):
            raise ValueError("edges do not connect all vertices")

    @classmethod
    def from_edges(cls, edges: Sequence[Sequence[int]], n_vertices: int | None = None,
                   one_based: bool = True) -> "Tree":
        shift = 1 if one_based else 0
        es = [(a - shift, b - shift) for a, b in edges]
        if n_vertices is None:
            n_vertices = len(es) + 1
        return cls(n_vertices, tuple(es))

    @classmethod
    def from_json(cls, data: dict) -> "Tree":
        return cls.from_edges(data["edges"], data["vertices"])

    def to_json(self) -> dict:
        return {"vertices": self.n_vertices, "edges": [[j + 1, k + 1] for j, k in self.edges]}

    @classmethod
    def from_prufer(cls, seq: Sequence[int]) -> "Tree":
        """Labeled tree from a 0-based Prüfer sequence."""
        V = len(seq) + 2
        degree = [1] * V
        for s in seq:
            degree[s] += 1
        edges = []
        for s in seq:
            leaf = min(i for i in range(V) if degree[i] == 1)
            edges.append((leaf, s))
            degree[leaf] -= 1
            degree[s] -= 1
        u, w = [i for i in range(V) if degree[i] == 1]
        edges.append((u, w))
        return cls(V, tuple(edges))

    def as_complex(self) -> FacetComplex:
        names = [str(i + 1) for i in range(self.n_vertices)]
        if self.n_vertices == 1:
            return FacetComplex(names, [names])
        return FacetComplex(names, [[names[j], names[k]] for j, k in self.edges])

    def components(self, i: int, flip: bool = False) -> tuple[int, int]:
        """Vertex masks ``(T_{i,1}, T_{i,2})`` after deleting edge ``i``.

        ``T_{i,1}`` holds the smaller endpoint unless ``flip`` is set.
        """
        j, k = self.edges[i]
        rest = self.edges[:i] + self.edges[i + 1:]
        side_j = _component(self.n_vertices, rest, j)
        side_k = ((1 << self.n_vertices) - 1) & ~side_j
        return (side_k, side_j) if flip else (side_j, side_k)


def _component(V: int, edges, start: int) -> int:
    seen = 1 << start
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            if (seen >> a & 1) != (seen >> b & 1):
                seen |= (1 << a) | (1 << b)
                changed = True
    return seen


def _connected(V: int, edges, mask: int) -> bool:
    if mask == 0:
        return True
    start = bits(mask)[0]
    inside = [(a, b) for a, b in edges if mask >> a & 1 and mask >> b & 1]
    return _component(V, inside, start) == mask


def tree_variables(T: Tree) -> VariableTable:
    names = []
    for i in range(len(T.edges)):
        names += [f"x{i + 1}", f"y{i + 1}"]
    return VariableTable(tuple(names))


def floystad_tree_ideal(T: Tree, flips: Iterable[int] = ()) -> MonomialIdeal:
    """Two variables per edge: vertex ``v`` gets ``x_i`` when it lies in
    ``T_{i,1}`` and ``y_i`` when it lies in ``T_{i,2}``."""
    flips = set(flips)
    comps = [T.components(i, i in flips) for i in range(len(T.edges))]
    gens = []
    for v in range(T.n_vertices):
        e = {}
        for i, (c1, _) in enumerate(comps):
            e[f"x{i + 1}" if c1 >> v & 1 else f"y{i + 1}"] = 1
        gens.append(Monomial(e))
    return MonomialIdeal(tree_variables(T), tuple(gens))


def subtree_lattice(T: Tree) -> FiniteAtomicLattice:
    """Vertex sets of all subtrees (empty set and single vertices included)."""
    V = T.n_vertices
    masks = [m for m in range(1 << V) if _connected(V, T.edges, m)]
    return from_masks(masks, V)


def meet_irreducible_subtrees(T: Tree, flips: Iterable[int] = ()) -> list[tuple[int, int, int]]:
    """``(element id, edge index, side)`` for the two components of each edge deletion."""
    flips = set(flips)
    P = subtree_lattice(T)
    out = []
    for i in range(len(T.edges)):
        for side, m in enumerate(T.components(i, i in flips), start=1):
            out.append((P.id_of(m), i, side))
    return out


def floystad_coordinatization(T: Tree, flips: Iterable[int] = ()) -> Labeling:
    """``y_i`` on ``T_{i,1}`` and ``x_i`` on ``T_{i,2}`` in the subtree lattice."""
    P = subtree_lattice(T)
    labels = {}
    for p, i, side in meet_irreducible_subtrees(T, flips):
        labels[p] = Monomial.var(f"y{i + 1}" if side == 1 else f"x{i + 1}")
    return Labeling(P, labels, tree_variables(T))
