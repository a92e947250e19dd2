"""Finite atomic lattices stored as families of atom supports.

An element of a finite atomic lattice is identified with the set of atoms
below it.  The family of these supports is closed under intersection, the
meet of two elements is the intersection of their supports and the join is
the least member of the family containing the union.  Supports are kept as
Python ``int`` bitmasks (bit ``i`` set when atom ``i`` is below).
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence


class LatticeError(ValueError):
    """Base class for malformed lattice input."""


class MissingTop(LatticeError):
    pass


class MissingAtom(LatticeError):
    pass


class NotIntersectionClosed(LatticeError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(
            f"intersection of {sorted(bits(a))} and {sorted(bits(b))} is not in the family")


class DuplicateElement(LatticeError):
    pass


class AtomOutOfRange(LatticeError):
    pass


class AtomCountMismatch(LatticeError):
    pass


class NotComparable(LatticeError):
    pass


class InvalidElement(LatticeError):
    pass


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_key(mask: int) -> tuple[int, int]:
    return popcount(mask), mask


class FiniteAtomicLattice:
    """A validated finite atomic lattice on ``n_atoms`` labeled atoms.

    Elements are numbered by the canonical order (cardinality of support,
    then support as an integer), so element ``0`` is the bottom, elements
    ``1..n`` are the atoms in atom order and the last element is the top.
    Instances are immutable; build them with :func:`from_family` or
    :func:`from_masks`.
    """

    __slots__ = ("n_atoms", "elements", "_index", "__dict__")

    def __init__(self, n_atoms: int, elements: Sequence[int]):
        self.n_atoms = n_atoms
        self.elements = tuple(elements)
        self._index = {m: i for i, m in enumerate(self.elements)}

    # -- basic access -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(range(len(self.elements)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteAtomicLattice):
            return NotImplemented
        return self.n_atoms == other.n_atoms and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.n_atoms, self.elements))

    def __repr__(self) -> str:
        return f"FiniteAtomicLattice(n_atoms={self.n_atoms}, size={len(self)})"

    @property
    def family(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    @property
    def full_mask(self) -> int:
        return (1 << self.n_atoms) - 1

    def support(self, p: int) -> int:
        return self.elements[p]

    def support_set(self, p: int) -> frozenset[int]:
        return frozenset(bits(self.elements[p]))

    def id_of(self, mask: int) -> int:
        try:
            return self._index[mask]
        except KeyError:
            raise InvalidElement(f"{sorted(bits(mask))} is not an element") from None

    def contains_mask(self, mask: int) -> bool:
        return mask in self._index

    def atom(self, i: int) -> int:
        """Element id of atom ``i``."""
        return self._index[1 << i]

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(self._index[1 << i] for i in range(self.n_atoms))

    def _check(self, p: int) -> None:
        if not 0 <= p < len(self.elements):
            raise InvalidElement(f"no element with id {p}")

    # -- order, meet, join --------------------------------------------

    def leq(self, p: int, q: int) -> bool:
        return self.elements[p] & ~self.elements[q] == 0

    def lt(self, p: int, q: int) -> bool:
        return p != q and self.leq(p, q)

    def comparable(self, p: int, q: int) -> bool:
        return self.leq(p, q) or self.leq(q, p)

    def meet(self, p: int, q: int) -> int:
        return self._index[self.elements[p] & self.elements[q]]

    def join_mask(self, mask: int) -> int:
        """Id of the least element whose support contains ``mask``."""
        # canonical order lists smaller supports first; intersection-closure
        # makes the first superset the least one
        for i, m in enumerate(self.elements):
            if mask & ~m == 0:
                return i
        raise InvalidElement(f"{sorted(bits(mask))} is not below the top")

    def join(self, p: int, q: int) -> int:
        return self.join_table[p][q]

    def join_all(self, ids: Iterable[int]) -> int:
        m = 0
        for p in ids:
            m |= self.elements[p]
        return self.join_mask(m)

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.elements)
        rows = [[0] * n for _ in range(n)]
        for p in range(n):
            for q in range(p, n):
                j = self.join_mask(self.elements[p] | self.elements[q])
                rows[p][q] = rows[q][p] = j
        return tuple(tuple(r) for r in rows)

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        e, idx = self.elements, self._index
        return tuple(tuple(idx[a & b] for b in e) for a in e)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.elements)
        above = [[q for q in range(n) if self.lt(p, q)] for p in range(n)]
        out = []
        for p in range(n):
            ups = above[p]
            out.append(tuple(q for q in ups
                             if not any(self.lt(r, q) for r in ups if r != q)))
        return tuple(out)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        low: list[list[int]] = [[] for _ in self.elements]
        for p, ups in enumerate(self.upper_covers):
            for q in ups:
                low[q].append(p)
        return tuple(tuple(x) for x in low)

    @property
    def covers(self) -> list[tuple[int, int]]:
        """All cover pairs ``(lower, upper)``."""
        return [(p, q) for p, ups in enumerate(self.upper_covers) for q in ups]

    # -- derived sets -------------------------------------------------

    def filter(self, p: int) -> frozenset[int]:
        self._check(p)
        return frozenset(q for q in self if self.leq(p, q))

    def order_ideal(self, p: int) -> frozenset[int]:
        self._check(p)
        return frozenset(q for q in self if self.leq(q, p))

    def filter_complement(self, p: int) -> frozenset[int]:
        return frozenset(self) - self.filter(p)

    def meet_irreducibles(self) -> frozenset[int]:
        """Elements with exactly one upper cover (the top is never included)."""
        return frozenset(p for p, ups in enumerate(self.upper_covers) if len(ups) == 1)

    def meet_irreducibles_by_definition(self) -> frozenset[int]:
        """Elements ``x`` that are not ``a ^ b`` for any ``a, b > x``.

        Slow direct reading of the definition; used to cross-check
        :meth:`meet_irreducibles`.  The top qualifies vacuously here, so it
        is dropped to agree with the cover-count version.
        """
        out = set()
        for x in self:
            above = [a for a in self if self.lt(x, a)]
            if not above:
                continue
            if not any(self.meet(a, b) == x for a in above for b in above):
                out.add(x)
        return frozenset(out)

    def open_interval(self, a: int, b: int) -> "Poset":
        if not self.leq(a, b):
            raise NotComparable(f"element {a} is not below {b}")
        return self.induced_subposet(q for q in self if self.lt(a, q) and self.lt(q, b))

    def closed_interval(self, a: int, b: int) -> "Poset":
        if not self.leq(a, b):
            raise NotComparable(f"element {a} is not below {b}")
        return self.induced_subposet(q for q in self if self.leq(a, q) and self.leq(q, b))

    def induced_subposet(self, ids: Iterable[int]) -> "Poset":
        nodes = tuple(sorted(set(ids)))
        less = frozenset((p, q) for p in nodes for q in nodes if self.lt(p, q))
        return Poset(nodes, less)

    def as_poset(self) -> "Poset":
        return self.induced_subposet(self)

    # -- serialization ------------------------------------------------

    def element_lists(self) -> list[list[int]]:
        return [bits(m) for m in self.elements]

    def to_json(self) -> dict:
        return {"n_atoms": self.n_atoms, "elements": self.element_lists()}


def from_masks(masks: Iterable[int], n: int) -> FiniteAtomicLattice:
    """Validate a family of support bitmasks and return the lattice.

    The empty set is adjoined if absent.  Raises a :class:`LatticeError`
    subclass for a missing top, a missing singleton, a repeated member, a
    member outside ``range(n)`` or a failure of intersection closure.
    """
    masks = list(masks)
    full = (1 << n) - 1
    seen: set[int] = set()
    for m in masks:
        if m < 0 or m & ~full:
            raise AtomOutOfRange(f"{sorted(bits(m))} uses atoms outside 0..{n - 1}")
        if m in seen:
            raise DuplicateElement(f"{sorted(bits(m))} appears twice")
        seen.add(m)
    seen.add(0)
    if full not in seen:
        raise MissingTop(f"the full atom set 0..{n - 1} is not in the family")
    for i in range(n):
        if 1 << i not in seen:
            raise MissingAtom(f"singleton {{{i}}} is missing")
    ordered = sorted(seen, key=canonical_key)
    for a, b in combinations(ordered, 2):
        if a & b not in seen:
            raise NotIntersectionClosed(a, b)
    return FiniteAtomicLattice(n, ordered)


def from_family(sets: Iterable[Iterable[int]], n: int) -> FiniteAtomicLattice:
    """Build a lattice from atom-index sets, e.g. ``[[0], [1], [0, 1]]``."""
    return from_masks((to_mask(s) for s in sets), n)


def from_json(data: dict) -> FiniteAtomicLattice:
    return from_family(data["elements"], data["n_atoms"])


def from_hasse(covers: Iterable[tuple[Hashable, Hashable]]):
    """Build a lattice from the cover relations of a Hasse diagram.

    Returns ``(lattice, node_to_id)``.  Atoms are the nodes covering the
    unique minimal node, numbered in order of first appearance (sorted when
    the node names are sortable).  The cover relation of the result is
    checked against the input.
    """
    covers = list(covers)
    nodes = []
    for a, b in covers:
        for v in (a, b):
            if v not in nodes:
                nodes.append(v)
    below = {v: set() for v in nodes}
    for a, b in covers:
        below[b].add(a)
    bottoms = [v for v in nodes if not below[v]]
    if len(bottoms) != 1:
        raise LatticeError(f"expected one minimal node, found {bottoms}")
    bot = bottoms[0]
    atom_nodes = [v for v in nodes if below[v] == {bot}]
    try:
        atom_nodes.sort()
    except TypeError:
        pass
    atom_index = {v: i for i, v in enumerate(atom_nodes)}

    support: dict = {}

    def supp(v):
        if v not in support:
            if v == bot:
                support[v] = 0
            elif v in atom_index:
                support[v] = 1 << atom_index[v]
            else:
                m = 0
                for u in below[v]:
                    m |= supp(u)
                support[v] = m
        return support[v]

    for v in nodes:
        supp(v)
    lat = from_masks([support[v] for v in nodes], len(atom_nodes))
    mapping = {v: lat.id_of(support[v]) for v in nodes}
    given = {(mapping[a], mapping[b]) for a, b in covers}
    if given != set(lat.covers):
        raise LatticeError("cover relations are not those of the atomic lattice they generate")
    return lat, mapping


def is_isomorphic_atomfixed(P: FiniteAtomicLattice, Q: FiniteAtomicLattice) -> bool:
    """Equal support families on the same labeled atoms."""
    if P.n_atoms != Q.n_atoms:
        raise AtomCountMismatch(f"{P.n_atoms} atoms vs {Q.n_atoms} atoms")
    return P.family == Q.family


def boolean_lattice(n: int) -> FiniteAtomicLattice:
    return from_masks(range(1 << n), n)


# -- generic posets and simplicial complexes ------------------------------

class Poset:
    """A finite poset given by its node tuple and strict order pairs."""

    __slots__ = ("nodes", "less")

    def __init__(self, nodes: Sequence[Hashable], less: Iterable[tuple]):
        self.nodes = tuple(nodes)
        self.less = frozenset(less)

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"Poset({len(self.nodes)} nodes, {len(self.less)} relations)"

    def lt(self, a, b) -> bool:
        return (a, b) in self.less

    @classmethod
    def chain(cls, k: int) -> "Poset":
        return cls(range(k), ((i, j) for i in range(k) for j in range(i + 1, k)))

    @classmethod
    def antichain(cls, k: int) -> "Poset":
        return cls(range(k), ())


def _vkey(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


def _face_key(f):
    return (len(f), sorted(map(_vkey, f)))


class SimplicialComplex:
    """Abstract simplicial complex defined by its facets.

    ``facets`` holds inclusion-maximal faces as frozensets of vertex labels.
    A complex with no facets is the *empty complex* ``{∅}`` unless
    ``void=True``, in which case it has no faces at all.
    """

    __slots__ = ("vertices", "facets", "void", "__dict__")

    def __init__(self, vertices: Iterable[Hashable], facets: Iterable[Iterable[Hashable]],
                 void: bool = False):
        fs = {frozenset(f) for f in facets}
        fs.discard(frozenset())
        maximal = [f for f in fs if not any(f < g for g in fs)]
        self.facets = tuple(sorted(maximal, key=_face_key))
        verts = list(dict.fromkeys(vertices))
        covered = set().union(*self.facets) if self.facets else set()
        missing = covered - set(verts)
        if missing:
            raise ValueError(f"facets use undeclared vertices {sorted(missing, key=_vkey)}")
        self.vertices = tuple(verts)
        if void and self.facets:
            raise ValueError("a void complex has no faces")
        self.void = void

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, facets={[sorted(f) for f in self.facets]})"

    @property
    def dimension(self) -> int:
        if self.void:
            return -2
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def faces(self) -> tuple[frozenset, ...]:
        """All faces, the empty face included (unless void)."""
        if self.void:
            return ()
        seen = {frozenset()}
        for f in self.facets:
            fl = sorted(f, key=_vkey)
            for k in range(1, len(fl) + 1):
                seen.update(frozenset(c) for c in combinations(fl, k))
        return tuple(sorted(seen, key=_face_key))

    def faces_of_dim(self, d: int) -> list[frozenset]:
        return [f for f in self.faces if len(f) == d + 1]

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by size: ``(#∅, #vertices, #edges, ...)``."""
        if self.void:
            return ()
        counts = [0] * (self.dimension + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def induced(self, subset: Iterable[Hashable]) -> "SimplicialComplex":
        """Subcomplex of faces lying inside ``subset``."""
        s = set(subset)
        fs = [f & s for f in self.facets]
        return SimplicialComplex([v for v in self.vertices if v in s], fs)


def order_complex(Q: Poset) -> SimplicialComplex:
    """Complex of chains of ``Q``; facets are the maximal chains."""
    succ = {a: [b for b in Q.nodes if Q.lt(a, b)] for a in Q.nodes}
    minimal = [a for a in Q.nodes if not any(Q.lt(b, a) for b in Q.nodes)]
    facets = []

    def extend(chain):
        last = chain[-1]
        nxt = [b for b in succ[last] if not any(Q.lt(c, b) for c in succ[last] if c != b)]
        if not nxt:
            facets.append(chain)
            return
        for b in nxt:
            extend(chain + [b])

    for a in minimal:
        extend([a])
    return SimplicialComplex(Q.nodes, facets)


def crosscut_complex(P: FiniteAtomicLattice, p: int) -> SimplicialComplex:
    """Crosscut complex of the open interval ``(0̂, p)`` of ``P``.

    Vertices are the atoms strictly below ``p``; a nonempty set of them is
    a face when its join is strictly below ``p``.
    """
    if not 0 <= p < len(P):
        raise InvalidElement(f"no element with id {p}")
    if p == P.bottom:
        raise InvalidElement("the crosscut complex needs an element above the bottom")
    sup = P.support(p)
    atoms = [i for i in bits(sup) if (1 << i) != sup]
    faces = []
    # supports of elements strictly below p are exactly the maximal faces
    # candidates: a set is a face iff its join is a proper lower element
    for q in range(len(P)):
        m = P.support(q)
        if m != sup and m & ~sup == 0 and m:
            faces.append(bits(m))
    return SimplicialComplex(atoms, faces)


def crosscut_complex_bruteforce(P: FiniteAtomicLattice, p: int) -> SimplicialComplex:
    """Same complex as :func:`crosscut_complex`, by testing every atom subset."""
    sup = P.support(p)
    atoms = [i for i in bits(sup) if (1 << i) != sup]
    faces = []
    for k in range(1, len(atoms) + 1):
        for S in combinations(atoms, k):
            if P.join_mask(to_mask(S)) != p:
                faces.append(S)
    return SimplicialComplex(atoms, faces)
