"""Monomials, monomial ideals and their lcm lattices."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .lattice_core import FiniteAtomicLattice, bits, from_masks, to_mask


class NotDivisible(ArithmeticError):
    pass


class NonMinimalGenerators(ValueError):
    pass


class VariableAbsent(KeyError):
    pass


class Monomial:
    """Immutable monomial ``prod x**e``, keyed by variable name.

    Zero exponents are never stored, so ``Monomial()`` is the unit.
    """

    __slots__ = ("_exps", "_hash")

    def __init__(self, exps: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        d: dict[str, int] = {}
        for v, e in items:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent of {v!r} must be a nonnegative int, got {e!r}")
            if e:
                d[v] = d.get(v, 0) + e
        self._exps = tuple(sorted(d.items()))
        self._hash = hash(self._exps)

    @classmethod
    def var(cls, name: str, e: int = 1) -> "Monomial":
        return cls({name: e})

    @classmethod
    def product(cls, ms: Iterable["Monomial"]) -> "Monomial":
        d: dict[str, int] = {}
        for m in ms:
            for v, e in m._exps:
                d[v] = d.get(v, 0) + e
        return cls(d)

    def exponents(self) -> dict[str, int]:
        return dict(self._exps)

    def degree(self, v: str) -> int:
        for name, e in self._exps:
            if name == v:
                return e
        return 0

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def __bool__(self):
        # truthiness would be ambiguous between "nonzero" and "nonunit"
        raise TypeError("use is_one() to test for the unit monomial")

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.product((self, other))

    def __repr__(self):
        return f"Monomial({dict(self._exps)!r})"

    def __str__(self):
        return self.format()

    def format(self, order: Sequence[str] | None = None) -> str:
        """Concatenated string such as ``x1y2^2``; ``"1"`` for the unit."""
        if not self._exps:
            return "1"
        d = dict(self._exps)
        names = [v for v in order if v in d] if order is not None else []
        names += [v for v, _ in self._exps if v not in names]
        return "".join(v if d[v] == 1 else f"{v}^{d[v]}" for v in names)


ONE = Monomial()


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    d = m1.exponents()
    for v, e in m2._exps:
        d[v] = max(d.get(v, 0), e)
    return Monomial(d)


def gcd(m1: Monomial, m2: Monomial) -> Monomial:
    d2 = m2.exponents()
    return Monomial({v: min(e, d2[v]) for v, e in m1._exps if v in d2})


def lcm_all(ms: Iterable[Monomial]) -> Monomial:
    out = ONE
    for m in ms:
        out = lcm(out, m)
    return out


def gcd_all(ms: Iterable[Monomial]) -> Monomial:
    ms = list(ms)
    if not ms:
        raise ValueError("gcd of an empty collection")
    out = ms[0]
    for m in ms[1:]:
        out = gcd(out, m)
    return out


def divides(m1: Monomial, m2: Monomial) -> bool:
    """True when ``m1`` divides ``m2``."""
    d2 = m2.exponents()
    return all(e <= d2.get(v, 0) for v, e in m1._exps)


def quotient(m1: Monomial, m2: Monomial) -> Monomial:
    """``m1 / m2``; raises :class:`NotDivisible` unless ``m2 | m1``."""
    if not divides(m2, m1):
        raise NotDivisible(f"{m2} does not divide {m1}")
    d = m1.exponents()
    for v, e in m2._exps:
        d[v] -= e
    return Monomial(d)


@dataclass(frozen=True)
class VariableTable:
    """Ordered, duplicate-free variable names; the index is the variable id."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValueError("variable names must be nonempty strings")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name: str) -> int:
        return self.names.index(name)

    @classmethod
    def covering(cls, monomials: Iterable[Monomial]) -> "VariableTable":
        seen: dict[str, None] = {}
        for m in monomials:
            for v in sorted(m.variables):
                seen.setdefault(v)
        return cls(tuple(seen))


@dataclass(frozen=True)
class MonomialIdeal:
    """An ordered list of generators over a variable table.

    Generator ``i`` corresponds to atom ``i`` of the associated lattice.
    Duplicates and redundant generators are allowed here; call
    :func:`minimal_generators` to clean them up.
    """

    variables: VariableTable
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for g in gens:
            stray = g.variables - set(self.variables.names)
            if stray:
                raise ValueError(f"generator {g} uses variables {sorted(stray)} not in the table")

    @classmethod
    def from_monomials(cls, gens: Iterable[Monomial],
                       variables: Sequence[str] | VariableTable | None = None) -> "MonomialIdeal":
        gens = tuple(gens)
        if variables is None:
            table = VariableTable.covering(gens)
        elif isinstance(variables, VariableTable):
            table = variables
        else:
            table = VariableTable(tuple(variables))
        return cls(table, gens)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "(" + ", ".join(g.format(self.variables.names) for g in self.generators) + ")"

    def generator_strings(self) -> list[str]:
        return [g.format(self.variables.names) for g in self.generators]

    def occurring_variables(self) -> list[str]:
        used = set().union(*(g.variables for g in self.generators))
        return [v for v in self.variables.names if v in used]

    def to_json(self) -> dict:
        return {"variables": list(self.variables.names),
                "generators": [{v: g.degree(v) for v in self.variables.names if g.degree(v)}
                               for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return cls(VariableTable(tuple(data["variables"])),
                   tuple(Monomial(g) for g in data["generators"]))


def minimal_generators(I: MonomialIdeal) -> MonomialIdeal:
    """Drop duplicates and generators strictly divisible by another one."""
    seen: list[Monomial] = []
    for g in I.generators:
        if g not in seen:
            seen.append(g)
    keep = [g for g in seen if not any(h != g and divides(h, g) for h in seen)]
    return MonomialIdeal(I.variables, tuple(keep))


@dataclass(frozen=True)
class LcmLattice:
    """A lattice together with the monomial ``l_p`` attached to each element."""

    lattice: FiniteAtomicLattice
    labels: tuple[Monomial, ...]
    ideal: MonomialIdeal

    def label(self, p: int) -> Monomial:
        return self.labels[p]

    def id_of_monomial(self, m: Monomial) -> int:
        return self.labels.index(m)


def lcm_lattice(I: MonomialIdeal) -> LcmLattice:
    """The lcm lattice of a minimally generated ideal.

    Atom ``i`` is generator ``i``; each element's support is the set of
    generators dividing its lcm.
    """
    gens = I.generators
    for a, b in combinations(range(len(gens)), 2):
        if divides(gens[a], gens[b]) or divides(gens[b], gens[a]):
            raise NonMinimalGenerators(
                f"generators {a} ({gens[a]}) and {b} ({gens[b]}) are comparable")
    # fixpoint over pairwise lcms, keyed by the monomial itself
    found = {ONE: 0}
    frontier = list(gens)
    for g in gens:
        found.setdefault(g, 0)
    while frontier:
        new = []
        current = list(found)
        for m in frontier:
            for g in current:
                if g.is_one():
                    continue
                l = lcm(m, g)
                if l not in found:
                    found[l] = 0
                    new.append(l)
        frontier = new

    def support(m: Monomial) -> int:
        return to_mask(i for i, g in enumerate(gens) if divides(g, m))

    by_mask = {support(m): m for m in found}
    lat = from_masks(by_mask, len(gens))
    labels = tuple(by_mask[mask] for mask in lat.elements)
    return LcmLattice(lat, labels, I)


@dataclass(frozen=True)
class SupportFamily:
    """Pairs ``(variable, V_t)`` with ``V_t`` the bitmask of generators divisible by it."""

    n: int
    entries: tuple[tuple[str, int], ...]

    def sets(self) -> list[int]:
        return [m for _, m in self.entries]

    def as_dict(self) -> dict[str, frozenset[int]]:
        return {v: frozenset(bits(m)) for v, m in self.entries}

    def to_json(self) -> dict:
        """1-based indices, matching the family file format."""
        return {"n": self.n, "sets": {v: [i + 1 for i in bits(m)] for v, m in self.entries}}

    @classmethod
    def from_json(cls, data: dict) -> "SupportFamily":
        n = data["n"]
        entries = []
        for v, idx in data["sets"].items():
            if any(not 1 <= i <= n for i in idx):
                raise ValueError(f"set {v!r} has indices outside 1..{n}")
            entries.append((v, to_mask(i - 1 for i in idx)))
        return cls(n, tuple(entries))


def support_family(I: MonomialIdeal) -> SupportFamily:
    entries = []
    for v in I.occurring_variables():
        entries.append((v, to_mask(i for i, g in enumerate(I.generators) if g.degree(v) > 0)))
    return SupportFamily(len(I.generators), tuple(entries))


def codimension(I: MonomialIdeal) -> int:
    """Least number of variables meeting the support of every generator."""
    supports = [g.variables for g in I.generators]
    if any(not s for s in supports):
        return 0
    vs = I.occurring_variables()
    for k in range(1, len(vs) + 1):
        for choice in combinations(vs, k):
            c = set(choice)
            if all(s & c for s in supports):
                return k
    raise AssertionError("unreachable: all variables always form a hitting set")


def projective_dimension(I: MonomialIdeal, field=None) -> int:
    """Largest ``i`` with ``b_i(S/I) != 0``."""
    from .homology import graded_betti

    table = graded_betti(lcm_lattice(I).lattice, field)
    return max(i for i, b in enumerate(table.totals) if b)


def is_cohen_macaulay(I: MonomialIdeal, field=None) -> bool:
    return codimension(I) == projective_dimension(I, field)
