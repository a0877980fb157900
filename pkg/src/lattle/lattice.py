"""Finite bounded lattices, element sets and the set-level relations on them.

Elements are identified by their index in the lattice; labels only matter for
input and output.  Subsets of a lattice are :class:`ElementSet` values, a thin
immutable wrapper around an integer bitmask (bit ``i`` set means element ``i``
is a member).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DuplicateLabel,
    NoBottom,
    NoTop,
    NotALattice,
    TrivialLattice,
    UnknownLabel,
)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ElementSet:
    """An immutable set of element indices."""

    __slots__ = ("mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("mask must be non-negative")
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    def __reduce__(self):
        return (ElementSet, (self.mask,))

    @classmethod
    def of(cls, indices: Iterable[int]) -> ElementSet:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: int) -> bool:
        return i >= 0 and (self.mask >> i) & 1 == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((ElementSet, self.mask))

    def __le__(self, other: ElementSet) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self.mask != other.mask and self <= other

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask | other.mask)

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask & other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask & ~other.mask)

    def __repr__(self) -> str:
        return f"ElementSet({{{', '.join(map(str, self))}}})"

    def min(self) -> int:
        """Lowest member index; raises ValueError on the empty set."""
        if not self.mask:
            raise ValueError("empty set has no members")
        return (self.mask & -self.mask).bit_length() - 1


EMPTY = ElementSet(0)


@dataclass(frozen=True)
class LatticeSpec:
    """Unvalidated description of a lattice: labels plus Hasse-diagram covers."""

    name: str
    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "covers", tuple(tuple(c) for c in self.covers))


@dataclass(frozen=True, eq=False)
class Lattice:
    """A validated finite bounded lattice.

    ``down[x]`` and ``up[x]`` are bitmasks of the principal ideal and principal
    filter of ``x``; ``meet_table`` and ``join_table`` hold element indices.
    """

    name: str
    labels: tuple[str, ...]
    down: tuple[int, ...]
    up: tuple[int, ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    spec_covers: tuple[tuple[str, str], ...] = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> ElementSet:
        return ElementSet((1 << self.n) - 1)

    @property
    def leq_matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(bool((self.down[y] >> x) & 1) for y in range(self.n))
            for x in range(self.n)
        )

    def leq(self, x: int, y: int) -> bool:
        return (self.down[y] >> x) & 1 == 1

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    @property
    def _label_index(self) -> dict[str, int]:
        idx = self._cache.get("label_index")
        if idx is None:
            idx = self._cache["label_index"] = {s: i for i, s in enumerate(self.labels)}
        return idx

    def set(self, *labels: str) -> ElementSet:
        """The element set with the given labels, e.g. ``L.set("f", "g")``."""
        return ElementSet.of(self.index(s) for s in labels)

    def up_set(self, x: int) -> ElementSet:
        return ElementSet(self.up[x])

    def down_set(self, x: int) -> ElementSet:
        return ElementSet(self.down[x])

    def label_list(self, A: ElementSet) -> list[str]:
        return [self.labels[i] for i in A]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse-diagram edges (lower, upper), ordered by (upper, lower) index."""
        out = []
        for y in range(self.n):
            below = self.down[y] & ~(1 << y)
            for x in bits(below):
                # x is covered by y iff nothing strictly between them
                if not any((self.down[z] >> x) & 1 for z in bits(below & ~(1 << x))):
                    out.append((x, y))
        return sorted(out, key=lambda e: (e[0], e[1]))

    def to_spec(self) -> LatticeSpec:
        covers = self.spec_covers or tuple(
            (self.labels[x], self.labels[y]) for x, y in self.covers()
        )
        return LatticeSpec(self.name, self.labels, covers)

    def __repr__(self) -> str:
        return f"Lattice({self.name!r}, n={self.n})"


def _closure(n: int, direct_down: list[int]) -> list[int]:
    """Reflexive-transitive closure of a relation given as down-set bitmasks."""
    down = [direct_down[i] | (1 << i) for i in range(n)]
    # Warshall on bit rows
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for i in range(n):
            if down[i] & bit:
                down[i] |= dk
    return down


def _meet_or_none(down: Sequence[int], x: int, y: int) -> int | None:
    common = down[x] & down[y]
    for z in bits(common):
        if down[z] == common:
            return z
    return None


def lattice_from_down_sets(
    name: str,
    labels: Sequence[str],
    down: Sequence[int],
    spec_covers: tuple[tuple[str, str], ...] = (),
) -> Lattice:
    """Validate a partial order given by its (closed) down-set bitmasks."""
    n = len(labels)
    if n < 2:
        raise TrivialLattice("a bounded lattice needs 0 != 1 (at least two elements)")
    full = (1 << n) - 1
    up = [0] * n
    for y in range(n):
        for x in bits(down[y]):
            up[x] |= 1 << y
    for x in range(n):
        # antisymmetry: only x itself may be both below and above x
        if down[x] & up[x] != 1 << x:
            other = next(i for i in bits(down[x] & up[x]) if i != x)
            raise CycleDetected(f"{labels[x]} and {labels[other]} lie on a cycle")
    bottoms = [x for x in range(n) if up[x] == full]
    tops = [x for x in range(n) if down[x] == full]
    if not bottoms:
        raise NoBottom(f"{name}: no element lies below every other")
    if not tops:
        raise NoTop(f"{name}: no element lies above every other")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            m = _meet_or_none(down, x, y)
            if m is None:
                raise NotALattice(labels[x], labels[y], "no unique meet")
            j = _meet_or_none(up, x, y)
            if j is None:
                raise NotALattice(labels[x], labels[y], "no unique join")
            meet[x][y] = meet[y][x] = m
            join[x][y] = join[y][x] = j
    return Lattice(
        name=name,
        labels=tuple(labels),
        down=tuple(down),
        up=tuple(up),
        meet_table=tuple(map(tuple, meet)),
        join_table=tuple(map(tuple, join)),
        bottom=bottoms[0],
        top=tops[0],
        spec_covers=spec_covers,
    )


def build_lattice(spec: LatticeSpec) -> Lattice:
    """Validate ``spec`` and precompute the order and the meet/join tables."""
    index: dict[str, int] = {}
    for i, label in enumerate(spec.elements):
        if label in index:
            raise DuplicateLabel(label)
        index[label] = i
    n = len(spec.elements)
    direct = [0] * n
    for lo, hi in spec.covers:
        for label in (lo, hi):
            if label not in index:
                raise UnknownLabel(label)
        if lo == hi:
            raise CycleDetected(f"cover pair ({lo}, {hi}) is a loop")
        direct[index[hi]] |= 1 << index[lo]
    down = _closure(n, direct)
    return lattice_from_down_sets(spec.name, spec.elements, down, spec.covers)


# -- element-level accessors -------------------------------------------------


def leq(L: Lattice, x: int, y: int) -> bool:
    return L.leq(x, y)


def meet(L: Lattice, x: int, y: int) -> int:
    return L.meet_table[x][y]


def join(L: Lattice, x: int, y: int) -> int:
    return L.join_table[x][y]


def singleton(x: int) -> ElementSet:
    return ElementSet(1 << x)


def element_of(A: ElementSet) -> int:
    """The member of a singleton set."""
    if len(A) != 1:
        raise ValueError(f"{A!r} is not a singleton")
    return A.min()


# -- set-wise operations -----------------------------------------------------


def set_join(L: Lattice, A: ElementSet, B: ElementSet) -> ElementSet:
    """``{x v y | x in A, y in B}``."""
    jt = L.join_table
    mask = 0
    bs = list(B)
    for x in A:
        row = jt[x]
        for y in bs:
            mask |= 1 << row[y]
    return ElementSet(mask)


def set_meet(L: Lattice, A: ElementSet, B: ElementSet) -> ElementSet:
    """``{x ^ y | x in A, y in B}``."""
    mt = L.meet_table
    mask = 0
    bs = list(B)
    for x in A:
        row = mt[x]
        for y in bs:
            mask |= 1 << row[y]
    return ElementSet(mask)


def max_mask(L: Lattice, mask: int) -> int:
    up = L.up
    out = 0
    for x in bits(mask):
        if up[x] & mask == 1 << x:
            out |= 1 << x
    return out


def max_elements(L: Lattice, A: ElementSet) -> ElementSet:
    """The maximal members of ``A`` (an antichain)."""
    return ElementSet(max_mask(L, A.mask))


def is_antichain(L: Lattice, A: ElementSet) -> bool:
    m = A.mask
    return all(L.down[x] & m == 1 << x for x in A)


def rel_leq_sets(L: Lattice, A: ElementSet, B: ElementSet) -> bool:
    """``A <= B``: every member of A lies below every member of B."""
    return all(B.mask & ~L.up[x] == 0 for x in A)


def rel_leq1(L: Lattice, A: ElementSet, B: ElementSet) -> bool:
    """``A <=1 B``: each member of A has an upper bound in B."""
    return all(L.up[x] & B.mask for x in A)


def rel_leq2(L: Lattice, A: ElementSet, B: ElementSet) -> bool:
    """``A <=2 B``: each member of B has a lower bound in A."""
    return all(L.down[y] & A.mask for y in B)


def rel_eq1(L: Lattice, A: ElementSet, B: ElementSet) -> bool:
    return rel_leq1(L, A, B) and rel_leq1(L, B, A)
