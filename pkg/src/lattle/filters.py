"""Filters of a finite lattice and their classification."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotAFilter
from .lattice import ElementSet, Lattice, bits, set_meet
from .operators import bar_elem, bar_mask, is_closed_set, operator_tables


@dataclass(frozen=True)
class FilterFlags:
    proper: bool
    d_filter: bool
    closed: bool
    coherent: bool
    maximal: bool
    prime: bool
    median: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


@dataclass(frozen=True, eq=False)
class Filter:
    """A filter of a finite lattice, i.e. the principal filter of its generator."""

    lattice: Lattice
    generator: int

    @cached_property
    def carrier(self) -> ElementSet:
        return self.lattice.up_set(self.generator)

    @cached_property
    def flags(self) -> FilterFlags:
        L, F = self.lattice, self.carrier
        return FilterFlags(
            proper=is_proper(L, F),
            d_filter=is_d_filter(L, F),
            closed=is_closed_filter(L, F),
            coherent=is_coherent(L, F),
            maximal=is_maximal(L, F),
            prime=is_prime(L, F),
            median=is_median(L, F),
        )

    @property
    def label(self) -> str:
        return f"F_{self.lattice.labels[self.generator]}"

    def __eq__(self, other):
        if isinstance(other, Filter):
            return self.lattice is other.lattice and self.generator == other.generator
        return NotImplemented

    def __hash__(self):
        return hash((id(self.lattice), self.generator))

    def __repr__(self):
        return f"Filter({self.label})"


def principal_filter(L: Lattice, x: int) -> Filter:
    return Filter(L, x)


def all_filters(L: Lattice) -> list[Filter]:
    """One filter per element, ordered by generator index."""
    return [Filter(L, x) for x in range(L.n)]


def is_filter(L: Lattice, A: ElementSet) -> bool:
    """Nonempty, closed under meets and upward closed."""
    m = A.mask
    if not m:
        return False
    if any(L.up[x] & ~m for x in A):
        return False
    mt = L.meet_table
    return all((m >> mt[x][y]) & 1 for x in A for y in A)


def filters_by_search(L: Lattice) -> list[ElementSet]:
    """All filters found by scanning every subset; exponential, a test oracle."""
    return [ElementSet(m) for m in range(1, 1 << L.n) if is_filter(L, ElementSet(m))]


def carrier(L: Lattice, F) -> ElementSet:
    """Accept a :class:`Filter` or an element set that must be a filter."""
    if isinstance(F, Filter):
        return F.carrier
    if not is_filter(L, F):
        raise NotAFilter(f"{L.label_list(F)} is not a filter of {L.name}")
    return F


def generator(L: Lattice, F) -> int:
    """Least element of a filter carrier."""
    C = carrier(L, F)
    return next(x for x in C if L.up[x] == C.mask)


def is_proper(L: Lattice, F) -> bool:
    return carrier(L, F) != L.full


def is_d_filter(L: Lattice, F) -> bool:
    return operator_tables(L).dense <= carrier(L, F)


def is_closed_filter(L: Lattice, F) -> bool:
    return is_closed_set(L, carrier(L, F))


def c_operator(L: Lattice, F) -> ElementSet:
    """``c(F) = {x | bar(x) ^ F = L}`` with the set-wise meet."""
    C = carrier(L, F)
    full = L.full
    return ElementSet.of(x for x in range(L.n) if set_meet(L, bar_elem(L, x), C) == full)


def is_coherent(L: Lattice, F) -> bool:
    return c_operator(L, F) == carrier(L, F)


def is_maximal(L: Lattice, F) -> bool:
    """A maximal proper filter: its generator is an atom."""
    g = generator(L, F)
    return g != L.bottom and L.down[g] == (1 << g) | (1 << L.bottom)


def is_maximal_by_definition(L: Lattice, F) -> bool:
    """Proper, and no proper filter strictly contains it."""
    C = carrier(L, F)
    if C == L.full:
        return False
    return not any(C < G.carrier and G.carrier != L.full for G in all_filters(L))


def is_prime(L: Lattice, F) -> bool:
    """``x v y in F`` implies ``x in F`` or ``y in F``; true for ``F = L``."""
    m = carrier(L, F).mask
    jt = L.join_table
    outside = [x for x in range(L.n) if not (m >> x) & 1]
    return not any((m >> jt[x][y]) & 1 for x in outside for y in outside)


def median_partner(L: Lattice, F, x: int) -> int | None:
    """Lowest y outside F with ``1 in x^00 v y^00``, if any."""
    m = carrier(L, F).mask
    partners = bar_elem(L, x).mask & ~m
    return next(bits(partners), None)


def is_median(L: Lattice, F) -> bool:
    if not is_maximal(L, F):
        return False
    return all(median_partner(L, F, x) is not None for x in carrier(L, F))


def filter_bar(L: Lattice, F) -> ElementSet:
    return ElementSet(bar_mask(L, carrier(L, F).mask))

