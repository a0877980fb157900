"""Annihilator-based operators: x^0, x^00, dense and sharp elements, bar and D-polar.

Everything is memoized on the lattice object.  The caches are filled
idempotently (a recomputation stores the same value), so sharing a lattice
between threads only risks duplicate work, never a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KernelError
from .lattice import ElementSet, Lattice, bits, max_mask


def _memo(L: Lattice, key: str) -> dict:
    d = L._cache.get(key)
    if d is None:
        d = L._cache.setdefault(key, {})
    return d


def _ann_rows(L: Lattice) -> tuple[int, ...]:
    """``rows[y]`` = mask of all x with x ^ y = 0."""
    rows = L._cache.get("ann_rows")
    if rows is None:
        b = L.bottom
        rows = tuple(
            sum(1 << x for x in range(L.n) if L.meet_table[x][y] == b) for y in range(L.n)
        )
        L._cache["ann_rows"] = rows
    return rows


def annihilator_mask(L: Lattice, mask: int) -> int:
    rows = _ann_rows(L)
    out = (1 << L.n) - 1
    for y in bits(mask):
        out &= rows[y]
    return out


def zero_mask(L: Lattice, mask: int) -> int:
    memo = _memo(L, "zero")
    r = memo.get(mask)
    if r is None:
        r = memo[mask] = max_mask(L, annihilator_mask(L, mask))
    return r


def annihilator_raw(L: Lattice, A: ElementSet) -> ElementSet:
    """``{x | x ^ y = 0 for all y in A}``; the whole carrier when A is empty."""
    return ElementSet(annihilator_mask(L, A.mask))


def zero_op(L: Lattice, A: ElementSet) -> ElementSet:
    """``A^0``: the maximal elements of the annihilator of A."""
    return ElementSet(zero_mask(L, A.mask))


def zero_op_elem(L: Lattice, x: int) -> ElementSet:
    return ElementSet(zero_mask(L, 1 << x))


def double_zero_set(L: Lattice, A: ElementSet) -> ElementSet:
    return ElementSet(zero_mask(L, zero_mask(L, A.mask)))


def double_zero(L: Lattice, x: int) -> ElementSet:
    return ElementSet(zero_mask(L, zero_mask(L, 1 << x)))


@dataclass(frozen=True)
class OperatorTables:
    """Per-element operator values of one lattice."""

    zero: tuple[ElementSet, ...]
    double_zero: tuple[ElementSet, ...]
    dense: ElementSet
    sharp: ElementSet
    bar: tuple[ElementSet, ...]
    d_polar: tuple[ElementSet, ...]

    @property
    def pseudocomplemented(self) -> bool:
        return all(len(z) == 1 for z in self.zero)


def operator_tables(L: Lattice) -> OperatorTables:
    t = L._cache.get("tables")
    if t is not None:
        return t
    n, top, bottom = L.n, L.top, L.bottom
    zero = tuple(zero_op_elem(L, x) for x in range(n))
    dz = tuple(ElementSet(zero_mask(L, z.mask)) for z in zero)
    dense = ElementSet.of(x for x in range(n) if zero[x].mask == 1 << bottom)
    dense_via_dz = ElementSet.of(x for x in range(n) if dz[x].mask == 1 << top)
    if dense != dense_via_dz:
        raise KernelError(f"{L.name}: D via x^0 is {dense!r}, via x^00 is {dense_via_dz!r}")
    sharp = ElementSet.of(x for x in range(n) if dz[x].mask == 1 << x)

    jt = L.join_table
    # compat[y] = {x | 1 in x^00 v y^00}; symmetric
    compat = []
    for y in range(n):
        row = 0
        ys = list(dz[y])
        for x in range(n):
            if any(jt[u][v] == top for u in dz[x] for v in ys):
                row |= 1 << x
        compat.append(ElementSet(row))
    dpol = tuple(
        ElementSet.of(x for x in range(n) if jt[x][y] in dense) for y in range(n)
    )
    t = OperatorTables(zero, dz, dense, sharp, tuple(compat), dpol)
    L._cache["tables"] = t
    return t


def dense_set(L: Lattice) -> ElementSet:
    return operator_tables(L).dense


def is_dense(L: Lattice, x: int) -> bool:
    return x in operator_tables(L).dense


def sharp_set(L: Lattice) -> ElementSet:
    return operator_tables(L).sharp


def is_sharp(L: Lattice, x: int) -> bool:
    return x in operator_tables(L).sharp


def is_pseudocomplemented(L: Lattice) -> bool:
    """True when every x^0 is a single element (the classical pseudocomplement)."""
    return operator_tables(L).pseudocomplemented


def top_in_join(L: Lattice, x: int, y: int) -> bool:
    """``1 in x^00 v y^00``."""
    return x in operator_tables(L).bar[y]


def _polar(L: Lattice, mask: int, rows: tuple[ElementSet, ...], key: str) -> int:
    memo = _memo(L, key)
    r = memo.get(mask)
    if r is None:
        r = (1 << L.n) - 1
        for y in bits(mask):
            r &= rows[y].mask
        memo[mask] = r
    return r


def bar_mask(L: Lattice, mask: int) -> int:
    return _polar(L, mask, operator_tables(L).bar, "bar")


def bar(L: Lattice, A: ElementSet) -> ElementSet:
    """``{x | 1 in x^00 v y^00 for each y in A}``."""
    return ElementSet(bar_mask(L, A.mask))


def bar_elem(L: Lattice, x: int) -> ElementSet:
    return operator_tables(L).bar[x]


def d_polar(L: Lattice, A: ElementSet) -> ElementSet:
    """``{x | x v y is dense for all y in A}``."""
    return ElementSet(_polar(L, A.mask, operator_tables(L).d_polar, "dpolar"))


def d_polar_elem(L: Lattice, x: int) -> ElementSet:
    return operator_tables(L).d_polar[x]


def double_bar(L: Lattice, A: ElementSet) -> ElementSet:
    return ElementSet(bar_mask(L, bar_mask(L, A.mask)))


def is_closed_set(L: Lattice, A: ElementSet) -> bool:
    return bar_mask(L, bar_mask(L, A.mask)) == A.mask
