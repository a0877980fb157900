"""Stonean and D-Stonean lattices.

Condition (1): ``1 in x^00 v y^00`` for every x and every ``y in x^0``.
Condition (2): ``x v y`` is dense exactly when ``1 in x^00 v y^00``.
A lattice is D-Stonean when both hold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KernelError
from .lattice import Lattice
from .operators import bar_elem, d_polar_elem, operator_tables, top_in_join


@dataclass(frozen=True)
class StoneanReport:
    cond1: bool
    cond2: bool
    witness1: tuple[int, int] | None = None
    witness2: tuple[int, int] | None = None

    @property
    def d_stonean(self) -> bool:
        return self.cond1 and self.cond2


def _cond1_witness(L: Lattice) -> tuple[int, int] | None:
    t = operator_tables(L)
    for x in range(L.n):
        for y in t.zero[x]:
            if not top_in_join(L, x, y):
                return (x, y)
    return None


def _cond2_witness(L: Lattice) -> tuple[int, int] | None:
    dense = operator_tables(L).dense
    jt = L.join_table
    for x in range(L.n):
        for y in range(L.n):
            if (jt[x][y] in dense) != top_in_join(L, x, y):
                return (x, y)
    return None


def check_cond1(L: Lattice) -> tuple[bool, tuple[int, int] | None]:
    """Condition (1), cross-checked against ``x^0 <= bar(x)`` for all x."""
    w = _cond1_witness(L)
    t = operator_tables(L)
    alt = all(t.zero[x] <= bar_elem(L, x) for x in range(L.n))
    if alt != (w is None):
        raise KernelError(f"{L.name}: the two forms of condition (1) disagree")
    return w is None, w


def check_cond2(L: Lattice) -> tuple[bool, tuple[int, int] | None]:
    """Condition (2), cross-checked against ``bar(x) = x^D`` for all x."""
    w = _cond2_witness(L)
    alt = all(bar_elem(L, x) == d_polar_elem(L, x) for x in range(L.n))
    if alt != (w is None):
        raise KernelError(f"{L.name}: the two forms of condition (2) disagree")
    return w is None, w


def is_stonean(L: Lattice) -> bool:
    return check_cond1(L)[0]


def is_d_stonean(L: Lattice) -> bool:
    return check_cond1(L)[0] and check_cond2(L)[0]


def stonean_report(L: Lattice) -> StoneanReport:
    r = L._cache.get("stonean")
    if r is None:
        ok1, w1 = check_cond1(L)
        ok2, w2 = check_cond2(L)
        r = L._cache["stonean"] = StoneanReport(ok1, ok2, w1, w2)
    return r
