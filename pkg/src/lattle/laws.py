"""Executable catalog of the proved statements about x^0, bar, D-polars and filters.

A law quantifies over elements, subsets and filters of one lattice.  Its body
receives one binding of the quantified variables and returns ``None`` when
the hypothesis does not apply, otherwise whether the conclusion holds.
Checking a law runs the body over every binding from the lattice and the
subset universe and stops at the first failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .errors import UnknownLaw
from .filters import c_operator, is_filter, is_maximal_by_definition, is_prime
from .filters import generator, is_d_filter, is_maximal, is_median
from .lattice import (
    ElementSet,
    Lattice,
    is_antichain,
    rel_eq1,
    rel_leq1,
    rel_leq2,
    set_join,
    set_meet,
    singleton,
)
from .operators import (
    bar,
    bar_elem,
    d_polar,
    d_polar_elem,
    double_zero,
    double_zero_set,
    is_closed_set,
    operator_tables,
    zero_op,
    zero_op_elem,
)
from .stonean import is_d_stonean, is_stonean

HOLDS = "holds"
FAILS = "fails"
NEVER_MET = "hypothesis_never_met"

# quantifier domains
ELEM, SET, ANTICHAIN, FILTER, PROPER = "element", "set", "antichain", "filter", "proper_filter"
SET_KINDS = (SET, ANTICHAIN, FILTER, PROPER)


# -- subset universe ---------------------------------------------------------

LEVELS = ("singletons", "pairs", "filters", "powerset")


@dataclass(frozen=True)
class SubsetUniverse:
    """Which nonempty subsets set-quantified laws range over.

    Levels are cumulative: ``singletons`` (plus D and S), ``pairs``,
    ``filters`` (all principal filters) and ``powerset`` (every nonempty
    subset).  ``auto`` means ``filters``, upgraded to ``powerset`` when the
    lattice has at most ``powerset_max_n`` elements.
    """

    level: str = "auto"
    powerset_max_n: int = 8

    def __post_init__(self):
        if self.level not in LEVELS + ("auto",):
            raise ValueError(f"unknown universe level {self.level!r}")

    def effective_level(self, L: Lattice) -> str:
        if self.level == "auto":
            return "powerset" if L.n <= self.powerset_max_n else "filters"
        return self.level

    def sets(self, L: Lattice) -> tuple[ElementSet, ...]:
        level = self.effective_level(L)
        key = ("universe", level)
        cached = L._cache.get(key)
        if cached is not None:
            return cached
        if level == "powerset":
            out = tuple(ElementSet(m) for m in range(1, 1 << L.n))
        else:
            rank = LEVELS.index(level)
            seq = [singleton(x) for x in range(L.n)]
            t = operator_tables(L)
            seq += [t.dense, t.sharp]
            if rank >= 1:
                seq += [ElementSet.of(p) for p in itertools.combinations(range(L.n), 2)]
            if rank >= 2:
                seq += [L.up_set(x) for x in range(L.n)]
            out = tuple(dict.fromkeys(seq))
        L._cache[key] = out
        return out

    def antichains(self, L: Lattice) -> tuple[ElementSet, ...]:
        key = ("antichains", self.effective_level(L))
        cached = L._cache.get(key)
        if cached is None:
            sets = self.sets(L)
            seq = [A for A in sets if is_antichain(L, A)] + [zero_op(L, A) for A in sets]
            cached = L._cache[key] = tuple(dict.fromkeys(seq))
        return cached


DEFAULT_UNIVERSE = SubsetUniverse()


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class Law:
    id: str
    group: str
    anchor: str
    quantifiers: tuple[tuple[str, str], ...]
    body: Callable = field(repr=False)
    precondition: Callable[[Lattice], bool] | None = field(default=None, repr=False)
    conditional: bool = False
    note: str = ""
    # a documented counterexample: failures of this law are expected, not kernel bugs
    refuted: str = ""

    def domain(self, L: Lattice, kind: str, U: SubsetUniverse) -> Iterable:
        if kind == ELEM:
            return range(L.n)
        if kind == SET:
            return U.sets(L)
        if kind == ANTICHAIN:
            return U.antichains(L)
        if kind == FILTER:
            return [L.up_set(x) for x in range(L.n)]
        if kind == PROPER:
            return [L.up_set(x) for x in range(L.n) if x != L.bottom]
        raise ValueError(kind)

    def bindings(self, L: Lattice, U: SubsetUniverse) -> Iterator[dict]:
        names = [name for name, _ in self.quantifiers]
        domains = [list(self.domain(L, kind, U)) for _, kind in self.quantifiers]
        for combo in itertools.product(*domains):
            yield dict(zip(names, combo))


_REGISTRY: dict[str, Law] = {}


def _law(
    id, group, anchor, *quantifiers, precondition=None, conditional=False, note="", refuted=""
):
    def register(body):
        _REGISTRY[id] = Law(
            id,
            group,
            anchor,
            tuple(tuple(q.split(":")) for q in quantifiers),
            body,
            precondition,
            conditional or precondition is not None,
            note,
            refuted,
        )
        return body

    return register


def law_catalog() -> list[Law]:
    return list(_REGISTRY.values())


def lookup(law_id: str) -> Law:
    try:
        return _REGISTRY[law_id]
    except KeyError:
        raise UnknownLaw(f"unknown law {law_id!r}") from None


# Laws that carry no hypothesis beyond the quantifier domains (or, for the
# filter-class laws, only a hypothesis about the filter itself).
ORACLE_LAWS = (
    "lemma1.1", "galois.bar", "galois.dpolar",
    "thm2.1.i", "thm2.1.ii", "thm2.1.iii", "thm2.1.iv", "thm2.1.v", "thm2.1.vi",
    "thm2.1.vii", "thm2.1.viii", "thm2.1.ix", "thm2.1.x", "thm2.1.xi",
    "prop2.4", "prop2.6", "cor4.8.i", "cor4.8.ii", "cor4.8.iii",
    "thm5.1.i", "thm5.1.ii", "thm5.5.iii", "thm5.6.i", "thm5.6.ii", "thm5.6.iii",
    "c.monotone",
)  # fmt: skip


# -- helpers -----------------------------------------------------------------


def _top_in(L: Lattice, A: ElementSet) -> bool:
    return L.top in A


def _is_d_filter_set(L: Lattice, A: ElementSet) -> bool:
    return is_filter(L, A) and operator_tables(L).dense <= A


def _meet_closed(L: Lattice, A: ElementSet) -> bool:
    return all(L.meet(x, y) in A for x in A for y in A)


def _galois(L, A, B, op) -> bool:
    bA, bB = op(L, A), op(L, B)
    return (
        (not A <= B or bB <= bA)
        and A <= op(L, bA)
        and op(L, op(L, bA)) == bA
        and ((A <= bB) == (B <= bA))
    )


def _joins_dominated(L: Lattice) -> bool:
    """``x^00 v y^00 <=1 (x v y)^00`` for all x, y."""
    key = "joins_dominated"
    r = L._cache.get(key)
    if r is None:
        r = all(
            rel_leq1(L, set_join(L, double_zero(L, x), double_zero(L, y)), double_zero(L, L.join(x, y)))
            for x in range(L.n)
            for y in range(L.n)
        )
        L._cache[key] = r
    return r


def _filters(L: Lattice) -> list[ElementSet]:
    return [L.up_set(x) for x in range(L.n)]


# -- closures and distinguished sets -----------------------------------------


@_law("basic.distinguished", "closures", "D\\cap S=1")
def _(L):
    t = operator_tables(L)
    top, bottom = L.top, L.bottom
    return (
        t.dense & t.sharp == singleton(top)
        and top in t.dense
        and bottom in t.sharp
        and top in t.sharp
        and all((x in t.dense) == (t.double_zero[x] == singleton(top)) for x in range(L.n))
    )


@_law("lemma1.1", "closures", "$\\overline D=L$ and $\\overline L=D$")
def _(L):
    D = operator_tables(L).dense
    return (
        bar(L, D) == L.full
        and bar(L, L.full) == D
        and bar(L, singleton(L.bottom)) == D
        and bar(L, singleton(L.top)) == L.full
    )


@_law("galois.bar", "closures", "Galois-correspondence between", "A:set", "B:set")
def _(L, A, B):
    return _galois(L, A, B, bar)


@_law(
    "galois.dpolar", "closures", "Analogously, the pair $(A\\mapsto A^D,A\\mapsto A^D)$",
    "A:set", "B:set",
)
def _(L, A, B):
    return _galois(L, A, B, d_polar)


@_law(
    "closure.system", "closures", "it is closed under arbitrary intersections", "A:set", "B:set",
    conditional=True,
)
def _(L, A, B):
    if not (is_closed_set(L, A) and is_closed_set(L, B)):
        return None
    D = operator_tables(L).dense
    return is_closed_set(L, A & B) and D <= A and is_closed_set(L, D) and is_closed_set(L, L.full)


# -- annihilator sets --------------------------------------------------------


@_law("thm2.1.i", "annihilators", "$a\\wedge b=0$ for all $a\\in A$ and all $b\\in A^0$", "A:set")
def _(L, A):
    Z = zero_op(L, A)
    return bool(Z) and is_antichain(L, Z) and set_meet(L, A, Z) <= singleton(L.bottom)


@_law("thm2.1.ii", "annihilators", "then $A\\leq_1B^0$", "A:set", "B:set", conditional=True)
def _(L, A, B):
    if not set_meet(L, A, B) <= singleton(L.bottom):
        return None
    return rel_leq1(L, A, zero_op(L, B))


@_law("thm2.1.iii", "annihilators", "$A\\leq_1A^{00}$", "A:set")
def _(L, A):
    return rel_leq1(L, A, double_zero_set(L, A))


@_law(
    "thm2.1.iv", "annihilators", "$A\\leq_1B$ implies $B^0\\leq_1A^0$", "A:set", "B:set", conditional=True
)
def _(L, A, B):
    if not rel_leq1(L, A, B):
        return None
    return rel_leq1(L, zero_op(L, B), zero_op(L, A))


@_law("thm2.1.v", "annihilators", "$A\\leq_1B^0$ if and only if $B\\leq_1A^0$", "A:set", "B:set")
def _(L, A, B):
    return rel_leq1(L, A, zero_op(L, B)) == rel_leq1(L, B, zero_op(L, A))


@_law(
    "thm2.1.vi", "annihilators", "$a=_1B$ implies $a=B$", "a:element", "B:antichain", conditional=True,
    note="B ranges over antichains, such as any A^0; for arbitrary B the "
    "statement fails, e.g. B = {0, a}",
)
def _(L, a, B):
    if not rel_eq1(L, singleton(a), B):
        return None
    return B == singleton(a)


@_law(
    "thm2.1.vii", "annihilators", "$A^0=_1B^0$ implies $A^0=B^0$", "A:set", "B:set", conditional=True
)
def _(L, A, B):
    ZA, ZB = zero_op(L, A), zero_op(L, B)
    if not rel_eq1(L, ZA, ZB):
        return None
    return ZA == ZB


@_law("thm2.1.viii", "annihilators", "$A^{000}=A^0$", "A:set")
def _(L, A):
    Z = zero_op(L, A)
    return zero_op(L, zero_op(L, Z)) == Z


@_law("thm2.1.ix", "annihilators", "$(A\\vee B)^0\\leq_1A^0\\wedge B^0$", "A:set", "B:set")
def _(L, A, B):
    return rel_leq1(L, zero_op(L, set_join(L, A, B)), set_meet(L, zero_op(L, A), zero_op(L, B)))


@_law("thm2.1.x", "annihilators", "$(A\\wedge B)^{00}=_1A^{00}\\wedge B^{00}$", "A:set", "B:set")
def _(L, A, B):
    lhs = double_zero_set(L, set_meet(L, A, B))
    return rel_eq1(L, lhs, set_meet(L, double_zero_set(L, A), double_zero_set(L, B)))


@_law(
    "thm2.1.xi", "annihilators", "$A^{00}\\vee B^{00}\\leq_1(A^0\\wedge B^0)^0$ implies", "A:set", "B:set",
    conditional=True,
)
def _(L, A, B):
    j = set_join(L, double_zero_set(L, A), double_zero_set(L, B))
    m = set_meet(L, zero_op(L, A), zero_op(L, B))
    if not rel_leq1(L, j, zero_op(L, m)):
        return None
    return rel_eq1(L, zero_op(L, j), m)


@_law(
    "remark2.3", "annihilators", "Assume $a,b\\in L$ and $a^{00}\\vee b^{00}\\leq_1(a^0\\wedge b^0)^0$",
    "a:element", "b:element", conditional=True,
)
def _(L, a, b):
    j = set_join(L, double_zero(L, a), double_zero(L, b))
    m = set_meet(L, zero_op_elem(L, a), zero_op_elem(L, b))
    if not (rel_leq1(L, j, zero_op(L, m)) and L.top in j):
        return None
    return m == singleton(L.bottom)


@_law("prop2.4", "annihilators", "Then $a\\wedge b\\in S$", "a:element", "b:element", conditional=True)
def _(L, a, b):
    S = operator_tables(L).sharp
    if not (a in S and b in S):
        return None
    return L.meet(a, b) in S


@_law("prop2.6", "annihilators", "Then $D$ forms a $D$-filter")
def _(L):
    return _is_d_filter_set(L, operator_tables(L).dense)


@_law(
    "dfilter.sublattice", "annihilators",
    "forms a complete sublattice of $\\mathcal F$ with bottom element $D$",
    "F:filter", "G:filter", conditional=True,
)
def _(L, F, G):
    D = operator_tables(L).dense
    if not (D <= F and D <= G):
        return None
    # the join of two principal filters is the principal filter of the meet
    g, h = generator(L, F), generator(L, G)
    joined = L.up_set(L.meet(g, h))
    return _is_d_filter_set(L, F & G) and _is_d_filter_set(L, joined)


@_law(
    "thm2.8", "annihilators", "Then $\\overline A$ is a $D$-filter of $\\mathbf L$", "A:set",
    conditional=True,
)
def _(L, A):
    B = bar(L, A)
    dz = operator_tables(L).double_zero
    zs = [dz[z] for z in A]
    for x in B:
        for y in B:
            if all(_top_in(L, set_join(L, dz[x], Z)) and _top_in(L, set_join(L, dz[y], Z)) for Z in zs):
                xy = set_meet(L, dz[x], dz[y])
                if not all(_top_in(L, set_join(L, xy, Z)) for Z in zs):
                    return None
    return _is_d_filter_set(L, B)


# -- Stonean conditions ------------------------------------------------------


@_law("def3.1.obs", "stonean", "Observe that (1) is equivalent to $x^0\\subseteq\\overline x$ for all $x\\in L$")
def _(L):
    t = operator_tables(L)
    top, jt = L.top, L.join_table
    r = range(L.n)

    def one(x, y):
        return any(jt[u][v] == top for u in t.double_zero[x] for v in t.double_zero[y])

    cond1 = all(one(x, y) for x in r for y in t.zero[x])
    cond2 = all((jt[x][y] in t.dense) == one(x, y) for x in r for y in r)
    return cond1 == all(t.zero[x] <= bar_elem(L, x) for x in r) and cond2 == all(
        bar_elem(L, x) == d_polar_elem(L, x) for x in r
    )


@_law(
    "prop3.3.i", "stonean", "If $\\mathbf L$ is Stonean and $a^0\\leq_2\\overline a$ then",
    "a:element", precondition=is_stonean,
)
def _(L, a):
    Z = zero_op_elem(L, a)
    if not rel_leq2(L, Z, bar_elem(L, a)):
        return None
    return bar(L, bar_elem(L, a)) == bar(L, Z)


@_law("prop3.3.ii", "stonean", "is Stonean if and only if $\\overline{\\overline x}\\subseteq\\overline{x^0}$")
def _(L):
    return is_stonean(L) == all(
        bar(L, bar_elem(L, x)) <= bar(L, zero_op_elem(L, x)) for x in range(L.n)
    )


@_law("lemma3.4", "stonean", "Then $a\\vee a^0\\subseteq D$", "a:element", precondition=is_d_stonean)
def _(L, a):
    return set_join(L, singleton(a), zero_op_elem(L, a)) <= operator_tables(L).dense


@_law(
    "thm3.7", "stonean", "is equivalent to any single of the following statements",
    precondition=is_stonean,
    note="filter statements range over all (principal) filters",
)
def _(L):
    t = operator_tables(L)
    jt, top = L.join_table, L.top
    r = range(L.n)
    cond2 = all(
        (jt[x][y] in t.dense) == any(jt[u][v] == top for u in t.double_zero[x] for v in t.double_zero[y])
        for x in r
        for y in r
    )
    filters = _filters(L)
    s1 = all(bar(L, F) == d_polar(L, F) for F in filters)
    s2 = all(bar(L, singleton(x)) == d_polar(L, singleton(x)) for x in r)
    s3 = all(((F & G) <= t.dense) == (F <= bar(L, G)) for F in filters for G in filters)
    return cond2 == s1 == s2 == s3


# -- the c operator, coherent and closed filters -----------------------------


@_law("c.monotone", "coherence", "then $c(F)\\subseteq c(G)$", "F:filter", "G:filter", conditional=True)
def _(L, F, G):
    if not F <= G:
        return None
    return c_operator(L, F) <= c_operator(L, G) and c_operator(L, F & G) <= (
        c_operator(L, F) & c_operator(L, G)
    )


@_law("c.dense", "coherence", "being contained in $D$", "F:filter", conditional=True)
def _(L, F):
    if not F <= operator_tables(L).dense:
        return None
    return F <= c_operator(L, F)


def _covering(L: Lattice, F: ElementSet) -> bool:
    """``bar(x) | F = L`` for all x in F."""
    return all(bar_elem(L, x) | F == L.full for x in F)


@_law(
    "lemma4.3", "coherence", "satisfying $\\overline x\\cup F=L$ for all $x\\in F$ then $F\\subseteq c(F)$",
    "F:filter", conditional=True,
)
def _(L, F):
    if not _covering(L, F):
        return None
    return F <= c_operator(L, F)


@_law(
    "prop4.5.i", "coherence",
    "If $c(F)$ is closed with respect to $\\wedge$ then $c(F)$ is a $D$-filter of $F$",
    "F:proper_filter", conditional=True,
    note="read as: c(F) is a D-filter of L",
)
def _(L, F):
    C = c_operator(L, F)
    if not _meet_closed(L, C):
        return None
    return _is_d_filter_set(L, C)


@_law(
    "prop4.5.ii", "coherence",
    "the inclusion $\\overline a\\wedge\\overline b\\subseteq\\overline{a\\wedge b}$ holds if and only if",
    "a:element", "b:element",
)
def _(L, a, b):
    t = operator_tables(L)
    ab = L.meet(a, b)
    lhs = set_meet(L, bar_elem(L, a), bar_elem(L, b)) <= bar_elem(L, ab)
    rhs = True
    for x in range(L.n):
        for y in range(L.n):
            both = _top_in(L, set_join(L, t.double_zero[x], t.double_zero[a])) and _top_in(
                L, set_join(L, t.double_zero[y], t.double_zero[b])
            )
            if both and not _top_in(L, set_join(L, t.double_zero[L.meet(x, y)], t.double_zero[ab])):
                rhs = False
                break
        if not rhs:
            break
    return lhs == rhs


@_law(
    "prop4.5.iii", "coherence", "then $c(F)$ is closed with respect to $\\wedge$ and hence a $D$-filter",
    "F:proper_filter", conditional=True,
)
def _(L, F):
    C = c_operator(L, F)
    for x in C:
        for y in C:
            if not set_meet(L, bar_elem(L, x), bar_elem(L, y)) <= bar_elem(L, L.meet(x, y)):
                return None
    return _meet_closed(L, C) and _is_d_filter_set(L, C)


@_law("thm4.6", "coherence", "Then $c(F)\\subseteq F$", "F:filter", precondition=is_d_stonean)
def _(L, F):
    if not operator_tables(L).dense <= F:
        return None
    return c_operator(L, F) <= F


@_law("cor4.7", "coherence", "then $F$ is coherent", "F:filter", precondition=is_d_stonean)
def _(L, F):
    if not (operator_tables(L).dense <= F and _covering(L, F)):
        return None
    return c_operator(L, F) == F


@_law("cor4.8.i", "coherence", "$D\\subseteq\\overline A$", "A:set")
def _(L, A):
    return operator_tables(L).dense <= bar(L, A)


@_law("cor4.8.ii", "coherence", "$\\overline A=L$ if and only if $A\\subseteq D$", "A:set")
def _(L, A):
    return (bar(L, A) == L.full) == (A <= operator_tables(L).dense)


@_law(
    "cor4.8.iii", "coherence", "every closed filter of $\\mathbf L$ is a $D$-filter", "F:filter",
    conditional=True,
)
def _(L, F):
    if not is_closed_set(L, F):
        return None
    return operator_tables(L).dense <= F


@_law(
    "closed.filters", "coherence", "the same is true for the set of closed filters",
    "F:filter", "G:filter", conditional=True,
)
def _(L, F, G):
    if not (is_closed_set(L, F) and is_closed_set(L, G)):
        return None
    return is_filter(L, F & G) and is_closed_set(L, F & G)


# -- maximal, prime and median filters ---------------------------------------


@_law(
    "thm5.1.i", "prime-median",
    "$F$ is maximal if and only if $x^0\\cap F\\neq\\emptyset$ for all $x\\in L\\setminus F$",
    "F:proper_filter",
)
def _(L, F):
    t = operator_tables(L)
    cond = all(t.zero[x] & F for x in L.full - F)
    return is_maximal_by_definition(L, F) == cond


@_law("thm5.1.ii", "prime-median", "if $F$ is maximal then $F$ is a $D$-filter", "F:proper_filter", conditional=True)
def _(L, F):
    if not is_maximal(L, F):
        return None
    return is_d_filter(L, F)


@_law(
    "thm5.1.iii", "prime-median", "with $x\\wedge z=y\\wedge z=0$ then $F$ is prime", "F:proper_filter",
    conditional=True,
)
def _(L, F):
    if not is_maximal(L, F):
        return None
    b = L.bottom
    outside = list(L.full - F)
    for x in outside:
        for y in outside:
            for z in F:
                if L.meet(x, z) == b and L.meet(y, z) == b and L.meet(L.join(x, y), z) != b:
                    return None
    return is_prime(L, F)


@_law(
    "thm5.5.i", "prime-median",
    "$F$ is a prime $D$-filter and $a\\in L\\setminus F$ then ${\\overline a}\\subseteq F$",
    "F:proper_filter", "a:element", precondition=_joins_dominated,
)
def _(L, F, a):
    if not (is_prime(L, F) and is_d_filter(L, F) and a not in F):
        return None
    return bar_elem(L, a) <= F


@_law(
    "thm5.5.ii", "prime-median",
    "$F$ is a median $D$-filter and $a\\in F$ then $\\overline{\\overline a}\\subseteq F$",
    "F:proper_filter", "a:element", precondition=_joins_dominated,
    refuted="holds for prime median D-filters, but a median D-filter need not be prime. "
    "Counterexample: fig3, F = F_b, a = b, where bar(bar(b)) contains c",
)
def _(L, F, a):
    if not (is_median(L, F) and is_d_filter(L, F) and a in F):
        return None
    return bar(L, bar_elem(L, a)) <= F


@_law(
    "thm5.5.iii", "prime-median", "If $a\\in F$ then $a^0\\not\\subseteq F$", "F:proper_filter", "a:element",
    conditional=True,
)
def _(L, F, a):
    if a not in F:
        return None
    return not zero_op_elem(L, a) <= F


@_law(
    "thm5.5.iv", "prime-median", "then $a\\in F$ if and only if $a^0\\not\\subseteq F$",
    "F:proper_filter", "a:element", precondition=is_d_stonean,
)
def _(L, F, a):
    if not (is_prime(L, F) and is_d_filter(L, F)):
        return None
    return (a in F) == (not zero_op_elem(L, a) <= F)


@_law("thm5.6.i", "prime-median", "If $F$ is coherent then it is median", "F:filter", conditional=True)
def _(L, F):
    if not (is_maximal(L, F) and c_operator(L, F) == F):
        return None
    return is_median(L, F)


@_law("thm5.6.ii", "prime-median", "if $\\overline F\\not\\subseteq F$ then $F$ is median", "F:filter", conditional=True)
def _(L, F):
    if not (is_maximal(L, F) and not bar(L, F) <= F):
        return None
    return is_median(L, F)


@_law(
    "thm5.6.iii", "prime-median", "if $F=\\overline{L\\setminus F}$ then $F$ is median", "F:filter",
    conditional=True,
)
def _(L, F):
    if not (is_maximal(L, F) and F == bar(L, L.full - F)):
        return None
    return is_median(L, F)


@_law(
    "prop5.7.i", "prime-median", "$a\\in F$ and $\\overline a=\\overline b$ then $b\\in F$",
    "F:proper_filter", "a:element", "b:element", precondition=is_d_stonean,
)
def _(L, F, a, b):
    if not (a in F and bar_elem(L, a) == bar_elem(L, b)):
        return None
    if not (is_median(L, F) and is_prime(L, F) and is_d_filter(L, F)):
        return None
    return b in F


@_law(
    "prop5.7.ii", "prime-median", "$\\{a\\vee c,b\\vee c\\}\\cap D\\neq\\emptyset$",
    "F:proper_filter", "a:element", "b:element", precondition=is_d_stonean,
)
def _(L, F, a, b):
    if L.join(a, b) not in F:
        return None
    if not (is_median(L, F) and is_prime(L, F)):
        return None
    D = operator_tables(L).dense
    return any(L.join(a, c) in D or L.join(b, c) in D for c in L.full - F)


# -- checking ----------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    lattice: Lattice
    bindings: dict

    def to_json(self, law: Law) -> dict:
        return {
            "lattice": spec_to_json(self.lattice),
            "bindings": encode_bindings(self.lattice, law, self.bindings),
        }


@dataclass(frozen=True)
class LawVerdict:
    law: str
    status: str
    instances_checked: int
    counterexample: Counterexample | None = None

    def to_json(self) -> dict:
        out = {"law": self.law, "status": self.status, "instances_checked": self.instances_checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json(lookup(self.law))
        return out


def spec_to_json(L: Lattice) -> dict:
    spec = L.to_spec()
    return {"name": spec.name, "elements": list(spec.elements), "covers": [list(c) for c in spec.covers]}


def encode_bindings(L: Lattice, law: Law, bindings: dict) -> dict:
    kinds = dict(law.quantifiers)
    out = {}
    for name, value in bindings.items():
        out[name] = L.labels[value] if kinds[name] == ELEM else L.label_list(value)
    return out


def decode_bindings(L: Lattice, law: Law, data: dict) -> dict:
    kinds = dict(law.quantifiers)
    return {
        name: L.index(v) if kinds[name] == ELEM else L.set(*v) for name, v in data.items()
    }


def evaluate(L: Lattice, law: Law | str, bindings: dict) -> bool | None:
    """Run one instance: None if the hypothesis fails, else the conclusion."""
    if isinstance(law, str):
        law = lookup(law)
    if law.precondition is not None and not law.precondition(L):
        return None
    return law.body(L, **bindings)


def check_law(L: Lattice, law: Law | str, universe: SubsetUniverse = DEFAULT_UNIVERSE) -> LawVerdict:
    if isinstance(law, str):
        law = lookup(law)
    if law.precondition is not None and not law.precondition(L):
        return LawVerdict(law.id, NEVER_MET, 0)
    checked = 0
    for b in law.bindings(L, universe):
        r = law.body(L, **b)
        if r is None:
            continue
        checked += 1
        if not r:
            return LawVerdict(law.id, FAILS, checked, Counterexample(L, b))
    return LawVerdict(law.id, HOLDS if checked else NEVER_MET, checked)


def check_all(
    L: Lattice, universe: SubsetUniverse = DEFAULT_UNIVERSE, laws: Iterable[str] | None = None
) -> list[LawVerdict]:
    ids = list(laws) if laws is not None else list(_REGISTRY)
    return [check_law(L, lookup(i), universe) for i in ids]
