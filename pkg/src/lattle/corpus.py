"""Built-in example lattices, the JSON lattice format, and lattice generators."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import (
    LatticeError,
    LatticeSyntaxError,
    RetryBudgetExhausted,
    SchemaError,
    SizeCapExceeded,
    UnknownKey,
)
from .lattice import ElementSet, Lattice, LatticeSpec, bits, build_lattice, lattice_from_down_sets


# -- golden data -------------------------------------------------------------


@dataclass(frozen=True)
class GoldenTables:
    """Tables as printed with the example lattices, one cell per element.

    Cells use the compact notation of the printed tables: concatenated
    single-character labels (``"fg"``), ``F_x`` for the principal filter of
    ``x`` and ``L`` for the whole carrier.  Witness pairs are label pairs.
    """

    zero: tuple[str, ...] | None = None
    double_zero: tuple[str, ...] | None = None
    bar: tuple[str, ...] | None = None
    d_polar: tuple[str, ...] | None = None
    dense: str | None = None
    sharp: str | None = None
    closed_filters: tuple[str, ...] | None = None
    coherent_filters: tuple[str, ...] | None = None
    stonean: tuple[bool, bool] | None = None
    witness1: tuple[str, str] | None = None
    witness2: tuple[str, str] | None = None


@dataclass(frozen=True)
class Erratum:
    """A printed value that no lattice consistent with the rest can produce."""

    table: str
    element: str | None
    printed: str
    corrected: str
    reason: str


def apply_errata(printed: GoldenTables, errata: tuple[Erratum, ...], labels) -> GoldenTables:
    changes: dict = {}
    for e in errata:
        current = changes.get(e.table, getattr(printed, e.table))
        if e.element is None:
            kind = type(getattr(printed, e.table))
            changes[e.table] = tuple(e.corrected.split()) if kind is tuple else e.corrected
        else:
            row = list(current)
            i = list(labels).index(e.element)
            assert row[i] == e.printed, (e, row[i])
            row[i] = e.corrected
            changes[e.table] = tuple(row)
    return replace(printed, **changes)


@dataclass(frozen=True)
class CorpusEntry:
    key: str
    spec: LatticeSpec
    printed: GoldenTables
    errata: tuple[Erratum, ...] = ()
    notes: tuple[str, ...] = ()

    def lattice(self) -> Lattice:
        return build_lattice(self.spec)

    @property
    def expected(self) -> GoldenTables:
        """Printed tables with the errata applied; must equal recomputation."""
        return apply_errata(self.printed, self.errata, self.spec.elements)


def parse_cell(L: Lattice, cell: str) -> ElementSet:
    """Decode one table cell (``"fg"``, ``"F_d"``, ``"L"``, ``"abcf1"``)."""
    if cell == "L":
        return L.full
    if cell.startswith("F_"):
        return L.up_set(L.index(cell[2:]))
    return L.set(*cell)


def _row(s: str) -> tuple[str, ...]:
    return tuple(s.split())


def _covers(s: str) -> tuple[tuple[str, str], ...]:
    return tuple(tuple(p.split("-")) for p in s.split())


_LABELS9 = tuple("0abcdefg1")

_E_FIG1 = (
    "e^0 is printed as c, but a <= c (stated with the example) and a^0 = fg forces "
    "a <= e, so c ^ e >= a; no 9-element lattice realizes the printed x^0 row"
)

_BUILTINS = {
    "fig1": CorpusEntry(
        "fig1",
        LatticeSpec(
            "fig1",
            _LABELS9,
            _covers("0-a 0-b 0-d a-c b-c a-e d-e b-f d-f d-g c-1 e-1 f-1 g-1"),
        ),
        GoldenTables(
            zero=_row("1 fg eg g c c a c 0"),
            double_zero=_row("0 a b c g g fg g F_0"),
            bar=_row("F_1 F_d F_d F_d abcf1 abcf1 abcdefg1 abcf1 L"),
            dense="F_1",
            sharp="0bcg1",
            closed_filters=_row("F_0 F_d F_f F_1"),
            stonean=(True, False),
            witness2=("e", "g"),
        ),
        errata=(
            Erratum("zero", "e", "c", "b", _E_FIG1),
            Erratum("double_zero", "e", "g", "eg", "follows from e^0 = b"),
            Erratum("double_zero", "1", "F_0", "1", "1^00 = 0^0 = 1 is an antichain"),
            Erratum("bar", "d", "abcf1", "abcef1", "1 in e^00 v d^00 = {1, g}"),
            Erratum("bar", "e", "abcf1", "abcdefg1", "follows from e^00 = eg"),
            Erratum("bar", "g", "abcf1", "abcef1", "1 in e^00 v g^00 = {1, g}"),
            Erratum("sharp", None, "0bcg1", "0abcg1", "the printed table itself has a^00 = a"),
            Erratum(
                "closed_filters", None, "F_0 F_d F_f F_1", "F_0 F_d F_1",
                "bar(bar(F_f)) = ef1 once bar(d), bar(g) contain e",
            ),
            Erratum(
                "witness2", None, "e g", "a d",
                "e^00 v g^00 = {1, g} contains 1; a v d = e is not dense but a^00 v d^00 = 1",
            ),
        ),
        notes=(
            "covers read off the picture line segments",
            "every x^0 cell except e's matches the printed table",
        ),
    ),
    "fig2": CorpusEntry(
        "fig2",
        LatticeSpec(
            "fig2",
            _LABELS9,
            _covers("0-a 0-b 0-c 0-d a-e b-e c-e d-e e-f e-g f-1 g-1"),
        ),
        GoldenTables(
            zero=_row("1 bcd acd abd abc 0 0 0 0"),
            double_zero=_row("0 a b c d 1 1 1 1"),
            bar=_row("F_e F_e F_e F_e F_e F_0 F_0 F_0 F_0"),
            dense="F_e",
            sharp="0abcd1",
            closed_filters=_row("F_0 F_e"),
            coherent_filters=_row("F_0 F_e"),
            stonean=(False, False),
            witness1=("a", "b"),
            witness2=("a", "b"),
        ),
        notes=("the diagram has 12 line segments, hence 12 cover pairs",),
    ),
    "fig3": CorpusEntry(
        "fig3",
        LatticeSpec(
            "fig3",
            _LABELS9,
            _covers("0-a 0-b 0-c 0-d a-e a-f b-f c-f d-f d-g e-1 f-1 g-1"),
        ),
        GoldenTables(
            zero=_row("1 bcg ceg beg bce bcg 0 bce 0"),
            double_zero=_row("0 e b c g e 1 g 1"),
            bar=_row("F_f bcdfg1 adefg1 adefg1 abcef1 bcdfg1 L abcef1 F_0"),
            dense="F_f",
            sharp="0bceg1",
            closed_filters=_row("F_0 F_a F_d F_f"),
            stonean=(False, False),
            witness1=("b", "c"),
            witness2=("b", "c"),
        ),
        notes=("edges a-f and d-f cross the b-f and c-f edges",),
    ),
    "fig4": CorpusEntry(
        "fig4",
        LatticeSpec(
            "fig4",
            tuple("0abcdefghij1"),
            _covers(
                "0-a 0-b 0-c a-d a-e b-e b-f c-f c-g d-h e-h e-i f-i f-j g-j h-1 i-1 j-1"
            ),
        ),
        GoldenTables(
            zero=_row("1 j dg h j g d h g 0 d 0"),
            double_zero=_row("0 d b g d h j g h 1 j 1"),
            bar=_row("F_i F_c F_i F_a F_c F_c F_a F_a F_c F_0 F_a F_0"),
            dense="F_i",
            sharp="0bdghj1",
            closed_filters=_row("F_0 F_a F_c F_i"),
            stonean=(False, True),
            witness1=("b", "d"),
        ),
        notes=("the long diagonals 0-d, 0-g, d-1, g-1 pass through a, c, h, j",),
    ),
    "fig5": CorpusEntry(
        "fig5",
        LatticeSpec("fig5", tuple("0abcd1"), _covers("0-a a-d 0-b b-1 0-c c-1 d-1")),
        GoldenTables(
            zero=_row("1 bc cd bd bc 0"),
            double_zero=_row("0 d b c d 1"),
            bar=_row("F_1 bc1 acd1 abd1 bc1 F_0"),
            d_polar=_row("F_1 bc1 acd1 abd1 bc1 F_0"),
            dense="F_1",
            sharp="0bcd1",
            closed_filters=_row("F_0 F_b F_c F_d F_1"),
            stonean=(True, True),
        ),
        errata=(
            Erratum(
                "closed_filters", None, "F_0 F_b F_c F_d F_1", "F_0 F_a F_b F_c F_1",
                "bar(bar(F_a)) = bar(bc1) = F_a as stated for this lattice; "
                "bar(bar(F_d)) = bar(bc1) = F_a != F_d",
            ),
        ),
    ),
    "fig6": CorpusEntry(
        "fig6",
        LatticeSpec("fig6", tuple("0abcd1"), _covers("0-a a-b a-c a-d b-1 c-1 d-1")),
        GoldenTables(),
    ),
}


def builtin_keys() -> list[str]:
    return list(_BUILTINS)


def builtin(key: str) -> CorpusEntry:
    try:
        return _BUILTINS[key]
    except KeyError:
        raise UnknownKey(f"unknown corpus key {key!r}; known: {', '.join(_BUILTINS)}") from None


# -- JSON format -------------------------------------------------------------


def parse(text: str) -> LatticeSpec:
    """Read a lattice description from its JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise LatticeSyntaxError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise SchemaError("top-level value must be an object")
    missing = {"name", "elements", "covers"} - doc.keys()
    if missing:
        raise SchemaError(f"missing keys: {', '.join(sorted(missing))}")
    name, elements, covers = doc["name"], doc["elements"], doc["covers"]
    if not isinstance(name, str):
        raise SchemaError("name must be a string")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise SchemaError("elements must be a list of strings")
    if len(set(elements)) != len(elements):
        dup = next(e for e in elements if elements.count(e) > 1)
        raise SchemaError(f"duplicate label {dup!r}")
    known = set(elements)
    if not isinstance(covers, list):
        raise SchemaError("covers must be a list of pairs")
    pairs = []
    for k, c in enumerate(covers):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(s, str) for s in c)):
            raise SchemaError(f"covers[{k}] must be a pair of labels")
        for s in c:
            if s not in known:
                raise SchemaError(f"covers[{k}] uses unknown label {s!r}")
        if c[0] == c[1]:
            raise SchemaError(f"covers[{k}] is a loop on {c[0]!r}")
        pairs.append((c[0], c[1]))
    return LatticeSpec(name, tuple(elements), tuple(pairs))


def serialize(spec: LatticeSpec) -> str:
    """Canonical JSON text; element and cover order are preserved."""
    dump = lambda v: json.dumps(v, ensure_ascii=False)  # noqa: E731
    covers = ",\n    ".join(dump(list(c)) for c in spec.covers)
    return (
        "{\n"
        f'  "name": {dump(spec.name)},\n'
        f'  "elements": {dump(list(spec.elements))},\n'
        f'  "covers": [\n    {covers}\n  ]\n'
        "}\n"
        if spec.covers
        else "{\n"
        f'  "name": {dump(spec.name)},\n'
        f'  "elements": {dump(list(spec.elements))},\n'
        '  "covers": []\n'
        "}\n"
    )


def load(path) -> LatticeSpec:
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


# -- generation --------------------------------------------------------------

SOFT_CAP = 9


def element_labels(n: int) -> tuple[str, ...]:
    """Labels for generated lattices: ``0``, middle elements ``a, b, ...``, ``1``."""
    middle = []
    for i in range(n - 2):
        s, k = "", i
        while True:
            s = chr(ord("a") + k % 26) + s
            k = k // 26 - 1
            if k < 0:
                break
        middle.append(s)
    return ("0", *middle, "1")


def _is_lattice_mid(down_mid: list[int], k: int) -> bool:
    """Lattice test for ``k`` middle elements plus adjoined 0 and 1.

    ``down_mid[i]`` is the strict-or-not down-set of middle element ``i`` within
    the middle elements (reflexive).  Missing meets mean "0", missing joins "1".
    """
    up_mid = [0] * k
    for y in range(k):
        for x in bits(down_mid[y]):
            up_mid[x] |= 1 << y
    for x in range(k):
        for y in range(x + 1, k):
            for rel in (down_mid, up_mid):
                common = rel[x] & rel[y]
                if common and not any(rel[z] == common for z in bits(common)):
                    return False
    return True


def _down_closed_subsets(down_mid: list[int], k: int) -> Iterator[int]:
    for s in range(1 << k):
        if all(down_mid[i] & ~s == 0 for i in bits(s)):
            yield s


def _assemble(name: str, n: int, down_mid: list[int]) -> Lattice:
    k = n - 2
    down = [1]
    for i in range(k):
        down.append(1 | (down_mid[i] << 1))
    down.append((1 << n) - 1)
    return lattice_from_down_sets(name, element_labels(n), down)


def _middle_orders(k: int) -> Iterator[list[int]]:
    """Naturally labeled posets on ``k`` elements whose 0/1 extension is a lattice.

    Element ``i`` gets a down-closed subset of ``{0..i-1}`` as its strict
    down-set; subsets are tried in increasing bitmask order, depth first.
    """
    down_mid: list[int] = []

    def extend(i: int) -> Iterator[list[int]]:
        if i == k:
            yield list(down_mid)
            return
        for s in _down_closed_subsets(down_mid, i):
            down_mid.append(s | (1 << i))
            # removing a maximal element preserves the lattice property,
            # so failing prefixes can be pruned
            if _is_lattice_mid(down_mid, i + 1):
                yield from extend(i + 1)
            down_mid.pop()

    return extend(0)


def enumerate_lattices(n: int, *, allow_large: bool = False, dedup: bool = False) -> Iterator[Lattice]:
    """Every bounded lattice on ``n`` naturally labeled elements, in canonical order.

    Element 0 is the bottom, ``n - 1`` the top, and ``i < j`` in the order
    implies ``i < j`` as indices.  Each such labeled lattice is produced
    exactly once; every isomorphism class occurs at least once.  With
    ``dedup`` only the first member of each isomorphism class is kept.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > SOFT_CAP and not allow_large:
        raise SizeCapExceeded(f"n={n} exceeds the soft cap {SOFT_CAP}; pass allow_large")
    seen: set = set()
    for count, down_mid in enumerate(_middle_orders(n - 2)):
        L = _assemble(f"enum{n}-{count}", n, down_mid)
        if dedup:
            cert = canonical_form(L)
            if cert in seen:
                continue
            seen.add(cert)
        yield L


def random_lattice(n: int, seed: int, *, max_attempts: int = 20000) -> Lattice:
    """A random bounded lattice on ``n`` elements, deterministic in ``(n, seed)``.

    Each attempt draws an edge density ``p`` uniformly from [0.15, 0.85) and
    then includes each pair ``i < j`` of middle elements as an order relation
    with probability ``p``; the relation is transitively closed and 0 and 1
    are adjoined.  Attempts continue on the same ``random.Random(seed)``
    stream until one passes the lattice test.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = random.Random(seed)
    k = n - 2
    for _ in range(max_attempts):
        p = rng.uniform(0.15, 0.85)
        down_mid = [1 << j for j in range(k)]
        for j in range(k):
            for i in range(j):
                if rng.random() < p:
                    down_mid[j] |= down_mid[i]
        # i < j only, so processing j in order already yields the closure
        if _is_lattice_mid(down_mid, k):
            return _assemble(f"random{n}-{seed}", n, down_mid)
    raise RetryBudgetExhausted(f"no lattice found for n={n}, seed={seed} in {max_attempts} attempts")


# -- isomorphism ---------------------------------------------------------------


def _refine(L: Lattice) -> list[int]:
    """Colour refinement of the order; returns a stable colour per element."""
    n = L.n
    colour = [0] * n
    sig = [(bin(L.down[x]).count("1"), bin(L.up[x]).count("1")) for x in range(n)]
    while True:
        new_sig = [
            (
                sig[x],
                tuple(sorted(sig[y] for y in bits(L.down[x]))),
                tuple(sorted(sig[y] for y in bits(L.up[x]))),
            )
            for x in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(new_sig)))}
        new_colour = [palette[s] for s in new_sig]
        if len(set(new_colour)) == len(set(colour)):
            return new_colour
        colour, sig = new_colour, [(c,) for c in new_colour]


def canonical_form(L: Lattice) -> tuple:
    """An isomorphism invariant that is complete: equal iff isomorphic."""
    colour = _refine(L)
    classes: dict[int, list[int]] = {}
    for x in range(L.n):
        classes.setdefault(colour[x], []).append(x)
    keys = sorted(classes)
    best = None
    for perms in itertools.product(*(itertools.permutations(classes[c]) for c in keys)):
        order = [x for p in perms for x in p]
        pos = {x: i for i, x in enumerate(order)}
        cert = tuple(sum(1 << pos[y] for y in bits(L.down[x])) for x in order)
        if best is None or cert < best:
            best = cert
    return (tuple(sorted(colour)), best)


def is_isomorphic(L: Lattice, M: Lattice) -> bool:
    return L.n == M.n and canonical_form(L) == canonical_form(M)


def is_lattice_spec(spec: LatticeSpec) -> bool:
    try:
        build_lattice(spec)
    except LatticeError:
        return False
    return True
