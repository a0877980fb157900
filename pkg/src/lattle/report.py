"""Analysis reports and their text, JSON and DOT renderings."""

from __future__ import annotations

import json

from .filters import Filter, all_filters, c_operator, generator
from .lattice import ElementSet, Lattice
from .laws import FAILS, HOLDS, NEVER_MET, DEFAULT_UNIVERSE, LawVerdict, SubsetUniverse
from .laws import check_all, lookup
from .operators import operator_tables
from .stonean import stonean_report

FLAG_NAMES = ("proper", "d_filter", "closed", "coherent", "maximal", "prime", "median")


def labels_cell(L: Lattice, A: ElementSet) -> str:
    """Concatenated labels in element order, as in ``fg`` for {f, g}."""
    return "".join(L.labels[x] for x in A) or "-"


def closure_cell(L: Lattice, A: ElementSet) -> str:
    """``L`` for the carrier, ``F_x`` for a principal filter, labels otherwise."""
    if A == L.full:
        return "L"
    for x in A:
        if L.up[x] == A.mask:
            return f"F_{L.labels[x]}"
    return labels_cell(L, A)


def spec_dict(L: Lattice) -> dict:
    spec = L.to_spec()
    return {"name": spec.name, "elements": list(spec.elements), "covers": [list(c) for c in spec.covers]}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- analysis ----------------------------------------------------------------


def analyze(L: Lattice, universe: SubsetUniverse = DEFAULT_UNIVERSE, laws: bool = True) -> dict:
    t = operator_tables(L)
    st = stonean_report(L)
    lab = L.label_list

    def pair(w):
        return None if w is None else [L.labels[w[0]], L.labels[w[1]]]

    filters = []
    for F in all_filters(L):
        row = {"filter": F.label, "elements": lab(F.carrier)}
        row.update(F.flags.as_dict())
        row["c"] = lab(c_operator(L, F))
        filters.append(row)

    doc = {
        "lattice": spec_dict(L),
        "size": L.n,
        "elements": [
            {
                "label": L.labels[x],
                "zero": lab(t.zero[x]),
                "double_zero": lab(t.double_zero[x]),
                "bar": lab(t.bar[x]),
                "d_polar": lab(t.d_polar[x]),
            }
            for x in range(L.n)
        ],
        "dense": lab(t.dense),
        "sharp": lab(t.sharp),
        "pseudocomplemented": t.pseudocomplemented,
        "stonean": {
            "cond1": st.cond1,
            "cond2": st.cond2,
            "d_stonean": st.d_stonean,
            "witness1": pair(st.witness1),
            "witness2": pair(st.witness2),
        },
        "filters": filters,
        "closed_filters": [f["filter"] for f in filters if f["closed"]],
        "coherent_filters": [f["filter"] for f in filters if f["coherent"]],
    }
    if laws:
        doc["laws"] = law_summary(check_all(L, universe))
    return doc


def law_summary(verdicts: list[LawVerdict]) -> dict:
    return {
        "checked": len(verdicts),
        HOLDS: sum(v.status == HOLDS for v in verdicts),
        NEVER_MET: sum(v.status == NEVER_MET for v in verdicts),
        FAILS: [v.law for v in verdicts if v.status == FAILS],
    }


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return [fmt(header)] + [fmt(r) for r in rows]


def render_text(L: Lattice, doc: dict) -> str:
    t = operator_tables(L)
    out = [f"{L.name}  ({L.n} elements)", ""]
    rows = [
        ["x^0"] + [labels_cell(L, z) for z in t.zero],
        ["x^00"] + [labels_cell(L, z) for z in t.double_zero],
        ["bar(x)"] + [closure_cell(L, b) for b in t.bar],
        ["x^D"] + [closure_cell(L, d) for d in t.d_polar],
    ]
    out += _table(["x"] + list(L.labels), rows)
    out.append("")
    out.append(f"D = {{{', '.join(doc['dense'])}}}")
    out.append(f"S = {{{', '.join(doc['sharp'])}}}")
    out.append(f"pseudocomplemented: {_yn(doc['pseudocomplemented'])}")
    st = doc["stonean"]
    out.append(f"condition (1): {_yn(st['cond1'])}{_witness(st['witness1'])}")
    out.append(f"condition (2): {_yn(st['cond2'])}{_witness(st['witness2'])}")
    out.append(f"D-Stonean: {_yn(st['d_stonean'])}")
    out.append("")
    header = ["filter", "elements"] + list(FLAG_NAMES) + ["c(F)"]
    rows = []
    for f in doc["filters"]:
        c = ElementSet.of(L.index(s) for s in f["c"])
        rows.append(
            [f["filter"], "".join(f["elements"])]
            + ["x" if f[k] else "." for k in FLAG_NAMES]
            + [closure_cell(L, c)]
        )
    out += _table(header, rows)
    out.append("")
    out.append(f"closed filters: {' '.join(doc['closed_filters'])}")
    out.append(f"coherent filters: {' '.join(doc['coherent_filters'])}")
    if "laws" in doc:
        s = doc["laws"]
        fails = ", ".join(s[FAILS]) or "none"
        out.append(
            f"laws: {s['checked']} checked, {s[HOLDS]} hold, "
            f"{s[NEVER_MET]} never applicable, fails: {fails}"
        )
    return "\n".join(out) + "\n"


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _witness(w) -> str:
    return "" if w is None else f"  (fails at {w[0]}, {w[1]})"


# -- DOT ---------------------------------------------------------------------


def _dot_id(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def render_dot(L: Lattice, highlight: ElementSet | None = None) -> str:
    """Hasse diagram, bottom at the bottom."""
    out = [f"digraph {_dot_id(L.name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(L.n):
        attrs = ", style=filled, fillcolor=lightgrey" if highlight and x in highlight else ""
        out.append(f"  {_dot_id(L.labels[x])} [label={_dot_id(L.labels[x])}{attrs}];")
    for x, y in L.covers():
        out.append(f"  {_dot_id(L.labels[x])} -> {_dot_id(L.labels[y])} [arrowhead=none];")
    out.append("}")
    return "\n".join(out) + "\n"


# -- law verdicts ------------------------------------------------------------


def verdict_line(L: Lattice, v: LawVerdict, color: bool = False) -> str:
    law = lookup(v.law)
    status = v.status
    if color:
        code = {HOLDS: "32", FAILS: "31", NEVER_MET: "33"}[status]
        status = f"\x1b[{code}m{status}\x1b[0m"
    line = f"{L.name}  {v.law:<20} {status}  ({v.instances_checked} instances)"
    if v.counterexample is not None:
        b = v.to_json()["counterexample"]["bindings"]
        shown = ", ".join(
            f"{k}={val if isinstance(val, str) else '{' + ','.join(val) + '}'}"
            for k, val in b.items()
        )
        line += f"  at {shown or 'lattice level'}"
        if law.refuted:
            line += "  [documented counterexample]"
    return line


def filter_label(L: Lattice, F: ElementSet) -> str:
    return Filter(L, generator(L, F)).label
