import json

import pytest
from hypothesis import given, strategies as st

from conftest import lattices
from lattle.corpus import (
    builtin,
    builtin_keys,
    canonical_form,
    enumerate_lattices,
    is_isomorphic,
    is_lattice_spec,
    load,
    parse,
    random_lattice,
    serialize,
)
from lattle.errors import (
    LatticeSyntaxError,
    RetryBudgetExhausted,
    SchemaError,
    SizeCapExceeded,
    UnknownKey,
)
from lattle.lattice import LatticeSpec, build_lattice
from oracles import count_naturally_labeled, is_lattice

# unlabelled lattices up to isomorphism, n = 2..8
UNLABELLED = {2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}


def test_builtin_sizes():
    sizes = {k: len(builtin(k).spec.elements) for k in builtin_keys()}
    assert sizes == {"fig1": 9, "fig2": 9, "fig3": 9, "fig4": 12, "fig5": 6, "fig6": 6}


def test_fig6_covers():
    covers = builtin("fig6").spec.covers
    assert [f"{a}-{b}" for a, b in covers] == ["0-a", "a-b", "a-c", "a-d", "b-1", "c-1", "d-1"]


def test_unknown_key():
    with pytest.raises(UnknownKey):
        builtin("fig7")


@pytest.mark.parametrize("n", range(2, 8))
def test_enumeration_count_matches_oracle(n):
    assert sum(1 for _ in enumerate_lattices(n)) == count_naturally_labeled(n)


@pytest.mark.parametrize("n,count", [(8, 3637)])
def test_enumeration_count_pinned(n, count):
    assert sum(1 for _ in enumerate_lattices(n)) == count


@pytest.mark.parametrize("n", range(2, 9))
def test_dedup_counts(n):
    assert sum(1 for _ in enumerate_lattices(n, dedup=True)) == UNLABELLED[n]


def test_enumeration_is_deterministic_and_valid():
    first = [L.to_spec() for L in enumerate_lattices(6)]
    again = [L.to_spec() for L in enumerate_lattices(6)]
    assert first == again
    assert len({canonical_form(build_lattice(s)) for s in first}) == UNLABELLED[6]
    for s in first:
        assert is_lattice(s.elements, s.covers)


def test_fig5_found_among_six_element_lattices():
    fig5 = builtin("fig5").lattice()
    assert any(is_isomorphic(fig5, L) for L in enumerate_lattices(6))


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        next(enumerate_lattices(10))


@pytest.mark.parametrize("key", builtin_keys())
def test_round_trip(key, tmp_path):
    spec = builtin(key).spec
    text = serialize(spec)
    assert parse(text) == spec
    path = tmp_path / f"{key}.json"
    path.write_text(text)
    assert load(path) == spec
    assert serialize(parse(text)) == text


def test_parse_errors():
    with pytest.raises(LatticeSyntaxError) as e:
        parse('{"name": "x",\n  "elements": [}')
    assert e.value.line == 2
    with pytest.raises(SchemaError):
        parse('{"name": "x", "elements": ["0", "1"]}')
    with pytest.raises(SchemaError):
        parse('{"name": "x", "elements": ["0", "0"], "covers": []}')
    with pytest.raises(SchemaError):
        parse('{"name": "x", "elements": ["0", "1"], "covers": [["0", "z"]]}')
    with pytest.raises(SchemaError):
        parse('{"name": "x", "elements": ["0", "1"], "covers": [["0", "0"]]}')
    with pytest.raises(SchemaError):
        parse("[1, 2]")


@given(st.integers(2, 9), st.integers(0, 2**32 - 1))
def test_random_lattice_deterministic(n, seed):
    a, b = random_lattice(n, seed), random_lattice(n, seed)
    assert a.n == n and a.down == b.down
    assert is_lattice_spec(a.to_spec())


def test_random_retry_budget():
    with pytest.raises(RetryBudgetExhausted):
        random_lattice(9, 1, max_attempts=0)


@given(lattices(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_ignores_relabelling(L, rnd):
    spec = L.to_spec()
    perm = list(spec.elements)
    rnd.shuffle(perm)
    rename = dict(zip(spec.elements, perm))
    shuffled = LatticeSpec("p", tuple(perm), tuple((rename[a], rename[b]) for a, b in spec.covers))
    assert is_isomorphic(L, build_lattice(shuffled))


def test_non_isomorphic():
    assert not is_isomorphic(builtin("fig5").lattice(), builtin("fig6").lattice())


def test_serialize_is_json():
    doc = json.loads(serialize(builtin("fig1").spec))
    assert doc["name"] == "fig1" and len(doc["covers"]) == 14


@pytest.mark.parametrize("key", builtin_keys())
def test_recomputation_matches_corrected_tables(key):
    from lattle.corpus import parse_cell
    from lattle.filters import all_filters
    from lattle.operators import operator_tables
    from lattle.stonean import stonean_report

    entry = builtin(key)
    L, exp = entry.lattice(), entry.expected
    t = operator_tables(L)
    for field, got in [("zero", t.zero), ("double_zero", t.double_zero), ("bar", t.bar), ("d_polar", t.d_polar)]:
        row = getattr(exp, field)
        if row is not None:
            assert [parse_cell(L, c) for c in row] == list(got), field
    if exp.dense:
        assert parse_cell(L, exp.dense) == t.dense and parse_cell(L, exp.sharp) == t.sharp
    filters = all_filters(L)
    if exp.closed_filters:
        assert [F.label for F in filters if F.flags.closed] == list(exp.closed_filters)
    if exp.coherent_filters:
        assert [F.label for F in filters if F.flags.coherent] == list(exp.coherent_filters)
    if exp.stonean:
        r = stonean_report(L)
        assert (r.cond1, r.cond2) == exp.stonean
        for printed, got in [(exp.witness1, r.witness1), (exp.witness2, r.witness2)]:
            if printed:
                assert tuple(L.labels[i] for i in got) == printed


def test_errata_change_printed_values():
    entry = builtin("fig1")
    assert entry.printed.zero[5] == "c" and entry.expected.zero[5] == "b"
    assert len(entry.errata) == 9
