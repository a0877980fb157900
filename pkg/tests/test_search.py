import pytest

from lattle.errors import QuerySyntaxError, UnknownPredicate
from lattle.filters import is_maximal, is_prime
from lattle.laws import FAILS
from lattle.search import parse_query, search
from lattle.stonean import stonean_report


def test_parse_precedence():
    q = parse_query("cond1 & !cond2 | maximal")
    assert q.tree == ("or", ("and", ("pred", "cond1"), ("not", ("pred", "cond2"))), ("pred", "maximal"))
    assert parse_query("!(cond1 | cond2)").tree == ("not", ("or", ("pred", "cond1"), ("pred", "cond2")))
    assert q.uses_filters and not parse_query("cond1").uses_filters


@pytest.mark.parametrize("text", ["", "cond1 &", "(cond1", "cond1 cond2", "cond1 $ cond2", ")"])
def test_syntax_errors(text):
    with pytest.raises(QuerySyntaxError):
        parse_query(text)


def test_unknown_predicate():
    with pytest.raises(UnknownPredicate):
        parse_query("cond3")
    with pytest.raises(UnknownPredicate):
        search("cond1 & lovely", 5)


@pytest.mark.parametrize("query,cond", [("cond1 & !cond2", (True, False)), ("!cond1 & cond2", (False, True))])
def test_independence(query, cond):
    r = search(query, 9)
    assert r.hit is not None and r.hit.lattice.n == 6
    s = stonean_report(r.hit.lattice)
    assert (s.cond1, s.cond2) == cond


def test_maximal_not_prime():
    r = search("maximal & !prime", 6)
    L, F = r.hit.lattice, r.hit.filter
    assert L.n == 5 and is_maximal(L, F) and not is_prime(L, F)


def test_proved_law_has_no_counterexample():
    r = search("thm2.1.x", 5)
    assert r.hit is None and r.examined == 11


def test_refuted_law_counterexample():
    r = search("thm5.5.ii", 7)
    assert r.hit.lattice.n == 6 and r.hit.verdict.status == FAILS


def test_parallel_matches_serial():
    a = search("!cond1 & cond2", 7)
    b = search("!cond1 & cond2", 7, jobs=2, batch_size=4)
    assert a.examined == b.examined
    assert a.hit.lattice.to_spec() == b.hit.lattice.to_spec()


def test_random_mode_deterministic():
    a = search("cond1 & !cond2", 8, mode="random", seed=3, budget=200)
    b = search("cond1 & !cond2", 8, mode="random", seed=3, budget=200)
    assert a.examined == b.examined
    assert (a.hit is None) == (b.hit is None)
    if a.hit:
        assert a.hit.lattice.to_spec() == b.hit.lattice.to_spec()


def test_bad_arguments():
    with pytest.raises(ValueError):
        search("cond1", 1)
    with pytest.raises(ValueError):
        search("cond1", 5, mode="sideways")


def test_parallel_law_search_matches_serial():
    a = search("thm5.5.ii", 7)
    b = search("thm5.5.ii", 7, jobs=2, batch_size=8)
    assert a.examined == b.examined
    assert a.hit.verdict.to_json() == b.hit.verdict.to_json()
