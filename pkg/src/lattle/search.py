"""Counterexample search over small lattices.

A search target is either a law id (find a lattice where the law fails) or a
boolean query over lattice and filter predicates such as
``cond1 & !cond2`` or ``maximal & !prime``.  When a query mentions a filter
predicate it is read existentially: some principal filter must satisfy the
whole formula, with lattice predicates evaluated on the lattice itself.
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterator

from .corpus import SOFT_CAP, enumerate_lattices, random_lattice
from .errors import QuerySyntaxError, UnknownPredicate
from .filters import (
    is_closed_filter,
    is_coherent,
    is_d_filter,
    is_maximal,
    is_median,
    is_prime,
    is_proper,
)
from .lattice import ElementSet, Lattice
from .laws import FAILS, DEFAULT_UNIVERSE, LawVerdict, SubsetUniverse, _REGISTRY, check_law
from .operators import is_pseudocomplemented
from .stonean import check_cond1, check_cond2

LATTICE_PREDICATES: dict[str, Callable[[Lattice], bool]] = {
    "cond1": lambda L: check_cond1(L)[0],
    "cond2": lambda L: check_cond2(L)[0],
    "stonean": lambda L: check_cond1(L)[0],
    "d_stonean": lambda L: check_cond1(L)[0] and check_cond2(L)[0],
    "pseudocomplemented": is_pseudocomplemented,
}

FILTER_PREDICATES: dict[str, Callable[[Lattice, ElementSet], bool]] = {
    "proper": is_proper,
    "d_filter": is_d_filter,
    "closed": is_closed_filter,
    "coherent": is_coherent,
    "maximal": is_maximal,
    "prime": is_prime,
    "median": is_median,
}


# -- query language ----------------------------------------------------------
#
#   expr := term ('|' term)*
#   term := factor ('&' factor)*
#   factor := '!' factor | '(' expr ')' | NAME

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Query:
    text: str
    tree: tuple

    @property
    def uses_filters(self) -> bool:
        return _uses_filters(self.tree)

    def evaluate(self, L: Lattice) -> ElementSet | bool:
        """False, True, or (for filter queries) the first matching filter."""
        if not self.uses_filters:
            return _eval(self.tree, L, None)
        for x in range(L.n):
            F = L.up_set(x)
            if _eval(self.tree, L, F):
                return F
        return False


def _uses_filters(node) -> bool:
    op = node[0]
    if op == "pred":
        return node[1] in FILTER_PREDICATES
    return any(_uses_filters(c) for c in node[1:])


def _eval(node, L: Lattice, F: ElementSet | None) -> bool:
    op = node[0]
    if op == "pred":
        name = node[1]
        if name in LATTICE_PREDICATES:
            return LATTICE_PREDICATES[name](L)
        return FILTER_PREDICATES[name](L, F)
    if op == "not":
        return not _eval(node[1], L, F)
    if op == "and":
        return all(_eval(c, L, F) for c in node[1:])
    return any(_eval(c, L, F) for c in node[1:])


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        name, sym = m.group(1), m.group(2)
        if sym is not None and sym not in "&|!()":
            raise QuerySyntaxError(f"unexpected {sym!r} at column {m.start(2) + 1}")
        out.append((name or sym, m.start(1) if name else m.start(2)))
        pos = m.end()
    return out


def parse_query(text: str) -> Query:
    toks = _tokens(text)
    i = 0

    def peek():
        return toks[i][0] if i < len(toks) else None

    def take(expected=None):
        nonlocal i
        if i >= len(toks):
            raise QuerySyntaxError(f"unexpected end of query {text!r}")
        tok, col = toks[i]
        if expected is not None and tok != expected:
            raise QuerySyntaxError(f"expected {expected!r} at column {col + 1}, got {tok!r}")
        i += 1
        return tok, col

    def expr():
        parts = [term()]
        while peek() == "|":
            take()
            parts.append(term())
        return parts[0] if len(parts) == 1 else ("or", *parts)

    def term():
        parts = [factor()]
        while peek() == "&":
            take()
            parts.append(factor())
        return parts[0] if len(parts) == 1 else ("and", *parts)

    def factor():
        tok, col = take()
        if tok == "!":
            return ("not", factor())
        if tok == "(":
            node = expr()
            take(")")
            return node
        if tok in "&|)":
            raise QuerySyntaxError(f"unexpected {tok!r} at column {col + 1}")
        if tok not in LATTICE_PREDICATES and tok not in FILTER_PREDICATES:
            raise UnknownPredicate(f"unknown predicate {tok!r}")
        return ("pred", tok)

    if not toks:
        raise QuerySyntaxError("empty query")
    tree = expr()
    if i != len(toks):
        tok, col = toks[i]
        raise QuerySyntaxError(f"unexpected {tok!r} at column {col + 1}")
    return Query(text.strip(), tree)


_compiled = lru_cache(maxsize=64)(parse_query)


# -- search ------------------------------------------------------------------


@dataclass(frozen=True)
class SearchHit:
    lattice: Lattice
    examined: int
    verdict: LawVerdict | None = None  # law targets
    filter: ElementSet | None = None  # filter queries


@dataclass(frozen=True)
class SearchResult:
    target: str
    mode: str
    hit: SearchHit | None
    examined: int


def _probe(target: str, universe: SubsetUniverse, L: Lattice):
    """Return None for a miss, else (verdict, filter)."""
    if target in _REGISTRY:
        v = check_law(L, target, universe)
        return (v, None) if v.status == FAILS else None
    r = _compiled(target).evaluate(L)
    if r is False:
        return None
    return (None, r if isinstance(r, ElementSet) else None)


def _probe_batch(args):
    target, universe, batch = args
    for k, L in enumerate(batch):
        r = _probe(target, universe, L)
        if r is not None:
            return k, r
    return None


def _exhaustive(n_max: int) -> Iterator[Lattice]:
    for n in range(2, n_max + 1):
        yield from enumerate_lattices(n, allow_large=n > SOFT_CAP)


def _random(n_max: int, seed: int, budget: int) -> Iterator[Lattice]:
    rng = random.Random(seed)
    for _ in range(budget):
        n = rng.randint(2, n_max)
        yield random_lattice(n, rng.getrandbits(32))


def _batches(it: Iterator[Lattice], size: int) -> Iterator[list[Lattice]]:
    while True:
        batch = list(islice(it, size))
        if not batch:
            return
        yield batch


def search(
    target: str,
    n_max: int,
    *,
    mode: str = "exhaustive",
    seed: int = 0,
    budget: int = 1000,
    universe: SubsetUniverse = DEFAULT_UNIVERSE,
    jobs: int = 1,
    batch_size: int = 64,
) -> SearchResult:
    """First lattice (in enumeration order) hitting ``target``.

    ``target`` is a law id or a query.  With ``jobs > 1`` batches are probed in
    worker processes, but results are consumed in submission order, so the
    hit is the same as a serial run.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if target not in _REGISTRY:
        parse_query(target)  # fail fast on a bad query
    if mode == "exhaustive":
        stream = _exhaustive(n_max)
    elif mode == "random":
        stream = _random(n_max, seed, budget)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    examined = 0
    if jobs <= 1:
        for L in stream:
            examined += 1
            r = _probe(target, universe, L)
            if r is not None:
                return SearchResult(target, mode, SearchHit(L, examined, *r), examined)
        return SearchResult(target, mode, None, examined)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        batches = _batches(stream, batch_size)
        window: list = []
        done = False
        while not done or window:
            # keep a bounded number of batches in flight
            while not done and len(window) < 2 * jobs:
                batch = next(batches, None)
                if batch is None:
                    done = True
                    break
                window.append((batch, pool.submit(_probe_batch, (target, universe, batch))))
            if not window:
                break
            batch, fut = window.pop(0)
            r = fut.result()
            if r is not None:
                k, (verdict, F) = r
                for _, f in window:
                    f.cancel()
                examined += k + 1
                return SearchResult(target, mode, SearchHit(batch[k], examined, verdict, F), examined)
            examined += len(batch)
    return SearchResult(target, mode, None, examined)
