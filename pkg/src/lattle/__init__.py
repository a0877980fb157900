"""Generalized pseudocomplements, bar closures and filter classes on finite lattices."""

from .corpus import builtin, builtin_keys, enumerate_lattices, parse, random_lattice, serialize
from .errors import LattleError
from .filters import Filter, all_filters, principal_filter
from .lattice import ElementSet, Lattice, LatticeSpec, build_lattice
from .laws import LawVerdict, SubsetUniverse, check_all, check_law, law_catalog
from .operators import bar, d_polar, operator_tables, zero_op
from .search import parse_query, search
from .stonean import stonean_report

__all__ = [
    "ElementSet", "Filter", "Lattice", "LatticeSpec", "LattleError", "LawVerdict",
    "SubsetUniverse", "all_filters", "bar", "build_lattice", "builtin", "builtin_keys",
    "check_all", "check_law", "d_polar", "enumerate_lattices", "law_catalog",
    "operator_tables", "parse", "parse_query", "principal_filter", "random_lattice",
    "search", "serialize", "stonean_report", "zero_op",
]  # fmt: skip
