import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from lattle.corpus import builtin, builtin_keys, random_lattice  # noqa: E402
from oracles import NaiveLattice  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIGS = builtin_keys()


@pytest.fixture(params=FIGS)
def fig(request):
    return builtin(request.param).lattice()


def naive(L):
    spec = L.to_spec()
    return NaiveLattice(spec.elements, spec.covers)


def lattices(min_n=2, max_n=8):
    return st.builds(
        random_lattice, st.integers(min_n, max_n), st.integers(0, 2**32 - 1)
    )


def subsets(L):
    return st.integers(1, (1 << L.n) - 1)
