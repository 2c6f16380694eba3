"""
Shared fixtures and hypothesis strategies
"""

import pytest
from click.testing import CliRunner
from hypothesis import strategies as st

from src.cyclic_descents.necklace import Word
from src.cyclic_descents.perm_core import Composition, Permutation


@st.composite
def permutation_strategy(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def composition_strategy(draw, n):
    # a composition of n is a subset of the cut points 1..n-1
    cuts = sorted(draw(st.sets(st.integers(min_value=1, max_value=n - 1), max_size=n - 1))) if n > 1 else []
    bounds = [0] + cuts + [n]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


@st.composite
def permutation_with_composition(draw, max_n=8):
    p = draw(permutation_strategy(max_n=max_n))
    return p, draw(composition_strategy(p.n))


@st.composite
def word_strategy(draw, n, k):
    letters = draw(st.lists(st.integers(min_value=0, max_value=2 * k - 1), min_size=n, max_size=n))
    return Word(tuple(letters), k)


@pytest.fixture
def runner():
    return CliRunner()
