from itertools import combinations

import pytest

from pywhite.matroid.elements import from_elements, size
from pywhite.matroid.error import PreconditionError
from pywhite.matroid.generate import (
    make_uniform,
    make_paving_from_hyperplanes,
    make_random_paving,
    make_random_sparse_paving,
)
from pywhite.matroid.matroid import validate_matroid
from pywhite.matroid.relaxation import stressed_hyperplanes

FANO_LINES = [from_elements(line) for line in ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))]


def test_uniform(u24):
    assert make_uniform(4, 2) == u24
    assert len(make_uniform(5, 2).bases) == 10
    assert make_uniform(3, 3).bases == (0b111,)


def test_from_hyperplanes(fano, m2):
    assert make_paving_from_hyperplanes(7, 3, FANO_LINES) == fano
    assert make_paving_from_hyperplanes(6, 3, [from_elements([0, 1, 2, 3])]) == m2
    assert make_paving_from_hyperplanes(4, 2, []) == make_uniform(4, 2)


@pytest.mark.parametrize(
    "hyperplanes",
    [
        [from_elements([0, 1])],
        [from_elements([0, 1, 2]), from_elements([0, 1, 3])],
        [from_elements(range(7))],
        [from_elements([0, 1, 7])],
    ],
)
def test_from_hyperplanes_invalid(hyperplanes):
    with pytest.raises(PreconditionError):
        make_paving_from_hyperplanes(7, 3, hyperplanes)


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_random_paving(seed):
    m = make_random_paving(7, 3, 3, seed)
    assert m.n == 7
    assert m.r == 3
    assert m.is_paving()
    assert validate_matroid(m).ok
    assert len(stressed_hyperplanes(m)) == 3
    assert make_random_paving(7, 3, 3, seed) == m


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_random_sparse_paving(seed):
    m = make_random_sparse_paving(7, 3, 4, seed)
    assert m.is_sparse_paving()
    assert len(m.circuit_hyperplanes()) == 4
    assert len(m.bases) == 35 - 4


@pytest.mark.parametrize("seed", range(40))
def test_random_paving_seeds(seed):
    m = make_random_paving(7, 3, 3, seed)
    assert len(stressed_hyperplanes(m)) == 3
    for h1, h2 in combinations(stressed_hyperplanes(m), 2):
        assert size(h1 & h2) <= 1


def test_random_budget():
    with pytest.raises(PreconditionError):
        make_random_sparse_paving(4, 2, 5, 0, budget=50)
    with pytest.raises(PreconditionError):
        make_random_sparse_paving(4, 4, 1, 0)
    with pytest.raises(PreconditionError, match="in 2 attempts"):
        make_random_paving(7, 3, 3, 0, budget=2)
    with pytest.raises(PreconditionError, match="in 500 attempts"):
        make_random_sparse_paving(4, 2, 3, 0, budget=500)
