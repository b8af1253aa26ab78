import pytest

from pywhite.matroid.catalog import get_matroid
from pywhite.matroid.elements import from_elements
from pywhite.matroid.generate import make_paving_from_hyperplanes
from pywhite.matroid.matroid import Matroid


@pytest.fixture(scope="session")
def u24() -> Matroid:
    return get_matroid("u24")


@pytest.fixture(scope="session")
def m1() -> Matroid:
    return get_matroid("m1")


@pytest.fixture(scope="session")
def m2() -> Matroid:
    return get_matroid("m2")


@pytest.fixture(scope="session")
def fano() -> Matroid:
    return get_matroid("fano")


@pytest.fixture(scope="session")
def nonfano() -> Matroid:
    return get_matroid("nonfano")


@pytest.fixture(scope="session")
def wide() -> Matroid:
    """Rank 4 on 8 elements, stressed only at {0, ..., 4}, so bases of type 3 exist."""
    return make_paving_from_hyperplanes(8, 4, [from_elements(range(5))])
