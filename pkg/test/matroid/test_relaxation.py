import pytest

from pywhite.matroid.elements import from_elements
from pywhite.matroid.error import RelaxationError, NotPavingError, NonPavingWarning
from pywhite.matroid.generate import make_uniform
from pywhite.matroid.matroid import Matroid
from pywhite.matroid.relaxation import (
    is_stressed,
    relax,
    stressed_hyperplanes,
    type_of,
    in_B_of,
    relaxation_trace,
    format_trace,
    dump_trace,
)
from pywhite.misc.cfg import TemporaryConfig


def test_stressed(m1, m2, fano):
    assert is_stressed(m1, from_elements([0, 1]))
    assert is_stressed(fano, from_elements([0, 1, 2]))
    assert stressed_hyperplanes(m2) == [from_elements([0, 1, 2, 3])]
    assert len(stressed_hyperplanes(fano)) == 7
    assert stressed_hyperplanes(make_uniform(4, 2)) == []


def test_stressed_not_hyperplane(fano):
    with pytest.raises(RelaxationError):
        is_stressed(fano, from_elements([0, 1]))


def test_relax(m1, u24, fano, nonfano, m2):
    assert relax(m1, from_elements([0, 1])) == u24
    assert relax(fano, from_elements([0, 1, 2])) == nonfano
    relaxed = relax(m2, from_elements([0, 1, 2, 3]))
    assert relaxed == make_uniform(6, 3)


def test_relax_invalid(u24, fano):
    with pytest.raises(RelaxationError):
        relax(u24, from_elements([0]))
    with pytest.raises(RelaxationError):
        relax(fano, from_elements([0, 1, 3]))


def test_type():
    h = from_elements([0, 1, 2, 3])
    assert type_of(from_elements([0, 1, 4]), h) == 1
    assert type_of(from_elements([0, 1, 2]), h) == 0
    assert in_B_of(h, 4, from_elements([0, 1, 4]))
    assert not in_B_of(h, 4, from_elements([0, 4, 5]))
    assert not in_B_of(h, 0, from_elements([0, 1, 4]))


def test_trace(fano, m2, m1):
    trace = relaxation_trace(fano)
    assert len(trace) == 7
    assert trace.origin == fano
    assert trace.final == make_uniform(7, 3)
    lines = format_trace(trace).splitlines()
    assert lines[0] == "relax H=0,1,2 bases=29"
    assert lines[1] == "relax H=0,3,4 bases=30"
    assert lines[-1] == "relax H=0,5,6 bases=35"
    assert format_trace(relaxation_trace(m2)) == "relax H=0,1,2,3 bases=20\n"
    assert [h for h, _ in relaxation_trace(m1)] == [from_elements([0, 1])]
    assert len(relaxation_trace(make_uniform(4, 2))) == 0


def test_trace_dump(m1, tmp_path):
    path = tmp_path / "trace.txt"
    dump_trace(relaxation_trace(m1), path)
    assert path.read_text() == "relax H=0,1 bases=6\n"


def test_trace_non_paving():
    non_paving = Matroid(3, 2, [from_elements([0, 1])])
    with pytest.raises(NotPavingError):
        relaxation_trace(non_paving)
    with TemporaryConfig() as cfg:
        cfg.solver.non_paving_action = "warning"
        with pytest.warns(NonPavingWarning), pytest.raises(RelaxationError):
            relaxation_trace(non_paving)
