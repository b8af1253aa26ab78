import pytest

from pywhite.matroid.elements import from_elements
from pywhite.matroid.error import FiberLimitError
from pywhite.matroid.generate import make_uniform
from pywhite.matroid.matroid import Matroid
from pywhite.misc.cfg import TemporaryConfig
from pywhite.oracle.verify import verify_white, fiber_representatives, dump_report, WhiteReport
from pywhite.white.sequence import union_key


def test_representatives(u24):
    representatives = fiber_representatives(u24, 2)
    keys = [union_key(tup) for tup in representatives]
    assert len(keys) == len(set(keys))
    assert len(fiber_representatives(u24, 1)) == 6


def test_uniform():
    report = verify_white(make_uniform(6, 3), 2)
    assert report.all_connected
    assert not report.truncated
    assert report.summary().endswith("all connected")


def test_degree1(u24):
    report = verify_white(u24, 1)
    assert report.checked == 6
    assert report.max_diameter == 0
    assert str(report).splitlines()[0] == "fiber union=0,1 size=1 connected=true diameter=0"
    assert str(report).splitlines()[-1] == "degree=1 fibers=6 max_diameter=0: all connected"


def test_m1(m1):
    assert verify_white(m1, 2).all_connected
    assert verify_white(m1, 3).all_connected


def test_fano(fano):
    report = verify_white(fano, 2)
    assert report.all_connected
    assert report.max_diameter >= 1


def test_cap(fano):
    report = verify_white(fano, 2, cap=5)
    assert report.checked == 5
    assert report.truncated
    assert report.summary().endswith("(truncated by cap)")


def test_workers(m1):
    with TemporaryConfig() as cfg:
        cfg.oracle.workers = 2
        report = verify_white(m1, 2)
    assert report.all_connected
    assert report.checked == len(fiber_representatives(m1, 2))


@pytest.mark.parametrize("workers", [1, 2])
def test_workers_fiber_cap(u24, workers):
    with TemporaryConfig() as cfg:
        cfg.oracle.workers = workers
        cfg.oracle.fiber_cap = 3
        with pytest.raises(FiberLimitError):
            verify_white(u24, 2)
        cfg.oracle.fiber_cap = 6
        assert verify_white(u24, 2).all_connected


def test_disconnected(tmp_path):
    broken = Matroid(4, 2, [from_elements([0, 1]), from_elements([2, 3])])
    report = verify_white(broken, 2)
    assert not report.all_connected
    assert "fiber union=0,1,2,3 size=2 connected=false diameter=-" in str(report).splitlines()
    assert report.summary().endswith("disconnected fibers found")
    path = tmp_path / "report.txt"
    dump_report(report, path)
    assert path.read_text() == str(report)


def test_empty_report():
    assert WhiteReport(2).max_diameter == 0
    assert WhiteReport(2).all_connected
