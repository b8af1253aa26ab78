from io import StringIO

import pytest

from pywhite.matroid.catalog import parse_matroid, format_matroid, load_matroid, dump_matroid, list_matroids, get_matroid
from pywhite.matroid.elements import from_elements
from pywhite.matroid.error import FormatError, InvalidMatroidError, InvalidMatroidWarning, PreconditionError
from pywhite.misc.cfg import TemporaryConfig

BROKEN = """matroid n=4 r=2
0,1
2,3
"""


def test_list():
    assert list_matroids() == ["fano", "m1", "m2", "nonfano", "u24"]


@pytest.mark.parametrize("name,n,r,bases", [("u24", 4, 2, 6), ("m1", 4, 2, 5), ("m2", 6, 3, 16), ("fano", 7, 3, 28), ("nonfano", 7, 3, 29)])
def test_get(name, n, r, bases):
    m = get_matroid(name)
    assert m.n == n
    assert m.r == r
    assert len(m.bases) == bases


def test_get_unknown():
    with pytest.raises(PreconditionError):
        get_matroid("vamos")


def test_parse():
    m = parse_matroid("# comment\n\nmatroid n=3 r=1\n0 # first\n1\n2\n")
    assert m.n == 3
    assert m.bases == (1, 2, 4)


def test_format(m1):
    text = format_matroid(m1)
    assert text.splitlines()[0] == "matroid n=4 r=2"
    assert text.splitlines()[1] == "0,2"
    assert parse_matroid(text) == m1


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("matroid n=4\n0,1\n", 1),
        ("matroid n=4 r=2\n0,1\n0,x\n", 3),
        ("matroid n=4 r=2\n# comment\n0,1\n0,5\n", 4),
        ("matroid n=4 r=2\n0,0\n", 2),
    ],
)
def test_parse_invalid(text, line):
    with pytest.raises(FormatError) as e:
        parse_matroid(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}:")


def test_parse_wrong_size():
    with pytest.raises(FormatError):
        parse_matroid("matroid n=4 r=2\n0,1,2\n")


def test_load_invalid():
    with pytest.raises(InvalidMatroidError):
        load_matroid(StringIO(BROKEN))
    with TemporaryConfig() as cfg:
        cfg.matroid.validate_action = "warning"
        with pytest.warns(InvalidMatroidWarning):
            m = load_matroid(StringIO(BROKEN))
        assert m.bases == (from_elements([0, 1]), from_elements([2, 3]))
        cfg.matroid.validate_action = "ignore"
        load_matroid(BROKEN.encode())


def test_dump_load(fano, tmp_path):
    path = tmp_path / "fano.txt"
    dump_matroid(fano, path)
    assert load_matroid(path) == fano
    assert load_matroid(str(path)) == fano
