"""
Provides the text format of matroids and access to the packaged standard matroids.

The format is::

    matroid n=<int> r=<int>
    0,2
    1,3

one basis per line as sorted comma-separated element indices. Blank lines and ``#`` comments are ignored.
"""
import re
from pathlib import Path
from typing import Union, TextIO, BinaryIO, List, Iterable

from importlib_resources import files
from public import public

from ..misc.utils import read_text, write_text
from .elements import parse_set, format_set
from .error import FormatError, PreconditionError, raise_invalid_matroid
from .matroid import Matroid, validate_matroid

HEADER = re.compile(r"^matroid\s+n=(\d+)\s+r=(\d+)$")


def _content_lines(text: str) -> Iterable[tuple]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


@public
def parse_matroid(text: str) -> Matroid:
    """
    Parse a matroid from its text format, without checking the exchange axiom.

    :param text: The text.
    :return: The matroid.
    :raises FormatError: On a malformed header or basis line, with the offending line number.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("Missing matroid header.", 1)
    number, header = lines[0]
    match = HEADER.match(header)
    if match is None:
        raise FormatError(f"Malformed header {header!r}.", number)
    n, r = int(match.group(1)), int(match.group(2))
    bases = []
    for number, line in lines[1:]:
        try:
            basis = parse_set(line)
        except ValueError as e:
            raise FormatError(f"Malformed basis {line!r}: {e}", number)
        if basis >> n:
            raise FormatError(f"Basis {line!r} leaves the ground set of size {n}.", number)
        bases.append(basis)
    try:
        return Matroid(n, r, bases)
    except PreconditionError as e:
        raise FormatError(str(e))


@public
def format_matroid(matroid: Matroid) -> str:
    """Format a matroid in the text format, bases in sorted bit-pattern order."""
    lines = [f"matroid n={matroid.n} r={matroid.r}"]
    lines.extend(format_set(basis) for basis in matroid.bases)
    return "\n".join(lines) + "\n"


@public
def load_matroid(file: Union[str, Path, TextIO, BinaryIO]) -> Matroid:
    """
    Load a matroid from a file in the text format.

    The basis family is checked against the exchange axiom, a violation is handled
    according to :py:attr:`MatroidConfig.validate_action`.

    :param file: The file to load from.
    :return: The matroid.
    """
    matroid = parse_matroid(read_text(file))
    report = validate_matroid(matroid)
    if not report.ok:
        raise_invalid_matroid(f"Not a matroid, {report}.")
    return matroid


@public
def dump_matroid(matroid: Matroid, file: Union[str, Path, TextIO]) -> None:
    """
    Write a matroid to a file in the text format.

    :param matroid: The matroid.
    :param file: The path or text stream to write to.
    """
    write_text(file, format_matroid(matroid))


def _std_entries():
    return {
        entry.name[: -len(".txt")]: entry
        for entry in files("pywhite.matroid").joinpath("std").iterdir()
        if entry.name.endswith(".txt")
    }


@public
def list_matroids() -> List[str]:
    """The names of the packaged standard matroids."""
    return sorted(_std_entries())


@public
def get_matroid(name: str) -> Matroid:
    """
    Retrieve a packaged standard matroid.

    :param name: The name of the matroid, e.g. ``fano`` or ``m1``.
    :return: The matroid.
    """
    entries = _std_entries()
    if name not in entries:
        raise PreconditionError(f"Matroid {name} not found.")
    with entries[name].open("r") as f:
        return load_matroid(f)
