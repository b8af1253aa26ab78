"""Provides reading and writing of the line-oriented text formats."""
from io import RawIOBase, BufferedIOBase, TextIOBase
from pathlib import Path
from typing import Union, BinaryIO, TextIO

from public import public


@public
def read_text(input: Union[str, Path, bytes, TextIO, BinaryIO]) -> str:
    """Read the whole text from a path, bytes or an open stream."""
    if isinstance(input, bytes):
        return input.decode()
    elif isinstance(input, (str, Path)):
        with open(input, "r") as f:
            return f.read()
    elif isinstance(input, (RawIOBase, BufferedIOBase)):
        return input.read().decode()
    elif isinstance(input, TextIOBase):
        return input.read()
    raise TypeError


@public
def write_text(output: Union[str, Path, TextIO], text: str) -> None:
    """Write text to a path or an open text stream."""
    if isinstance(output, (str, Path)):
        with open(output, "w") as f:
            f.write(text)
    elif isinstance(output, TextIOBase):
        output.write(text)
    else:
        raise TypeError
