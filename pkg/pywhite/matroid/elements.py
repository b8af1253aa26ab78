"""
Provides helpers for subsets of a ground set of at most 64 elements.

A subset is represented by a plain :py:class:`int` bit mask, bit ``e`` set iff element ``e`` is a member.
"""
from itertools import combinations
from typing import Iterable, Iterator, List

import numpy as np
from public import public

ElementSet = int
"""A subset of the ground set ``{0, ..., n - 1}``, as a bit mask."""

MAX_GROUND = 64

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


@public
def full_set(n: int) -> ElementSet:
    """The whole ground set ``{0, ..., n - 1}``."""
    return (1 << n) - 1


@public
def from_elements(elems: Iterable[int]) -> ElementSet:
    """
    Build an element set.

    :param elems: The members.
    :return: The bit mask.
    """
    result = 0
    for e in elems:
        result |= 1 << e
    return result


@public
def elements(s: ElementSet) -> List[int]:
    """The members of ``s`` in increasing order."""
    return list(iter_elements(s))


@public
def iter_elements(s: ElementSet) -> Iterator[int]:
    """Iterate over the members of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


@public
def size(s: ElementSet) -> int:
    """The cardinality of ``s``."""
    return bin(s).count("1")


@public
def smallest(s: ElementSet) -> int:
    """
    The smallest member of ``s``.

    :raises ValueError: If ``s`` is empty.
    """
    if not s:
        raise ValueError("Empty set has no smallest element.")
    return (s & -s).bit_length() - 1


@public
def swap(s: ElementSet, out: int, into: int) -> ElementSet:
    """``s - out + into``."""
    return (s & ~(1 << out)) | (1 << into)


@public
def contains(s: ElementSet, e: int) -> bool:
    return bool(s >> e & 1)


@public
def subsets_of_size(s: ElementSet, k: int) -> Iterator[ElementSet]:
    """Iterate over all ``k``-subsets of ``s``, in lexicographic order of their members."""
    if k < 0:
        return
    for combo in combinations(elements(s), k):
        yield from_elements(combo)


@public
def format_set(s: ElementSet) -> str:
    """Format ``s`` as sorted comma-separated indices, e.g. ``0,2``."""
    return ",".join(map(str, iter_elements(s)))


@public
def parse_set(text: str) -> ElementSet:
    """
    Parse sorted comma-separated indices.

    :raises ValueError: On malformed or repeated indices.
    """
    text = text.strip()
    if not text:
        return 0
    result = 0
    for part in text.split(","):
        e = int(part.strip())
        if e < 0 or e >= MAX_GROUND:
            raise ValueError(f"Element {e} out of range.")
        if result >> e & 1:
            raise ValueError(f"Element {e} repeated.")
        result |= 1 << e
    return result


@public
def to_array(sets: Iterable[ElementSet]) -> np.ndarray:
    """Pack element sets into a ``uint64`` array."""
    return np.array(list(sets), dtype=np.uint64)


@public
def popcount_array(arr: np.ndarray) -> np.ndarray:
    """Vectorized cardinality of every element set in a ``uint64`` array."""
    as_bytes = np.ascontiguousarray(arr, dtype=np.uint64).view(np.uint8).reshape(-1, 8)
    return _POPCOUNT[as_bytes].sum(axis=1)
