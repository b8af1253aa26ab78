"""
Provides the basic exchange constructions relative to a stressed hyperplane.

Fix a stressed hyperplane ``H`` of size at least ``r``. The type of an ``r``-set ``S`` is ``|S - H|``.
Every ``r``-set of type one is a basis, the ``r``-sets of type zero become bases after relaxing ``H``.
Tuples whose entries all have type at most one can therefore be connected inside the relaxation by
aligning the parts outside of ``H`` first and then the parts inside of ``H``, position by position.
"""
import logging
from typing import List

from public import public

from ..matroid.elements import ElementSet, iter_elements, smallest, swap, contains, format_set, size
from ..matroid.error import PreconditionError, UnreachableBranchError, UnequalUnionError
from ..matroid.matroid import Matroid
from ..matroid.relaxation import type_of
from .sequence import (
    BasisTuple,
    Validator,
    ExchangeStep,
    ExchangeSequence,
    apply_step,
    multiset_union,
)

log = logging.getLogger(__name__)


@public
def relaxed_validator(matroid: Matroid, h: ElementSet) -> Validator:
    """
    Basis membership in the relaxation of ``matroid`` at the stressed hyperplane ``h``.

    :param matroid: The matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :return: The predicate.
    """
    r = matroid.r

    def is_basis(s: ElementSet) -> bool:
        return matroid.is_basis(s) or (not s & ~h and size(s) == r)

    return is_basis


def _check_unions(start: BasisTuple, end: BasisTuple) -> None:
    if len(start) != len(end):
        raise UnequalUnionError(f"Tuples of degree {len(start)} and {len(end)}.")
    if multiset_union(start) != multiset_union(end):
        raise UnequalUnionError("Tuples do not have the same multiset union.")


class _Walk:
    """A tuple being rewritten in place, recording the steps."""

    rows: List[ElementSet]
    steps: List[ExchangeStep]
    validator: Validator

    def __init__(self, start: BasisTuple, validator: Validator):
        self.rows = list(start)
        self.steps = []
        self.validator = validator

    def step(self, i: int, j: int, x: int, y: int) -> None:
        step = ExchangeStep(i, j, x, y)
        self.rows = list(apply_step(tuple(self.rows), step, self.validator))
        self.steps.append(step)


def _align_outside(walk: _Walk, end: BasisTuple, h: ElementSet, m: int) -> None:
    rows = walk.rows
    out = rows[m] & ~h
    want = end[m] & ~h
    if out == want:
        return
    later = range(m + 1, len(rows))
    if out and not want:
        a = smallest(out)
        k = next((k for k in later if not rows[k] & ~h), None)
        if k is None:
            raise UnreachableBranchError(f"No type 0 entry after position {m}.")
        e = smallest(rows[k] & ~rows[m])
        walk.step(m, k, a, e)
    elif out and want:
        a, b = smallest(out), smallest(want)
        k = next((k for k in later if contains(rows[k], b)), None)
        if k is None:
            raise UnreachableBranchError(f"Element {b} missing after position {m}.")
        walk.step(m, k, a, b)
    else:
        b = smallest(want)
        k = next((k for k in later if contains(rows[k], b)), None)
        if k is None:
            raise UnreachableBranchError(f"Element {b} missing after position {m}.")
        e = smallest(rows[m] & ~rows[k])
        walk.step(m, k, e, b)


def _align_inside(walk: _Walk, end: BasisTuple, h: ElementSet, m: int) -> None:
    rows = walk.rows
    while rows[m] != end[m]:
        t = smallest(end[m] & ~rows[m])
        surplus = rows[m] & ~end[m] & h
        holders = [k for k in range(m + 1, len(rows)) if contains(rows[k], t)]
        if not holders:
            raise UnreachableBranchError(f"Element {t} missing after position {m}.")
        for k in holders:
            candidates = surplus & ~rows[k]
            if candidates:
                walk.step(m, k, smallest(candidates), t)
                break
        else:
            s = smallest(surplus)
            k = holders[0]
            l = next((l for l in range(m + 1, len(rows)) if not contains(rows[l], s)), None)
            if l is None:
                raise UnreachableBranchError(f"Element {s} present in every entry after position {m}.")
            p = smallest(rows[l] & ~rows[k] & h)
            walk.step(k, l, t, p)
            walk.step(m, l, s, t)
        rows = walk.rows


@public
def solve_type_le1(matroid: Matroid, h: ElementSet, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
    """
    Connect two tuples of entries of type at most one inside the relaxation at ``h``.

    Position by position, the element outside of ``h`` is aligned first and the elements inside
    of ``h`` second. Every entry along the way has type at most one.

    :param matroid: The matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param start: The start tuple.
    :param end: The end tuple, with the same multiset union.
    :return: The sequence, valid in the relaxation of ``matroid`` at ``h``.
    """
    _check_unions(start, end)
    for s in tuple(start) + tuple(end):
        if size(s) != matroid.r:
            raise PreconditionError(f"{{{format_set(s)}}} does not have {matroid.r} elements.")
        if type_of(s, h) > 1:
            raise PreconditionError(f"{{{format_set(s)}}} has type {type_of(s, h)} with respect to {{{format_set(h)}}}.")
    walk = _Walk(start, relaxed_validator(matroid, h))
    for m in range(len(start)):
        _align_outside(walk, end, h, m)
        _align_inside(walk, end, h, m)
    log.debug("Connected type at most one tuples of degree %d in %d steps.", len(start), len(walk.steps))
    return ExchangeSequence(tuple(start), tuple(walk.steps))


@public
def solve_uniform(uniform: Matroid, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
    """
    Connect two tuples of bases of a uniform matroid.

    :param uniform: The uniform matroid.
    :param start: The start tuple.
    :param end: The end tuple, with the same multiset union.
    :return: The sequence.
    """
    if not uniform.is_uniform():
        raise PreconditionError(f"{uniform} is not uniform.")
    return solve_type_le1(uniform, uniform.ground, start, end)


@public
def solve_type1_bases(matroid: Matroid, h: ElementSet, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
    """
    Connect two tuples of type one bases through type one bases only.

    :param matroid: The matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param start: The start tuple, all entries of type one.
    :param end: The end tuple, all entries of type one, with the same multiset union.
    :return: The sequence, valid in ``matroid``.
    """
    for s in tuple(start) + tuple(end):
        if type_of(s, h) != 1:
            raise PreconditionError(f"{{{format_set(s)}}} is not of type 1.")
    seq = solve_type_le1(matroid, h, start, end)
    for tup in seq.tuples():
        if any(type_of(s, h) != 1 for s in tup):
            raise UnreachableBranchError("An intermediate entry left type 1.")
    return seq


@public
def pick_type02(matroid: Matroid, h: ElementSet, x: ElementSet, y: ElementSet, a: int) -> int:
    """
    Pick the element of a type 0 set to exchange for an element outside of ``h`` of a basis of type at least two.

    :param matroid: The matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param x: An ``r``-subset of ``h``.
    :param y: A basis of ``matroid`` of type at least two.
    :param a: An element of ``y - h``.
    :return: The smallest ``s`` in ``x - y`` such that ``x - s + a`` and ``y - a + s`` are bases of ``matroid``.
    """
    if contains(h, a) or not contains(y, a):
        raise PreconditionError(f"Element {a} is not in {{{format_set(y)}}} outside of {{{format_set(h)}}}.")
    if type_of(x, h) != 0:
        raise PreconditionError(f"{{{format_set(x)}}} is not of type 0.")
    if type_of(y, h) < 2 or not matroid.is_basis(y):
        raise PreconditionError(f"{{{format_set(y)}}} is not a basis of type at least 2.")
    for s in iter_elements(x & ~y):
        if matroid.is_basis(swap(x, s, a)) and matroid.is_basis(swap(y, a, s)):
            return s
    raise UnreachableBranchError(
        f"No exchange between {{{format_set(x)}}} and {{{format_set(y)}}} at {a}."
    )
