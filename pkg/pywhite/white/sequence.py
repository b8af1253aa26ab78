"""
Provides symmetric exchange sequences between tuples of bases, their validation and text formats.

A step ``(i, j, x, y)`` replaces the ``i``-th basis ``B_i`` by ``B_i - x + y`` and the ``j``-th basis ``B_j``
by ``B_j - y + x``. The certificate format is::

    sequence degree=<n>
    <the n bases of the start tuple, one per line>
    step i=<i> j=<j> x=<x> y=<y>
    ...

and a tuple of bases is written as ``tuple degree=<n>`` followed by its bases.
"""
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Tuple, Callable, Optional, List, Sequence, Union, TextIO, BinaryIO, Iterable

from public import public

from ..matroid.elements import ElementSet, contains, swap, format_set, parse_set
from ..matroid.error import PreconditionError, NotABasisError, FormatError
from ..matroid.matroid import Matroid
from ..matroid.relaxation import type_of
from ..misc.utils import read_text, write_text

BasisTuple = Tuple[ElementSet, ...]
"""An ordered tuple of bases."""

Validator = Callable[[ElementSet], bool]
"""A predicate deciding basis membership."""

public(BasisTuple=BasisTuple, Validator=Validator)


@public
@dataclass(frozen=True)
class ExchangeStep:
    """A symmetric exchange of ``x`` in position ``i`` for ``y`` in position ``j``."""

    i: int
    j: int
    x: int
    """The element leaving position ``i``."""
    y: int
    """The element leaving position ``j``."""

    @property
    def is_noop(self) -> bool:
        return self.x == self.y

    def reversed(self) -> "ExchangeStep":
        """The step undoing this one."""
        return ExchangeStep(self.i, self.j, self.y, self.x)

    def relabel(self, positions: Sequence[int]) -> "ExchangeStep":
        """Move the step to positions ``positions[i]`` and ``positions[j]``."""
        return ExchangeStep(positions[self.i], positions[self.j], self.x, self.y)

    def __str__(self):
        return f"step i={self.i} j={self.j} x={self.x} y={self.y}"


@public
def apply_step(tup: BasisTuple, step: ExchangeStep, validator: Optional[Validator] = None) -> BasisTuple:
    """
    Apply a symmetric exchange to a tuple.

    :param tup: The tuple of bases.
    :param step: The step, a no-op when ``x == y``.
    :param validator: The basis predicate both new entries have to satisfy, if any.
    :return: The new tuple.
    :raises PreconditionError: If the step is not well-formed against ``tup``.
    :raises NotABasisError: If ``validator`` rejects one of the new entries, naming its position.
    """
    i, j, x, y = step.i, step.j, step.x, step.y
    if i == j or not (0 <= i < len(tup)) or not (0 <= j < len(tup)):
        raise PreconditionError(f"Ill-formed positions in {step}.")
    if step.is_noop:
        return tup
    b_i, b_j = tup[i], tup[j]
    if not contains(b_i, x) or contains(b_j, x) or not contains(b_j, y) or contains(b_i, y):
        raise PreconditionError(f"{step} does not fit {{{format_set(b_i)}}} and {{{format_set(b_j)}}}.")
    new_i, new_j = swap(b_i, x, y), swap(b_j, y, x)
    if validator is not None:
        if not validator(new_i):
            raise NotABasisError(f"Position {i} becomes {{{format_set(new_i)}}}, not a basis.")
        if not validator(new_j):
            raise NotABasisError(f"Position {j} becomes {{{format_set(new_j)}}}, not a basis.")
    result = list(tup)
    result[i] = new_i
    result[j] = new_j
    return tuple(result)


@public
@dataclass(frozen=True)
class ExchangeSequence:
    """A start tuple together with the steps applied to it."""

    start: BasisTuple
    steps: Tuple[ExchangeStep, ...] = ()

    def tuples(self) -> List[BasisTuple]:
        """All tuples along the sequence, start and end included."""
        result = [self.start]
        for step in self.steps:
            result.append(apply_step(result[-1], step))
        return result

    @property
    def end(self) -> BasisTuple:
        current = self.start
        for step in self.steps:
            current = apply_step(current, step)
        return current

    @property
    def degree(self) -> int:
        return len(self.start)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


@public
@dataclass
class SequenceReport:
    """The result of validating an exchange sequence."""

    ok: bool = True
    step: Optional[int] = None
    """The index of the first offending tuple, the start tuple has index 0."""
    reason: Optional[str] = None
    """One of ``non-basis``, ``union drift``, ``endpoint mismatch`` or ``ill-formed``."""
    detail: str = field(default="")

    def __str__(self):
        if self.ok:
            return "ok"
        return f"failed at step {self.step}: {self.reason} ({self.detail})"


@public
def multiset_union(tup: Iterable[ElementSet]) -> Counter:
    """The multiset union of a tuple of sets, as element multiplicities."""
    result: Counter = Counter()
    for s in tup:
        while s:
            low = s & -s
            result[low.bit_length() - 1] += 1
            s ^= low
    return result


@public
def union_key(tup: Iterable[ElementSet]) -> Tuple[Tuple[int, int], ...]:
    """A hashable form of the multiset union of a tuple."""
    return tuple(sorted(multiset_union(tup).items()))


@public
def total_type(tup: Iterable[ElementSet], h: ElementSet) -> int:
    """The sum of the types of the entries with respect to ``h``."""
    return sum(type_of(s, h) for s in tup)


@public
def validate_sequence(
        matroid: Matroid,
        seq: ExchangeSequence,
        expected_end: BasisTuple,
        validator: Optional[Validator] = None,
) -> SequenceReport:
    """
    Check an exchange sequence as a certificate.

    :param matroid: The matroid.
    :param seq: The sequence.
    :param expected_end: The tuple the sequence has to end in, position by position.
    :param validator: The basis predicate to use instead of basis membership in ``matroid``.
    :return: The report, naming the first failure if any.
    """
    is_basis = validator if validator is not None else matroid.is_basis
    union = multiset_union(seq.start)
    current = seq.start
    for index in range(len(seq.steps) + 1):
        if index > 0:
            try:
                current = apply_step(current, seq.steps[index - 1])
            except PreconditionError as e:
                return SequenceReport(False, index, "ill-formed", str(e))
            if multiset_union(current) != union:
                return SequenceReport(False, index, "union drift")
        for position, entry in enumerate(current):
            if not is_basis(entry):
                return SequenceReport(False, index, "non-basis", f"position {position} is {{{format_set(entry)}}}")
    if tuple(current) != tuple(expected_end):
        return SequenceReport(False, len(seq.steps), "endpoint mismatch")
    return SequenceReport()


@public
def normalize_sequence(seq: ExchangeSequence) -> ExchangeSequence:
    """
    Remove no-op steps and erase loops.

    Whenever a tuple repeats, the steps between its two occurrences are dropped.
    The endpoints stay the same.
    """
    start = tuple(seq.start)
    path = [start]
    steps: List[ExchangeStep] = []
    seen = {start: 0}
    for step in seq.steps:
        if step.is_noop:
            continue
        following = apply_step(path[-1], step)
        if following in seen:
            index = seen[following]
            for dropped in path[index + 1:]:
                del seen[dropped]
            del path[index + 1:]
            del steps[index:]
        else:
            seen[following] = len(path)
            path.append(following)
            steps.append(step)
    return ExchangeSequence(start, tuple(steps))


@public
def reverse_sequence(seq: ExchangeSequence) -> ExchangeSequence:
    """The sequence leading from the end of ``seq`` back to its start."""
    return ExchangeSequence(seq.end, tuple(step.reversed() for step in reversed(seq.steps)))


@public
def concat(*seqs: ExchangeSequence) -> ExchangeSequence:
    """
    Chain sequences, each starting where the previous one ends.

    :raises PreconditionError: If two consecutive sequences do not meet.
    """
    if not seqs:
        raise PreconditionError("Nothing to concatenate.")
    steps: List[ExchangeStep] = []
    current = seqs[0].start
    for seq in seqs:
        if tuple(seq.start) != tuple(current):
            raise PreconditionError("Consecutive sequences do not meet.")
        steps.extend(seq.steps)
        current = seq.end
    return ExchangeSequence(seqs[0].start, tuple(steps))


SEQUENCE_HEADER = re.compile(r"^sequence\s+degree=(\d+)$")
TUPLE_HEADER = re.compile(r"^tuple\s+degree=(\d+)$")
STEP_LINE = re.compile(r"^step\s+i=(\d+)\s+j=(\d+)\s+x=(\d+)\s+y=(\d+)$")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            result.append((number, line))
    return result


def _parse_bases(lines: List[Tuple[int, str]], degree: int) -> BasisTuple:
    if len(lines) < degree:
        raise FormatError(f"Expected {degree} bases, found {len(lines)}.")
    bases = []
    for number, line in lines[:degree]:
        try:
            bases.append(parse_set(line))
        except ValueError as e:
            raise FormatError(f"Malformed basis {line!r}: {e}", number)
    return tuple(bases)


def _header(lines: List[Tuple[int, str]], pattern, kind: str) -> int:
    if not lines:
        raise FormatError(f"Missing {kind} header.", 1)
    number, header = lines[0]
    match = pattern.match(header)
    if match is None:
        raise FormatError(f"Malformed {kind} header {header!r}.", number)
    return int(match.group(1))


@public
def format_tuple(tup: BasisTuple) -> str:
    lines = [f"tuple degree={len(tup)}"]
    lines.extend(format_set(s) for s in tup)
    return "\n".join(lines) + "\n"


@public
def parse_tuple(text: str) -> BasisTuple:
    """
    Parse a tuple of bases from its text format.

    :raises FormatError: On malformed input, with the offending line number.
    """
    lines = _content_lines(text)
    degree = _header(lines, TUPLE_HEADER, "tuple")
    if len(lines) - 1 != degree:
        raise FormatError(f"Expected {degree} bases, found {len(lines) - 1}.")
    return _parse_bases(lines[1:], degree)


@public
def load_tuple(file: Union[str, Path, TextIO, BinaryIO]) -> BasisTuple:
    return parse_tuple(read_text(file))


@public
def dump_tuple(tup: BasisTuple, file: Union[str, Path, TextIO]) -> None:
    write_text(file, format_tuple(tup))


@public
def format_sequence(seq: ExchangeSequence) -> str:
    """Format a sequence as a certificate."""
    lines = [f"sequence degree={seq.degree}"]
    lines.extend(format_set(s) for s in seq.start)
    lines.extend(str(step) for step in seq.steps)
    return "\n".join(lines) + "\n"


@public
def parse_sequence(text: str) -> ExchangeSequence:
    """
    Parse a sequence certificate.

    :raises FormatError: On malformed input, with the offending line number.
    """
    lines = _content_lines(text)
    degree = _header(lines, SEQUENCE_HEADER, "sequence")
    start = _parse_bases(lines[1:], degree)
    steps = []
    for number, line in lines[1 + degree:]:
        match = STEP_LINE.match(line)
        if match is None:
            raise FormatError(f"Malformed step {line!r}.", number)
        i, j, x, y = map(int, match.groups())
        if i == j or i >= degree or j >= degree:
            raise FormatError(f"Step positions out of range in {line!r}.", number)
        steps.append(ExchangeStep(i, j, x, y))
    return ExchangeSequence(start, tuple(steps))


@public
def load_sequence(file: Union[str, Path, TextIO, BinaryIO]) -> ExchangeSequence:
    return parse_sequence(read_text(file))


@public
def dump_sequence(seq: ExchangeSequence, file: Union[str, Path, TextIO]) -> None:
    write_text(file, format_sequence(seq))


@public
def run_steps(start: BasisTuple, steps: Iterable[ExchangeStep], validator: Optional[Validator] = None) -> BasisTuple:
    """Apply steps one after the other, see :py:func:`apply_step`."""
    current = start
    for step in steps:
        current = apply_step(current, step, validator)
    return current


@public
def steps_fit(
        start: BasisTuple,
        steps: Iterable[ExchangeStep],
        validator: Validator,
        end: Optional[BasisTuple] = None,
) -> bool:
    """Whether the steps apply to ``start`` with every entry on the way accepted by ``validator`` and end in ``end``."""
    try:
        reached = run_steps(start, steps, validator)
    except PreconditionError:
        return False
    return end is None or tuple(reached) == tuple(end)
