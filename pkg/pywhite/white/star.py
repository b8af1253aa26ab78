"""
Provides the local rewrites used when lifting exchange sequences out of a relaxation.

Each procedure takes a short window of an exchange sequence, two steps through an entry that is not a
basis of the matroid, and replaces it by steps through bases only. The windows are handled case by case:
degenerate windows where elements repeat first, then windows whose bases leave out or share elements, which
move to the minor on their union and go to the solver. What is left are bases partitioning the ground set,
rewritten by detours through elements outside of the hyperplanes the bases span. If no detour applies those
hyperplanes cover the ground set, which a stressed hyperplane does not allow.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from operator import or_, and_
from typing import Callable, List, Optional, Iterable, Iterator, Sequence, Tuple

from public import public

from ..matroid.elements import ElementSet, iter_elements, smallest, swap, contains, format_set, size, from_elements
from ..matroid.error import (
    PreconditionError,
    UnreachableBranchError,
    DepthLimitError,
    NotABasisError,
)
from ..matroid.matroid import Matroid
from ..matroid.minor import minor
from ..matroid.relaxation import type_of, is_stressed
from ..misc.cfg import getconfig
from .lemma import relaxed_validator, pick_type02, solve_type1_bases
from .sequence import (
    BasisTuple,
    Validator,
    ExchangeStep,
    ExchangeSequence,
    run_steps,
    steps_fit,
    normalize_sequence,
)

log = logging.getLogger(__name__)

SolverCallback = Callable[[Matroid, BasisTuple, BasisTuple], ExchangeSequence]
"""Connects two tuples of bases of a matroid."""

public(SolverCallback=SolverCallback)


@public
@dataclass(frozen=True)
class StarContext:
    """The matroid, the stressed hyperplane being lifted over and the solver to fall back to."""

    matroid: Matroid
    h: ElementSet
    solver: SolverCallback
    depth: int = 0
    """How many nested rewrites led here."""

    def deeper(self, h: Optional[ElementSet] = None) -> "StarContext":
        """
        The context of a nested rewrite, optionally over another hyperplane.

        :raises DepthLimitError: If the nesting exceeds :py:attr:`SolverConfig.depth_cap`.
        """
        depth = self.depth + 1
        if depth > getconfig().solver.depth_cap:
            raise DepthLimitError(f"Rewrites nested deeper than {getconfig().solver.depth_cap}.")
        return StarContext(self.matroid, self.h if h is None else h, self.solver, depth)


def _steps(*raw: Tuple[int, int, int, int]) -> List[ExchangeStep]:
    return [ExchangeStep(*r) for r in raw if r[2] != r[3]]


def _relabel(steps: Iterable[ExchangeStep], positions: Sequence[int]) -> List[ExchangeStep]:
    return [step.relabel(positions) for step in steps]


def _reverse(steps: Sequence[ExchangeStep]) -> List[ExchangeStep]:
    return [step.reversed() for step in reversed(steps)]


def _attempt(fn, *args) -> Optional[List[ExchangeStep]]:
    try:
        return fn(*args)
    except (UnreachableBranchError, PreconditionError) as e:
        log.debug("Candidate %s failed: %s", fn.__name__, e)
        return None


def _pick(
        case: str,
        matroid: Matroid,
        start: BasisTuple,
        end: BasisTuple,
        candidates: Iterable[Optional[List[ExchangeStep]]],
) -> Optional[List[ExchangeStep]]:
    for steps in candidates:
        if steps is not None and steps_fit(start, steps, matroid.is_basis, end):
            log.debug("Rewrote by %s in %d steps.", case, len(steps))
            return steps
    log.debug("No rewrite by %s.", case)
    return None


def _exchange_pivots(matroid: Matroid, x: ElementSet, y: ElementSet, e: int) -> List[int]:
    """The elements ``p`` of ``x - y`` with both ``x - p + e`` and ``y - e + p`` bases."""
    return [
        p for p in iter_elements(x & ~y)
        if matroid.is_basis(swap(x, p, e)) and matroid.is_basis(swap(y, e, p))
    ]


def _interior_fits(
        matroid: Matroid,
        validator: Validator,
        start: BasisTuple,
        end: BasisTuple,
        steps: Sequence[ExchangeStep],
        loose: Sequence[int] = (),
) -> bool:
    """Whether ``steps`` lead from ``start`` to ``end`` under ``validator`` through bases of ``matroid``
    at every position not in ``loose``."""
    current = start
    try:
        for index, step in enumerate(steps):
            current = run_steps(current, (step,), validator)
            if index + 1 < len(steps) and any(
                    not matroid.is_basis(entry) for position, entry in enumerate(current) if position not in loose
            ):
                return False
    except PreconditionError:
        return False
    return tuple(current) == tuple(end)


def _check_bases(matroid: Matroid, *entries: ElementSet) -> None:
    for entry in entries:
        if not matroid.is_basis(entry):
            raise NotABasisError(f"{{{format_set(entry)}}} is not a basis.")


def _reducible(matroid: Matroid, start: BasisTuple) -> bool:
    """Whether the entries leave out an element or all share one."""
    return reduce(or_, start) != matroid.ground or reduce(and_, start) != 0


def _via_minor(ctx: StarContext, start: BasisTuple, end: BasisTuple) -> List[ExchangeStep]:
    matroid = ctx.matroid
    union = reduce(or_, start)
    common = reduce(and_, start)
    sub, mapping = minor(matroid, contract=common, delete=matroid.ground & ~union)
    log.debug("Moving to the minor on {%s} contracting {%s}.", format_set(union), format_set(common))
    seq = ctx.solver(
        sub,
        tuple(mapping.project(entry) for entry in start),
        tuple(mapping.project(entry) for entry in end),
    )
    return [
        ExchangeStep(step.i, step.j, mapping.lift_element(step.x), mapping.lift_element(step.y))
        for step in seq.steps
    ]


def _direct(start: BasisTuple, end: BasisTuple) -> List[ExchangeStep]:
    out = start[0] & ~end[0]
    into = end[0] & ~start[0]
    if not out and not into:
        return []
    if size(out) != 1 or size(into) != 1:
        raise PreconditionError("Entries differ in more than one element.")
    return [ExchangeStep(0, 1, smallest(out), smallest(into))]


def _degree2(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> List[ExchangeStep]:
    matroid = ctx.matroid
    _check_bases(matroid, *start, *end)
    pattern = _steps((0, 1, a, s), (0, 1, t, b))
    middle = run_steps(start, pattern[:1])
    if run_steps(middle, pattern[1:]) != tuple(end):
        raise PreconditionError("The two steps do not connect the tuples.")
    x_mid, y_mid = middle
    if matroid.is_basis(x_mid) and matroid.is_basis(y_mid):
        return pattern
    if matroid.is_basis(x_mid):
        swapped = _degree2(ctx, (start[1], start[0]), (end[1], end[0]), s, a, b, t)
        return _relabel(swapped, (1, 0))
    if not matroid.is_basis(y_mid):
        raise PreconditionError("Neither middle entry is a basis.")
    if len({a, b, s, t}) < 4:
        return _direct(start, end)
    if _reducible(matroid, start):
        return _via_minor(ctx, start, end)
    found = _pick("a degree 2 detour", matroid, start, end, _degree2_detours(matroid, start, a, s, t, b))
    if found is None:
        x, y = start
        raise UnreachableBranchError(
            f"The hyperplanes spanned around {{{format_set(x)}}}, {{{format_set(y)}}} at {a}, {s}, {t}, {b} "
            f"cover the ground set."
        )
    return found


def _degree2_detours(matroid: Matroid, start: BasisTuple, a: int, s: int, t: int, b: int) -> Iterator[List[ExchangeStep]]:
    """
    Rewrites of ``(0, 1, a, s), (0, 1, t, b)`` when ``x - a + s`` spans the hyperplane and the two bases
    partition the ground set. With ``x = xr + a + t`` and ``y = yr + b + s``, each one is only tried when the
    sets it passes through can be bases.
    """
    x, y = start
    x_rest = x & ~from_elements((a, t))
    y_rest = y & ~from_elements((b, s))
    if matroid.is_basis(y_rest | from_elements((a, s))):
        yield _steps((0, 1, a, b), (0, 1, t, s))
    if matroid.is_basis(y_rest | from_elements((b, t))):
        yield _steps((0, 1, t, s), (0, 1, a, b))
    if matroid.is_basis(x_rest | from_elements((a, b))):
        yield _steps((0, 1, t, b), (0, 1, a, s))
    covered = matroid.closure(x_rest | from_elements((s, t))) | matroid.closure(x_rest | from_elements((a, b)))
    for p in iter_elements(y_rest & ~covered):
        yield _steps((0, 1, a, p), (0, 1, t, b), (0, 1, p, s))
    covered = matroid.closure(y_rest | from_elements((a, s))) | matroid.closure(y_rest | from_elements((b, t)))
    for q in iter_elements(x_rest & ~covered):
        yield _steps((0, 1, q, s), (0, 1, t, b), (0, 1, a, q))


@public
def star_degree2(
        ctx: StarContext,
        x: ElementSet,
        y: ElementSet,
        x_end: ElementSet,
        y_end: ElementSet,
        a: int,
        s: int,
        t: int,
        b: int,
) -> ExchangeSequence:
    """
    Rewrite the two steps ``(0, 1, a, s), (0, 1, t, b)`` from ``(x, y)`` to ``(x_end, y_end)`` through bases.

    Exactly one of the middle entries ``x - a + s`` and ``y - s + a`` is not a basis of the matroid.

    :param ctx: The context.
    :return: The sequence, valid in ``ctx.matroid``.
    :raises PreconditionError: If the input does not have this shape.
    :raises UnreachableBranchError: If no rewrite was found.
    """
    steps = _degree2(ctx, (x, y), (x_end, y_end), a, s, t, b)
    return normalize_sequence(ExchangeSequence((x, y), tuple(steps)))


def _with_window(
        ctx: StarContext,
        start: BasisTuple,
        prefix: List[ExchangeStep],
        window: List[ExchangeStep],
        suffix: List[ExchangeStep],
) -> List[ExchangeStep]:
    rows = run_steps(start, prefix, ctx.matroid.is_basis)
    resolved = resolve_window(ctx, rows, window)
    return prefix + resolved + suffix


@public
def resolve_window(ctx: StarContext, rows: BasisTuple, window: List[ExchangeStep]) -> List[ExchangeStep]:
    """
    Resolve two consecutive steps whose middle tuple has one entry that is not a basis.

    The entry spans a stressed hyperplane, the window is rewritten over that hyperplane with
    :py:func:`star_degree2` or :py:func:`star_degree3`, one level deeper.

    :param ctx: The context.
    :param rows: The tuple of bases the window starts at.
    :param window: At most two steps.
    :return: The steps, through bases of ``ctx.matroid`` only.
    """
    matroid = ctx.matroid
    window = [step for step in window if not step.is_noop]
    if len(window) < 2:
        return window
    first, second = window
    middle = run_steps(rows, (first,))
    end = run_steps(middle, (second,))
    bad = [position for position, entry in enumerate(middle) if not matroid.is_basis(entry)]
    if not bad:
        return window
    if len(bad) > 1:
        raise UnreachableBranchError("More than one middle entry is not a basis.")
    w = bad[0]
    if w not in (first.i, first.j) or w not in (second.i, second.j):
        raise UnreachableBranchError("The entry that is not a basis is not touched by both steps.")
    u = first.j if first.i == w else first.i
    v = second.j if second.i == w else second.i
    a, s = (first.x, first.y) if first.i == w else (first.y, first.x)
    t, b = (second.x, second.y) if second.i == w else (second.y, second.x)
    hyperplane = matroid.closure(middle[w])
    if size(hyperplane) < matroid.r or not is_stressed(matroid, hyperplane):
        raise UnreachableBranchError(f"{{{format_set(hyperplane)}}} cannot be lifted over.")
    inner = ctx.deeper(hyperplane)
    if u == v:
        steps = _degree2(inner, (rows[w], rows[u]), (end[w], end[u]), a, s, t, b)
        return _relabel(steps, (w, u))
    steps = _degree3(inner, (rows[w], rows[u], rows[v]), (end[w], end[u], end[v]), a, s, t, b)
    return _relabel(steps, (w, u, v))


def _flip3(ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int) -> List[ExchangeStep]:
    """Rewrite the time reversed window with the partners swapped, then undo both."""
    rstart = (end[0], end[2], end[1])
    rend = (start[0], start[2], start[1])
    steps = _degree3(ctx, rstart, rend, b, t, s, a, flipped=True)
    return _relabel(_reverse(steps), (0, 2, 1))


def _same_received(matroid: Matroid, start: BasisTuple, a: int, s: int, b: int) -> Iterator[List[ExchangeStep]]:
    """Both partners trade ``s``, the pivot ``p`` comes from exchanging ``b`` into ``x``."""
    x, _, z = start
    pivots = _exchange_pivots(matroid, x, z, b)
    if a in pivots:
        yield _steps((0, 2, a, b), (1, 2, s, a))
    for p in pivots:
        if p != a:
            yield _steps((0, 2, p, b), (0, 1, a, s), (0, 2, s, p))


def _same_given(
        matroid: Matroid, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int
) -> Iterator[List[ExchangeStep]]:
    """``x`` gives ``a`` away and takes it back, pivoting on ``q`` from ``y`` and then on ``p`` from ``x_end``."""
    x, y, _ = start
    x_end, y_end, _ = end
    for q in _exchange_pivots(matroid, y, x, a):
        for p in _exchange_pivots(matroid, x_end, y_end, q):
            yield _steps((0, 1, a, q), (0, 1, p, s), (0, 2, t, a), (0, 1, q, p))


def _circuit_split(ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, q: int) -> List[ExchangeStep]:
    x, y, z = start
    x1 = swap(x, a, q)
    z1 = swap(z, q, s)
    first = _degree3(ctx.deeper(), start, (x1, end[1], z1), a, s, s, q)
    second = ctx.solver(ctx.matroid, (x1, z1), (end[0], end[2]))
    return first + _relabel(second.steps, (0, 2))


def _circuit_window(ctx: StarContext, start: BasisTuple, a: int, s: int, t: int, b: int) -> Iterable:
    """``b`` lies in ``y``, the circuit of ``a`` in ``y`` holds ``b`` or ``t``."""
    x, y, z = start
    try:
        circuit = ctx.matroid.fundamental_circuit(y, a)
    except PreconditionError:
        return
    if contains(circuit, b):
        yield _attempt(_with_window, ctx, start, _steps((0, 1, a, b)), _steps((0, 1, b, s), (0, 2, t, b)), [])
    if contains(circuit, t):
        if contains(z, a):
            window = _steps((1, 2, t, a), (0, 2, a, b))
        else:
            window = _steps((0, 2, a, b), (1, 2, t, a))
        yield _attempt(_with_window, ctx, start, [], window, _steps((0, 1, t, s)))


def _through_pair(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, z_target: ElementSet, s: int, a: int
) -> List[ExchangeStep]:
    seq = ctx.solver(ctx.matroid, (start[0], start[2]), (end[0], z_target))
    return _relabel(seq.steps, (0, 2)) + _steps((1, 2, s, a))


Detours = Callable[[StarContext, BasisTuple, BasisTuple, int, int, int, int], Iterable[Optional[List[ExchangeStep]]]]


def _mirrored(
        detours: Detours, ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> Iterator[Optional[List[ExchangeStep]]]:
    yield from detours(ctx, start, end, a, s, t, b)
    rstart = (end[0], end[2], end[1])
    rend = (start[0], start[2], start[1])
    for back in detours(ctx, rstart, rend, b, t, s, a):
        yield None if back is None else _relabel(_reverse(back), (0, 2, 1))


def _via_partner_circuit(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> Iterator[Optional[List[ExchangeStep]]]:
    if ctx.matroid.is_basis(swap(start[2], s, t)):
        yield _attempt(_with_window, ctx, start, _steps((0, 2, t, s)), _steps((1, 2, s, b), (0, 1, a, b)), [])


def _via_partner_pair(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> Iterator[Optional[List[ExchangeStep]]]:
    z_target = swap(swap(start[2], b, a), s, t)
    if ctx.matroid.is_basis(z_target):
        yield _attempt(_through_pair, ctx, start, end, z_target, s, a)


def _outside_x_hyperplanes(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> Iterator[List[ExchangeStep]]:
    matroid = ctx.matroid
    x, y, _ = start
    x_rest = x & ~from_elements((a, t))
    y_rest = y & ~from_elements((s, t))
    covered = matroid.closure(x_rest | from_elements((s, t))) | matroid.closure(x_rest | from_elements((a, b)))
    for p in iter_elements(y_rest & ~covered):
        yield _steps((0, 1, a, p), (0, 2, t, b), (0, 1, p, s))


def _outside_y_hyperplanes(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> Iterator[List[ExchangeStep]]:
    matroid = ctx.matroid
    x, y, z = start
    x_rest = x & ~from_elements((a, t))
    y_rest = y & ~from_elements((s, t))
    z_rest = z & ~from_elements((b, s))
    covered = matroid.closure(y_rest | from_elements((a, s))) | matroid.closure(y_rest | (1 << t))
    for p in iter_elements(z_rest & ~covered):
        yield _steps((1, 2, t, p), (0, 1, t, s), (0, 2, a, b), (1, 2, p, a))
    for p in iter_elements(x_rest & ~z_rest & ~covered):
        yield _steps((0, 1, p, s), (0, 2, t, b), (0, 1, a, p))


def _degree3_detours(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int
) -> Iterator[Optional[List[ExchangeStep]]]:
    """
    Rewrites of ``(0, 1, a, s), (0, 2, t, b)`` when the three bases cover the ground set with no element common
    to all of them, ``s`` lies in ``z``, ``t`` in ``y`` and neither ``y`` holds ``b`` nor ``z`` holds ``a``.
    """
    x_rest = start[0] & ~from_elements((a, t))
    if ctx.matroid.is_basis(x_rest | from_elements((a, b))):
        yield _steps((0, 2, t, b), (0, 1, a, s))
    for detours in (_via_partner_circuit, _via_partner_pair, _outside_x_hyperplanes, _outside_y_hyperplanes):
        yield from _mirrored(detours, ctx, start, end, a, s, t, b)


def _degree3(
        ctx: StarContext,
        start: BasisTuple,
        end: BasisTuple,
        a: int,
        s: int,
        t: int,
        b: int,
        flipped: bool = False,
) -> List[ExchangeStep]:
    matroid = ctx.matroid
    _check_bases(matroid, *start, *end)
    pattern = _steps((0, 1, a, s), (0, 2, t, b))
    middle = run_steps(start, pattern[:1])
    if run_steps(middle, pattern[1:]) != tuple(end):
        raise PreconditionError("The two steps do not connect the tuples.")
    if matroid.is_basis(middle[0]):
        return pattern
    if s == t and a == b:
        return _steps((1, 2, s, a))
    x, y, z = start
    candidates: Iterable[Optional[List[ExchangeStep]]]
    if s == t:
        case, candidates = "a shared received element", _same_received(matroid, start, a, s, b)
    elif a == b:
        case, candidates = "a shared given element", _same_given(matroid, start, end, a, s, t)
    elif not contains(z, s):
        case = "a split at the circuit of the second partner"
        candidates = (
            _attempt(_circuit_split, ctx, start, end, a, s, q)
            for q in iter_elements(matroid.fundamental_circuit(z, s) & ~ctx.h)
        )
    elif not flipped and not contains(end[1], t):
        case, candidates = "the reversed window", [_attempt(_flip3, ctx, start, end, a, s, t, b)]
    elif contains(y, b):
        case, candidates = "the circuit of the first partner", _circuit_window(ctx, start, a, s, t, b)
    elif not flipped and contains(z, a):
        case, candidates = "the reversed window", [_attempt(_flip3, ctx, start, end, a, s, t, b)]
    elif _reducible(matroid, start):
        return _via_minor(ctx, start, end)
    else:
        found = _pick("a degree 3 detour", matroid, start, end, _degree3_detours(ctx, start, end, a, s, t, b))
        if found is None:
            raise UnreachableBranchError(
                f"The hyperplanes spanned around {{{format_set(x)}}}, {{{format_set(y)}}}, {{{format_set(z)}}} "
                f"at {a}, {s}, {t}, {b} cover the ground set."
            )
        return found
    found = _pick(case, matroid, start, end, candidates)
    if found is None:
        raise UnreachableBranchError(f"No rewrite by {case} at {a}, {s}, {t}, {b}.")
    return found


@public
def star_degree3(
        ctx: StarContext,
        x: ElementSet,
        y: ElementSet,
        z: ElementSet,
        x_end: ElementSet,
        y_end: ElementSet,
        z_end: ElementSet,
        a: int,
        s: int,
        t: int,
        b: int,
) -> ExchangeSequence:
    """
    Rewrite the two steps ``(0, 1, a, s), (0, 2, t, b)`` from ``(x, y, z)`` to ``(x_end, y_end, z_end)``.

    All six given sets are bases of the matroid, the middle entry ``x - a + s`` need not be.
    The rewrite passes through bases only.

    :param ctx: The context.
    :return: The sequence, valid in ``ctx.matroid``.
    :raises PreconditionError: If the input does not have this shape.
    :raises UnreachableBranchError: If no rewrite was found.
    :raises DepthLimitError: If nested rewrites exceed the configured depth.
    """
    steps = _degree3(ctx, (x, y, z), (x_end, y_end, z_end), a, s, t, b)
    return normalize_sequence(ExchangeSequence((x, y, z), tuple(steps)))


@public
def repair_type0_pair(
        ctx: StarContext, x: ElementSet, y: ElementSet, x_end: ElementSet, y_end: ElementSet, s: int, t: int
) -> ExchangeSequence:
    """
    Replace the step ``(0, 1, s, t)`` between a type 0 entry and a basis of type at least two.

    The new steps pass through bases of the matroid only, apart from the two endpoints.

    :param ctx: The context.
    :param x: A type 0 set with respect to ``ctx.h``.
    :param y: A basis of type at least two.
    :param x_end: ``x - s + t``, of type 0.
    :param y_end: ``y - t + s``.
    :return: A sequence of at least two steps, valid in the relaxation at ``ctx.h``.
    """
    matroid, h = ctx.matroid, ctx.h
    if type_of(x, h) or type_of(x_end, h):
        raise PreconditionError("Outer entries are not of type 0.")
    if type_of(y, h) < 2:
        raise PreconditionError(f"{{{format_set(y)}}} has type below 2.")
    _check_bases(matroid, y, y_end)
    start, end = (x, y), (x_end, y_end)
    if run_steps(start, _steps((0, 1, s, t))) != end or s == t:
        raise PreconditionError("The step does not connect the tuples.")
    relaxed = relaxed_validator(matroid, h)
    for a in iter_elements(matroid.fundamental_circuit(y, s) & ~h):
        for b in iter_elements(matroid.fundamental_circuit(y_end, t) & ~h):
            steps = _steps((0, 1, s, a), (0, 1, a, b), (0, 1, b, t))
            if not _interior_fits(matroid, relaxed, start, end, steps):
                continue
            seq = normalize_sequence(ExchangeSequence(start, tuple(steps)))
            if len(seq) < 2:
                raise UnreachableBranchError("Repair collapsed to a single step.")
            return seq
    raise UnreachableBranchError(f"No repair of {{{format_set(x)}}} against {{{format_set(y)}}}.")


def _type02_pivots(matroid: Matroid, h: ElementSet, x: ElementSet, y: ElementSet, a: int) -> Iterable[int]:
    """All choices :py:func:`pick_type02` considers, the one it picks first."""
    pick_type02(matroid, h, x, y, a)
    yield from _exchange_pivots(matroid, x, y, a)


def _to_type1(matroid: Matroid, h: ElementSet, rows: BasisTuple) -> Tuple[ExchangeStep, BasisTuple]:
    w = 1 if type_of(rows[1], h) == 2 else 2
    c = smallest(rows[w] & ~h)
    p = pick_type02(matroid, h, rows[0], rows[w], c)
    step = ExchangeStep(0, w, p, c)
    return step, run_steps(rows, (step,))


def _bystander_tail(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, y: int, z: int, c: int, p: int
) -> List[ExchangeStep]:
    matroid, h = ctx.matroid, ctx.h
    x, by, _ = start
    x1, y1 = swap(x, p, c), swap(by, c, p)
    if contains(x, y):
        prefix = _steps((0, 1, p, c), (0, 2, y, z))
    else:
        q = next(
            (
                q for q in iter_elements(x1 & ~y1)
                if matroid.is_basis(swap(x1, q, y)) and matroid.is_basis(swap(y1, y, q))
            ),
            None,
        )
        if q is None:
            raise UnreachableBranchError(f"No element to trade for {y}.")
        prefix = _steps((0, 1, p, c), (0, 1, q, y), (0, 2, y, z))
    rows = run_steps(start, prefix)
    y_end = end[1]
    c2 = smallest(y_end & ~h)
    p2 = pick_type02(matroid, h, x, y_end, c2)
    middle = ctx.solver(matroid, (rows[0], rows[1]), (swap(x, p2, c2), swap(y_end, c2, p2)))
    return prefix + _relabel(middle.steps, (0, 1)) + _steps((0, 1, c2, p2))


def _xbb_candidates(ctx: StarContext, start: BasisTuple, end: BasisTuple, y: int, z: int, mirrored: bool) -> Iterable:
    matroid, h = ctx.matroid, ctx.h
    x, by, bz = start
    if not contains(h, y) and not contains(h, z):
        for p in _type02_pivots(matroid, h, x, by, y):
            yield _steps((0, 1, p, y), (0, 2, y, z), (0, 1, z, p))
    elif not contains(h, y):
        for p in _type02_pivots(matroid, h, x, by, y):
            if contains(x, z):
                yield _steps((0, 1, p, y), (0, 1, z, p), (0, 2, y, z))
            else:
                for q in iter_elements(swap(x, p, y) & ~bz):
                    yield _steps((0, 1, p, y), (0, 2, q, z), (0, 1, z, p), (0, 2, y, q))
    elif not contains(h, z):
        if not mirrored:
            back = _attempt(_xbb, ctx, end, start, z, y, True)
            yield None if back is None else _reverse(back)
    elif contains(x, y) and contains(x, z):
        for c in iter_elements(matroid.fundamental_circuit(by, z) & ~h):
            yield _steps((0, 1, z, c), (0, 2, y, z), (0, 1, c, y))
    elif contains(x, z):
        if not mirrored:
            back = _attempt(_xbb, ctx, end, start, z, y, True)
            yield None if back is None else _reverse(back)
    else:
        for c in iter_elements(by & ~h):
            for p in _type02_pivots(matroid, h, x, by, c):
                yield _attempt(_bystander_tail, ctx, start, end, y, z, c, p)


def _xbb(
        ctx: StarContext, start: BasisTuple, end: BasisTuple, y: int, z: int, mirrored: bool = False
) -> List[ExchangeStep]:
    matroid, h = ctx.matroid, ctx.h
    x, by, bz = start
    relaxed = relaxed_validator(matroid, h)
    if type_of(by, h) + type_of(bz, h) == 3:
        left, left_rows = _to_type1(matroid, h, start)
        right, right_rows = _to_type1(matroid, h, end)
        middle = solve_type1_bases(matroid, h, left_rows, right_rows)
        steps = [left] + list(middle.steps) + [right.reversed()]
    elif type_of(by, h) < 2:
        swapped = _xbb(ctx, (x, bz, by), (end[0], end[2], end[1]), z, y, mirrored)
        steps = _relabel(swapped, (0, 2, 1))
    else:
        steps = next(
            (
                candidate for candidate in _xbb_candidates(ctx, start, end, y, z, mirrored)
                if candidate is not None and _interior_fits(matroid, relaxed, start, end, candidate)
            ),
            None,
        )
    if steps is None or not _interior_fits(matroid, relaxed, start, end, steps):
        raise UnreachableBranchError(f"No rewrite of the step exchanging {y} and {z} next to a type 0 entry.")
    return steps


@public
def repair_XBB(
        ctx: StarContext,
        x: ElementSet,
        y: ElementSet,
        z: ElementSet,
        y_end: ElementSet,
        z_end: ElementSet,
        y_out: int,
        z_out: int,
) -> ExchangeSequence:
    """
    Replace the step ``(1, 2, y_out, z_out)`` that passes by a type 0 entry ``x``.

    Both bystanders stay bases of type at least one before and after the step and their total type is
    at least three. In the new steps the first entry is a basis of the matroid everywhere but at its ends.

    :param ctx: The context.
    :return: The sequence, valid in the relaxation at ``ctx.h``.
    """
    h = ctx.h
    if y_out == z_out:
        raise PreconditionError("The step exchanges an element for itself.")
    if type_of(x, h):
        raise PreconditionError(f"{{{format_set(x)}}} is not of type 0.")
    if min(type_of(y, h), type_of(z, h), type_of(y_end, h), type_of(z_end, h)) < 1:
        raise PreconditionError("A bystander has type 0.")
    if type_of(y, h) + type_of(z, h) < 3:
        raise PreconditionError("The bystanders have total type below 3.")
    start, end = (x, y, z), (x, y_end, z_end)
    if run_steps(start, _steps((1, 2, y_out, z_out))) != end:
        raise PreconditionError("The step does not connect the tuples.")
    steps = _xbb(ctx, start, end, y_out, z_out)
    return normalize_sequence(ExchangeSequence(start, tuple(steps)))
