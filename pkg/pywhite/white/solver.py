"""
Provides the solver connecting tuples of bases of paving matroids by symmetric exchange sequences.

A paving matroid that is not uniform has a stressed hyperplane ``H`` of size at least ``r``. Relaxing it gives
a matroid with more bases in which the instance is solved first. The resulting sequence is then lifted back:
entries of type 0 with respect to ``H`` are bases only in the relaxation and get rewritten away, one position
at a time, by splicing the local rewrites of :py:mod:`pywhite.white.star` into the sequence.
"""
import logging
from dataclasses import dataclass
from typing import List, Set, Dict, Tuple, Optional, Sequence

from public import public

from ..matroid.elements import ElementSet, smallest, format_set, size, iter_elements
from ..matroid.error import (
    PreconditionError,
    UnreachableBranchError,
    CertificateError,
    NotABasisError,
    UnequalUnionError,
    raise_non_paving,
)
from ..matroid.matroid import Matroid
from ..matroid.relaxation import type_of, relax, stressed_hyperplanes
from ..misc.cfg import getconfig
from .context import SpliceAction, SpliceCase, SolveAction
from .lemma import relaxed_validator, solve_uniform, solve_type_le1, pick_type02
from .sequence import (
    BasisTuple,
    Validator,
    ExchangeStep,
    ExchangeSequence,
    apply_step,
    multiset_union,
    normalize_sequence,
    reverse_sequence,
    concat,
    validate_sequence,
)
from .star import (
    StarContext,
    SolverCallback,
    repair_type0_pair,
    repair_XBB,
    star_degree2,
    star_degree3,
    _steps,
    _relabel,
    _reverse,
    _interior_fits,
    _type02_pivots,
)

log = logging.getLogger(__name__)


@public
@dataclass
class LiftState:
    """An exchange sequence being lifted out of the relaxation at ``h``."""

    h: ElementSet
    tuples: List[BasisTuple]
    """The tuples along the sequence, start and end included."""
    steps: List[ExchangeStep]

    @classmethod
    def from_sequence(cls, seq: ExchangeSequence, h: ElementSet) -> "LiftState":
        seq = normalize_sequence(seq)
        return cls(h, seq.tuples(), list(seq.steps))

    @property
    def degree(self) -> int:
        return len(self.tuples[0])

    def h_set(self, position: int) -> List[int]:
        """The indices of the tuples whose entry at ``position`` is a subset of ``h``."""
        return [j for j, tup in enumerate(self.tuples) if not tup[position] & ~self.h]

    def r_set(self) -> Set[int]:
        """The positions that are a subset of ``h`` somewhere along the sequence."""
        return {i for i in range(self.degree) if self.h_set(i)}

    def sequence(self) -> ExchangeSequence:
        return ExchangeSequence(self.tuples[0], tuple(self.steps))

    def splice(self, begin: int, end: int, replacement: Sequence[ExchangeStep], validator: Validator) -> None:
        """
        Replace ``steps[begin:end]`` by ``replacement`` and normalize.

        :raises UnreachableBranchError: If the result leaves the bases accepted by ``validator``.
        """
        steps = self.steps[:begin] + list(replacement) + self.steps[end:]
        seq = normalize_sequence(ExchangeSequence(self.tuples[0], tuple(steps)))
        tuples = [seq.start]
        try:
            for step in seq.steps:
                tuples.append(apply_step(tuples[-1], step, validator))
        except PreconditionError as e:
            raise UnreachableBranchError(f"Splice at step {begin} broke the sequence: {e}")
        if tuples[-1] != self.tuples[-1]:
            raise UnreachableBranchError(f"Splice at step {begin} moved the end of the sequence.")
        self.tuples = tuples
        self.steps = list(seq.steps)


def _oriented(step: ExchangeStep, position: int) -> Tuple[int, int, int]:
    """The partner position, the element ``position`` gives and the element it receives."""
    if step.i == position:
        return step.j, step.x, step.y
    return step.i, step.y, step.x


def _type0(s: ElementSet, h: ElementSet) -> bool:
    return not s & ~h


def _heavy_row(tup: BasisTuple, h: ElementSet, exclude: Set[int]) -> int:
    for position, entry in enumerate(tup):
        if position not in exclude and type_of(entry, h) >= 2:
            return position
    raise UnreachableBranchError("No other entry of type at least 2.")


def _splice(state: LiftState, ctx: StarContext, case: SpliceCase, begin: int, end: int,
            replacement: Sequence[ExchangeStep]) -> None:
    before = state.r_set()
    with SpliceAction(case, begin):
        state.splice(begin, end, replacement, relaxed_validator(ctx.matroid, ctx.h))
    after = state.r_set()
    if not after <= before:
        raise UnreachableBranchError(f"Applying {case} at step {begin} added positions {sorted(after - before)}.")
    log.debug("Applied %s at step %d, %d steps now.", case, begin, len(state.steps))


def _bystander_mixed(ctx: StarContext, start: BasisTuple, end: BasisTuple, s: int, t: int) -> List[ExchangeStep]:
    matroid, h = ctx.matroid, ctx.h
    x, y, z = start
    y_end = end[1]
    relaxed = relaxed_validator(matroid, h)

    def candidates():
        for p in _type02_pivots(matroid, h, x, z, t):
            if not y_end >> p & 1:
                yield _steps((0, 2, p, t), (1, 2, s, p), (0, 1, t, p))
            else:
                for q in iter_elements(x & ~y_end):
                    if q == s:
                        yield _steps((0, 2, p, t), (0, 2, s, p), (0, 1, t, s))
                    else:
                        yield _steps((0, 2, p, t), (0, 1, q, p), (1, 2, s, p), (0, 1, t, q))

    for steps in candidates():
        if _interior_fits(matroid, relaxed, start, end, steps, loose=(1,)):
            return steps
    raise UnreachableBranchError("No rewrite of a step leaving a type 0 bystander.")


def _bystander(ctx: StarContext, start: BasisTuple, end: BasisTuple, s: int, t: int) -> Tuple[List[ExchangeStep], SpliceCase]:
    """Rewrite the step ``(1, 2, s, t)`` next to the type 0 entry at position 0."""
    h = ctx.h
    x, y, z = start
    if type_of(y, h) > type_of(z, h):
        steps, case = _bystander(ctx, (x, z, y), (end[0], end[2], end[1]), t, s)
        return _relabel(steps, (0, 2, 1)), case
    y_end, z_end = end[1], end[2]
    if type_of(y, h) >= 1 and type_of(y_end, h) >= 1:
        seq = repair_XBB(ctx, x, y, z, y_end, z_end, s, t)
        return list(seq.steps), SpliceCase.ReduceBystanderBases
    if type_of(y_end, h) >= 1:
        return _bystander_mixed(ctx, start, end, s, t), SpliceCase.ReduceBystanderMixed
    if type_of(y, h) >= 1:
        return _reverse(_bystander_mixed(ctx, end, start, t, s)), SpliceCase.ReduceBystanderMixed
    pair = repair_type0_pair(ctx, y, z, y_end, z_end, s, t)
    result: List[ExchangeStep] = []
    rows = start
    for step in pair.steps:
        local = step.relabel((1, 2))
        following = apply_step(rows, local)
        steps, _ = _bystander(ctx, rows, following, local.x, local.y)
        result.extend(steps)
        rows = following
    return result, SpliceCase.ReduceBystanderType0


def _reduce_pair(state: LiftState, ctx: StarContext, position: int, l: int) -> Tuple[List[ExchangeStep], SpliceCase]:
    matroid, h = ctx.matroid, ctx.h
    before, after = state.tuples[l], state.tuples[l + 1]
    step = state.steps[l]
    x = before[position]
    if position in (step.i, step.j):
        k, s, t = _oriented(step, position)
        y = before[k]
        if type_of(y, h) >= 2:
            seq = repair_type0_pair(ctx, x, y, after[position], after[k], s, t)
            return _relabel(seq.steps, (position, k)), SpliceCase.ReducePartnerHeavy
        k2 = _heavy_row(before, h, {position, k})
        z = before[k2]
        q = smallest(z & ~h)
        p = pick_type02(matroid, h, x, z, q)
        if p != s:
            return [ExchangeStep(position, k2, p, q), step, ExchangeStep(position, k2, q, p)], SpliceCase.ReducePartnerLight
        p = pick_type02(matroid, h, after[position], z, q)
        if p != t:
            return [ExchangeStep(position, k2, p, q), step, ExchangeStep(position, k2, q, p)], SpliceCase.ReducePartnerLight
        return [
            ExchangeStep(position, k2, s, q),
            ExchangeStep(k2, k, s, t),
            ExchangeStep(position, k2, q, t),
        ], SpliceCase.ReducePartnerLight
    k, k2 = step.i, step.j
    if type_of(before[k], h) + type_of(before[k2], h) < 3:
        w = _heavy_row(before, h, {position, k, k2})
        q = smallest(before[w] & ~h)
        p = pick_type02(matroid, h, x, before[w], q)
        return [ExchangeStep(position, w, p, q), step, ExchangeStep(position, w, q, p)], SpliceCase.ReduceDetour
    positions = (position, k, k2)
    steps, case = _bystander(
        ctx,
        tuple(before[i] for i in positions),
        tuple(after[i] for i in positions),
        step.x,
        step.y,
    )
    return _relabel(steps, positions), case


def _first_position(state: LiftState) -> Optional[int]:
    return min(state.r_set(), default=None)


@public
def reduce_consecutive(state: LiftState, ctx: StarContext, position: Optional[int] = None) -> LiftState:
    """
    Separate the type 0 entries at ``position`` so that no two of them are consecutive.

    Runs until no consecutive pair is left, each splice keeps the set of positions with a type 0 entry
    from growing.

    :param state: The lift state, modified in place.
    :param ctx: The context, with the hyperplane of ``state``.
    :param position: The position to work on, the smallest one with a type 0 entry if not given.
    :return: The state.
    """
    if position is None:
        position = _first_position(state)
        if position is None:
            return state
    limit = 8 * len(state.steps) + 64
    iterations = 0
    while True:
        indices = state.h_set(position)
        present = set(indices)
        l = next((j for j in indices if j + 1 in present), None)
        if l is None:
            break
        iterations += 1
        if iterations > limit:
            raise UnreachableBranchError(f"Consecutive type 0 entries at position {position} keep reappearing.")
        replacement, case = _reduce_pair(state, ctx, position, l)
        _splice(state, ctx, case, l, l + 1, replacement)
    log.debug("Separated type 0 entries at position %d in %d iterations.", position, iterations)
    return state


def _merge(start: BasisTuple, end: BasisTuple) -> List[ExchangeStep]:
    out = start[0] & ~end[0]
    into = end[0] & ~start[0]
    if not out:
        return []
    if size(out) != 1 or size(into) != 1:
        raise UnreachableBranchError("Merged steps differ in more than one element.")
    return [ExchangeStep(0, 1, smallest(out), smallest(into))]


def _one_side_type0(ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int) -> List[ExchangeStep]:
    matroid, h = ctx.matroid, ctx.h
    y = start[1]

    def candidates():
        if s == t:
            yield _steps((1, 2, s, b), (0, 1, a, b))
        elif not y >> t & 1:
            yield _steps((0, 1, t, s), (1, 2, t, b), (0, 1, a, b))
        else:
            base = (end[0] & ~(1 << b)) | (1 << a)
            other = (end[1] & ~(1 << a)) | (1 << b)
            for q in iter_elements(base & ~other):
                yield _steps((0, 1, q, s), (1, 2, t, b), (0, 1, t, q), (0, 1, a, b))

    relaxed = relaxed_validator(matroid, h)
    for steps in candidates():
        if _interior_fits(matroid, relaxed, start, end, steps, loose=(1, 2)):
            return steps
    raise UnreachableBranchError("No rewrite next to a single type 0 partner.")


def _both_sides_type0(ctx: StarContext, start: BasisTuple, end: BasisTuple, a: int, s: int, t: int, b: int) -> List[ExchangeStep]:
    if not end[2] >> s & 1:
        steps = _steps((0, 2, a, b), (1, 2, s, a), (0, 2, t, s))
    else:
        steps = _steps((0, 2, a, b), (0, 2, t, s), (1, 2, s, a))
    if not _interior_fits(ctx.matroid, relaxed_validator(ctx.matroid, ctx.h), start, end, steps, loose=(1, 2)):
        raise UnreachableBranchError("No rewrite next to two type 0 partners.")
    return steps


def _eliminate_at(state: LiftState, ctx: StarContext, position: int, j: int) -> Tuple[List[ExchangeStep], SpliceCase]:
    matroid, h = ctx.matroid, ctx.h
    prev, mid, nxt = state.tuples[j - 1], state.tuples[j], state.tuples[j + 1]
    first, second = state.steps[j - 1], state.steps[j]
    if position not in (first.i, first.j) or position not in (second.i, second.j):
        raise UnreachableBranchError(f"Type 0 entry at index {j} is not isolated.")
    if not matroid.is_basis(prev[position]) or not matroid.is_basis(nxt[position]):
        raise UnreachableBranchError(f"Type 0 entry at index {j} has a neighbour that is not a basis.")
    k, a, s = _oriented(first, position)
    k2, t, b = _oriented(second, position)
    x, x_end = prev[position], nxt[position]
    if k == k2:
        y, y_end = prev[k], nxt[k]
        if matroid.is_basis(y) and matroid.is_basis(y_end):
            seq = star_degree2(ctx, x, y, x_end, y_end, a, s, t, b)
            return _relabel(seq.steps, (position, k)), SpliceCase.EliminatePairStar
        return _relabel(_merge((x, y), (x_end, y_end)), (position, k)), SpliceCase.EliminateMerge
    positions = (position, k, k2)
    y, y_mid, z, z_end = prev[k], mid[k], prev[k2], nxt[k2]
    if all(matroid.is_basis(e) for e in (y, y_mid, z, z_end)):
        seq = star_degree3(ctx, x, y, z, x_end, y_mid, z_end, a, s, t, b)
        return _relabel(seq.steps, positions), SpliceCase.EliminateTripleStar
    start, end = (x, y, z), (x_end, y_mid, z_end)
    if _type0(y, h) and _type0(z_end, h):
        return _relabel(_both_sides_type0(ctx, start, end, a, s, t, b), positions), SpliceCase.EliminateBothSidesType0
    if _type0(y, h):
        return _relabel(_one_side_type0(ctx, start, end, a, s, t, b), positions), SpliceCase.EliminateOneSideType0
    if _type0(z_end, h):
        back = _one_side_type0(ctx, (x_end, z_end, y_mid), (x, z, y), b, t, s, a)
        return _relabel(_reverse(back), (position, k2, k)), SpliceCase.EliminateOneSideType0
    raise UnreachableBranchError(f"No case matches the type 0 entry at index {j}.")


@public
def eliminate_H1(state: LiftState, ctx: StarContext, position: Optional[int] = None) -> LiftState:
    """
    Rewrite away every isolated type 0 entry at ``position``.

    :param state: The lift state, with no two consecutive type 0 entries at ``position``; modified in place.
    :param ctx: The context, with the hyperplane of ``state``.
    :param position: The position to work on, the smallest one with a type 0 entry if not given.
    :return: The state, with no type 0 entry left at ``position``.
    """
    if position is None:
        position = _first_position(state)
        if position is None:
            return state
    while True:
        indices = state.h_set(position)
        if not indices:
            return state
        j = indices[0]
        replacement, case = _eliminate_at(state, ctx, position, j)
        _splice(state, ctx, case, j - 1, j + 1, replacement)
        if len(state.h_set(position)) >= len(indices):
            raise UnreachableBranchError(f"Applying {case} at step {j - 1} did not remove a type 0 entry.")


def _check_instance(matroid: Matroid, start: BasisTuple, end: BasisTuple, validator: Optional[Validator] = None) -> None:
    is_basis = validator if validator is not None else matroid.is_basis
    if len(start) != len(end):
        raise UnequalUnionError(f"Tuples of degree {len(start)} and {len(end)}.")
    if multiset_union(start) != multiset_union(end):
        raise UnequalUnionError("Tuples do not have the same multiset union.")
    for position, entry in enumerate(start + end):
        if not is_basis(entry):
            raise NotABasisError(f"Entry {position % len(start)}, {{{format_set(entry)}}}, is not a basis.")


@public
def lift_sequence(
        matroid: Matroid, h: ElementSet, seq: ExchangeSequence, solver: Optional["Solver"] = None
) -> ExchangeSequence:
    """
    Lift a sequence of degree at least three out of the relaxation at ``h``.

    :param matroid: The paving matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param seq: The sequence, valid in the relaxation, with both endpoints tuples of bases of ``matroid``.
    :param solver: The solver the local rewrites fall back to, a fresh one if not given.
    :return: The sequence, valid in ``matroid``.
    """
    if solver is None:
        solver = Solver()
    return _lift(StarContext(matroid, h, solver.solve), seq)


def _lift(ctx: StarContext, seq: ExchangeSequence) -> ExchangeSequence:
    if seq.degree < 3:
        raise PreconditionError("Lifting needs degree at least 3.")
    _check_instance(ctx.matroid, tuple(seq.start), tuple(seq.end))
    state = LiftState.from_sequence(seq, ctx.h)
    remaining = state.r_set()
    while remaining:
        position = min(remaining)
        reduce_consecutive(state, ctx, position)
        eliminate_H1(state, ctx, position)
        now = state.r_set()
        if position in now or not now < remaining:
            raise UnreachableBranchError(f"Position {position} was not cleared.")
        remaining = now
    return state.sequence()


@public
def lift_degree2(
        matroid: Matroid, h: ElementSet, seq: ExchangeSequence, solver: Optional["Solver"] = None
) -> ExchangeSequence:
    """
    Lift a sequence of pairs out of the relaxation at ``h``.

    Consecutive type 0 entries are first separated, then every remaining one is rewritten by
    :py:func:`star_degree2`.

    :param matroid: The paving matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param seq: The sequence of pairs, valid in the relaxation, with both endpoints pairs of bases of ``matroid``.
    :param solver: The solver the local rewrites fall back to, a fresh one if not given.
    :return: The sequence, valid in ``matroid``.
    """
    if seq.degree != 2:
        raise PreconditionError("Degree 2 sequence expected.")
    _check_instance(matroid, tuple(seq.start), tuple(seq.end))
    if solver is None:
        solver = Solver()
    return _lift_degree2(StarContext(matroid, h, solver.solve), seq)


def _lift_degree2(ctx: StarContext, seq: ExchangeSequence) -> ExchangeSequence:
    h = ctx.h
    state = LiftState.from_sequence(seq, h)
    while True:
        found = next(
            (
                (l, w) for l in range(len(state.steps)) for w in (0, 1)
                if _type0(state.tuples[l][w], h) and _type0(state.tuples[l + 1][w], h)
            ),
            None,
        )
        if found is None:
            break
        l, w = found
        k, s, t = _oriented(state.steps[l], w)
        before, after = state.tuples[l], state.tuples[l + 1]
        pair = repair_type0_pair(ctx, before[w], before[k], after[w], after[k], s, t)
        _splice(state, ctx, SpliceCase.Lift2Type0Pair, l, l + 1, _relabel(pair.steps, (w, k)))
    while True:
        found = next(
            ((j, w) for j, tup in enumerate(state.tuples) for w in (0, 1) if _type0(tup[w], h)),
            None,
        )
        if found is None:
            break
        j, w = found
        k, a, s = _oriented(state.steps[j - 1], w)
        _, t, b = _oriented(state.steps[j], w)
        prev, nxt = state.tuples[j - 1], state.tuples[j + 1]
        star = star_degree2(ctx, prev[w], prev[k], nxt[w], nxt[k], a, s, t, b)
        _splice(state, ctx, SpliceCase.Lift2Star, j - 1, j + 1, _relabel(star.steps, (w, k)))
    return state.sequence()


def _normalize_side(matroid: Matroid, h: ElementSet, tup: BasisTuple) -> Tuple[List[ExchangeStep], BasisTuple]:
    steps: List[ExchangeStep] = []
    current = tup
    while True:
        light = next((i for i, e in enumerate(current) if type_of(e, h) == 0), None)
        heavy = next((i for i, e in enumerate(current) if type_of(e, h) >= 2), None)
        if light is None or heavy is None:
            return steps, current
        a = smallest(current[heavy] & ~h)
        s = pick_type02(matroid, h, current[light], current[heavy], a)
        step = ExchangeStep(light, heavy, s, a)
        current = apply_step(current, step)
        steps.append(step)


@public
def lower_to_relaxation(
        matroid: Matroid, h: ElementSet, start: BasisTuple, end: BasisTuple, solver: SolverCallback
) -> ExchangeSequence:
    """
    Connect two tuples of bases of the relaxation at ``h`` using a solver for ``matroid``.

    Both tuples are first rewritten until either no entry has type 0 or no entry has type at least 2.
    In the first case all entries are bases of ``matroid`` and ``solver`` connects them, in the second
    :py:func:`solve_type_le1` does.

    :param matroid: The matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param start: The start tuple of bases of the relaxation.
    :param end: The end tuple.
    :param solver: Connects tuples of bases of ``matroid``.
    :return: The sequence, valid in the relaxation.
    """
    start, end = tuple(start), tuple(end)
    _check_instance(matroid, start, end, relaxed_validator(matroid, h))
    prefix, left = _normalize_side(matroid, h, start)
    suffix, right = _normalize_side(matroid, h, end)
    if any(type_of(e, h) >= 2 for e in left + right):
        middle = solver(matroid, left, right)
    else:
        middle = solve_type_le1(matroid, h, left, right)
    log.debug("Lowered with %d prefix and %d suffix steps.", len(prefix), len(suffix))
    return concat(
        ExchangeSequence(start, tuple(prefix)),
        middle,
        reverse_sequence(ExchangeSequence(end, tuple(suffix))),
    )



@public
class Solver:
    """
    Connects tuples of bases of paving matroids.

    Solved instances are memoized per solver when :py:attr:`SolverConfig.memoize` is set.
    """

    memo: Dict[Tuple[Matroid, BasisTuple, BasisTuple], ExchangeSequence]
    _active: Set[Tuple[Matroid, BasisTuple, BasisTuple]]

    def __init__(self):
        self.memo = {}
        self._active = set()

    def solve(self, matroid: Matroid, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
        """
        Connect two tuples of bases.

        :param matroid: The paving matroid.
        :param start: The start tuple.
        :param end: The end tuple, with the same multiset union.
        :return: The sequence, valid in ``matroid``.
        :raises NotPavingError: If ``matroid`` is not paving, see :py:attr:`SolverConfig.non_paving_action`.
        :raises CertificateError: If the produced sequence does not validate.
        """
        start, end = tuple(start), tuple(end)
        _check_instance(matroid, start, end)
        config = getconfig().solver
        key = (matroid, start, end)
        if config.memoize and key in self.memo:
            return self.memo[key]
        if key in self._active:
            raise UnreachableBranchError("Instance revisited while being solved.")
        self._active.add(key)
        try:
            with SolveAction(matroid, start, end) as action:
                result = self._solve(matroid, start, end)
                if config.verify_output:
                    report = validate_sequence(matroid, result, end)
                    if not report.ok:
                        raise CertificateError(f"Produced sequence is invalid, {report}.", report)
                action.exit(result)
        finally:
            self._active.discard(key)
        if config.memoize:
            self.memo[key] = result
        return result

    def _solve(self, matroid: Matroid, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
        if not matroid.is_paving():
            raise_non_paving(f"{matroid} is not paving.")
        if start == end:
            return ExchangeSequence(start)
        if len(start) == 1:
            raise UnreachableBranchError("Distinct degree 1 tuples with the same union.")
        if matroid.is_uniform():
            return normalize_sequence(solve_uniform(matroid, start, end))
        hyperplanes = stressed_hyperplanes(matroid)
        if not hyperplanes:
            raise UnreachableBranchError(f"{matroid} has no stressed hyperplane to relax.")
        h = hyperplanes[0]
        relaxed = relax(matroid, h)
        log.debug("Solving degree %d in the relaxation at {%s}.", len(start), format_set(h))
        inner = self.solve(relaxed, start, end)
        ctx = StarContext(matroid, h, self.solve)
        if len(start) == 2:
            return _lift_degree2(ctx, inner)
        return _lift(ctx, inner)


@public
def solve_degree2(
        matroid: Matroid, h: ElementSet, start: BasisTuple, end: BasisTuple, solver: Optional[Solver] = None
) -> ExchangeSequence:
    """
    Connect two pairs of bases through the relaxation at ``h``.

    :param matroid: The paving matroid.
    :param h: A stressed hyperplane of ``matroid`` with at least ``r`` elements.
    :param start: The start pair of bases.
    :param end: The end pair.
    :param solver: The solver used for the relaxation and the fallbacks, a fresh one if not given.
    :return: The sequence, valid in ``matroid``.
    """
    start, end = tuple(start), tuple(end)
    if len(start) != 2:
        raise PreconditionError("Degree 2 tuples expected.")
    _check_instance(matroid, start, end)
    if solver is None:
        solver = Solver()
    inner = solver.solve(relax(matroid, h), start, end)
    return _lift_degree2(StarContext(matroid, h, solver.solve), inner)


@public
def solve(matroid: Matroid, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
    """
    Connect two tuples of bases of a paving matroid, see :py:meth:`Solver.solve`.

    :param matroid: The paving matroid.
    :param start: The start tuple.
    :param end: The end tuple, with the same multiset union.
    :return: The sequence, valid in ``matroid``.
    """
    return Solver().solve(matroid, start, end)
