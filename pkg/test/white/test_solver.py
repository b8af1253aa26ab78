from itertools import product, islice

import numpy as np
import pytest

from pywhite.matroid.catalog import get_matroid, list_matroids
from pywhite.matroid.elements import from_elements
from pywhite.matroid.error import (
    PreconditionError,
    NotPavingError,
    UnequalUnionError,
    NotABasisError,
    UnreachableBranchError,
)
from pywhite.matroid.generate import make_random_paving
from pywhite.matroid.matroid import Matroid
from pywhite.matroid.relaxation import type_of, relax, stressed_hyperplanes
from pywhite.misc.cfg import TemporaryConfig
from pywhite.oracle.cross import CrossCheckReport, cross_check, random_pairs, case_coverage
from pywhite.oracle.fiber import enumerate_fiber
from pywhite.white.context import local, ProvenanceContext, SpliceCase
from pywhite.white.lemma import relaxed_validator
from pywhite.white.sequence import ExchangeStep, ExchangeSequence, validate_sequence, multiset_union, format_sequence
from pywhite.white.solver import (
    LiftState,
    Solver,
    solve,
    solve_degree2,
    lift_sequence,
    lift_degree2,
    lower_to_relaxation,
    reduce_consecutive,
    eliminate_H1,
)
from pywhite.white.star import StarContext

H1 = from_elements([0, 1])
H2 = from_elements([0, 1, 2, 3])


def s(*members):
    return from_elements(members)


def stacked_type0():
    """A degree 3 sequence in the relaxation of M2 with type 0 entries at indices 1 and 2 of position 0."""
    start = (s(0, 1, 4), s(2, 3, 5), s(3, 4, 5))
    steps = (ExchangeStep(0, 1, 4, 2), ExchangeStep(0, 2, 0, 3), ExchangeStep(0, 2, 1, 4))
    return ExchangeSequence(start, steps)


def test_lift_state():
    seq = ExchangeSequence((s(0, 2), s(1, 3)), (ExchangeStep(0, 1, 2, 1), ExchangeStep(0, 1, 1, 3)))
    state = LiftState.from_sequence(seq, H1)
    assert state.degree == 2
    assert state.h_set(0) == [1]
    assert state.h_set(1) == []
    assert state.r_set() == {0}
    assert state.sequence() == seq
    with pytest.raises(UnreachableBranchError):
        state.splice(0, 2, [], lambda entry: True)
    state.splice(0, 2, [ExchangeStep(0, 1, 2, 3)], lambda entry: True)
    assert state.steps == [ExchangeStep(0, 1, 2, 3)]
    assert state.tuples[-1] == (s(0, 3), s(1, 2))
    assert state.r_set() == set()


def test_reduce_consecutive(m2):
    ctx = StarContext(m2, H2, Solver().solve)
    state = LiftState.from_sequence(stacked_type0(), H2)
    assert state.h_set(0) == [1, 2]
    with local(ProvenanceContext()) as provenance:
        reduce_consecutive(state, ctx, 0)
    assert provenance.counts[SpliceCase.ReducePartnerHeavy] == 1
    assert state.h_set(0) == [1, 3]
    assert state.r_set() == {0}
    assert validate_sequence(m2, state.sequence(), stacked_type0().end, relaxed_validator(m2, H2)).ok
    with local(ProvenanceContext()) as provenance:
        eliminate_H1(state, ctx, 0)
    assert provenance.counts[SpliceCase.EliminateTripleStar] == 1
    assert provenance.counts[SpliceCase.EliminatePairStar] == 1
    assert state.r_set() == set()
    assert validate_sequence(m2, state.sequence(), stacked_type0().end).ok


def test_lift_passes_default_position(m2):
    ctx = StarContext(m2, H2, Solver().solve)
    state = LiftState.from_sequence(stacked_type0(), H2)
    reduce_consecutive(state, ctx)
    assert state.h_set(0) == [1, 3]
    eliminate_H1(state, ctx)
    assert state.r_set() == set()
    assert reduce_consecutive(state, ctx) is state
    assert eliminate_H1(state, ctx) is state
    assert validate_sequence(m2, state.sequence(), stacked_type0().end).ok


def test_lift_sequence(m2):
    seq = lift_sequence(m2, H2, stacked_type0())
    assert seq.start == stacked_type0().start
    assert validate_sequence(m2, seq, stacked_type0().end).ok


def test_lift_sequence_clean(m2):
    seq = ExchangeSequence((s(0, 1, 4), s(2, 3, 5), s(3, 4, 5)), (ExchangeStep(0, 1, 0, 2),))
    assert lift_sequence(m2, H2, seq) == seq
    with pytest.raises(PreconditionError):
        lift_sequence(m2, H2, ExchangeSequence((s(0, 1, 4), s(2, 3, 5))))


def test_lift_sequence_isolated(m2):
    seq = ExchangeSequence((s(0, 1, 4), s(2, 3, 5), s(2, 4, 5)), (ExchangeStep(0, 1, 4, 2), ExchangeStep(0, 2, 0, 5)))
    lifted = lift_sequence(m2, H2, seq, Solver())
    assert validate_sequence(m2, lifted, (s(1, 2, 5), s(3, 4, 5), s(0, 2, 4))).ok


def test_lower_to_relaxation(m1):
    start, end = (s(0, 1), s(2, 3)), (s(0, 2), s(1, 3))
    seq = lower_to_relaxation(m1, H1, start, end, Solver().solve)
    assert seq.steps == (ExchangeStep(0, 1, 0, 2), ExchangeStep(0, 1, 1, 0))
    assert validate_sequence(m1, seq, end, relaxed_validator(m1, H1)).ok
    with pytest.raises(UnequalUnionError):
        lower_to_relaxation(m1, H1, start, (s(0, 2), s(0, 3)), Solver().solve)


def test_trivial(fano):
    tup = (fano.bases[0], fano.bases[5])
    assert len(solve(fano, tup, tup)) == 0
    assert len(solve(fano, tup[:1], tup[:1])) == 0


def test_m1(m1):
    start, end = (s(0, 2), s(1, 3)), (s(0, 3), s(1, 2))
    seq = solve(m1, start, end)
    assert validate_sequence(m1, seq, end).ok
    seq = solve_degree2(m1, H1, start, end)
    assert validate_sequence(m1, seq, end).ok
    seq = solve(m1, start, (s(1, 3), s(0, 2)))
    assert validate_sequence(m1, seq, (s(1, 3), s(0, 2))).ok


def test_invalid(m1, u24):
    with pytest.raises(UnequalUnionError):
        solve(m1, (s(0, 2), s(1, 3)), (s(0, 2), s(1, 2)))
    with pytest.raises(NotABasisError):
        solve(m1, (s(0, 1), s(2, 3)), (s(0, 2), s(1, 3)))
    with pytest.raises(PreconditionError):
        solve_degree2(m1, H1, (s(0, 2), s(1, 3), s(2, 3)), (s(0, 2), s(1, 3), s(2, 3)))


def test_non_paving():
    non_paving = Matroid(3, 2, [s(0, 1)])
    tup = (s(0, 1),)
    with pytest.raises(NotPavingError):
        solve(non_paving, tup, tup)
    with TemporaryConfig() as cfg:
        cfg.solver.non_paving_action = "ignore"
        assert len(solve(non_paving, tup, tup)) == 0


def test_memo(m1):
    solver = Solver()
    start, end = (s(0, 2), s(1, 3)), (s(1, 3), s(0, 2))
    first = solver.solve(m1, start, end)
    assert (m1, start, end) in solver.memo
    assert solver.solve(m1, start, end) is first
    with TemporaryConfig() as cfg:
        cfg.solver.memoize = False
        fresh = Solver()
        fresh.solve(m1, start, end)
        assert not fresh.memo


def _all_pairs(matroid, n):
    seen = set()
    for bases in product(matroid.bases, repeat=n):
        fiber = enumerate_fiber(matroid, multiset_union(bases), n)
        key = fiber[0]
        if key in seen:
            continue
        seen.add(key)
        for start in fiber:
            for end in fiber:
                yield start, end


@pytest.mark.parametrize("name", ["u24", "m1", "m2"])
def test_exhaustive_degree2(name, request):
    matroid = request.getfixturevalue(name)
    solver = Solver()
    for start, end in _all_pairs(matroid, 2):
        assert validate_sequence(matroid, solver.solve(matroid, start, end), end).ok


@pytest.mark.slow
@pytest.mark.parametrize("name", ["fano", "nonfano"])
def test_exhaustive_degree2_slow(name, request):
    matroid = request.getfixturevalue(name)
    solver = Solver()
    for start, end in _all_pairs(matroid, 2):
        assert validate_sequence(matroid, solver.solve(matroid, start, end), end).ok


@pytest.mark.slow
def test_exhaustive_m1_degree4(m1):
    solver = Solver()
    for start, end in _all_pairs(m1, 4):
        assert validate_sequence(m1, solver.solve(m1, start, end), end).ok


@pytest.mark.parametrize("name,degree", [("m2", 3), ("fano", 3), ("m1", 3)])
def test_seeded_campaign(name, degree, request):
    matroid = request.getfixturevalue(name)
    rng = np.random.default_rng(0x5eed)
    solver = Solver()
    for _ in range(20):
        start = tuple(matroid.bases[int(i)] for i in rng.integers(len(matroid.bases), size=degree))
        fiber = enumerate_fiber(matroid, multiset_union(start), degree)
        end = fiber[int(rng.integers(len(fiber)))]
        assert validate_sequence(matroid, solver.solve(matroid, start, end), end).ok


@pytest.mark.slow
@pytest.mark.parametrize("name,degree", [("m2", 3), ("fano", 3), ("fano", 4)])
def test_seeded_campaign_slow(name, degree, request):
    matroid = request.getfixturevalue(name)
    rng = np.random.default_rng(1000)
    solver = Solver()
    for _ in range(1000 if degree == 3 else 100):
        start = tuple(matroid.bases[int(i)] for i in rng.integers(len(matroid.bases), size=degree))
        fiber = enumerate_fiber(matroid, multiset_union(start), degree)
        end = fiber[int(rng.integers(len(fiber)))]
        assert validate_sequence(matroid, solver.solve(matroid, start, end), end).ok


H8 = from_elements(range(5))

REDUCE_INSTANCES = [
    (SpliceCase.ReducePartnerLight, (s(0, 1, 2, 3), s(0, 1, 4, 5), s(0, 5, 6, 7)), (0, 1, 3, 4)),
    (SpliceCase.ReduceDetour, (s(0, 1, 2, 3), s(0, 1, 2, 5), s(0, 1, 3, 6), s(4, 5, 6, 7)), (1, 2, 2, 3)),
    (SpliceCase.ReduceBystanderBases, (s(0, 1, 2, 3), s(0, 1, 2, 5), s(3, 4, 6, 7)), (1, 2, 0, 6)),
    (SpliceCase.ReduceBystanderMixed, (s(0, 1, 2, 3), s(0, 1, 2, 4), s(3, 5, 6, 7)), (1, 2, 4, 5)),
    (SpliceCase.ReduceBystanderType0, (s(0, 1, 2, 3), s(0, 1, 2, 4), s(3, 5, 6, 7)), (1, 2, 4, 3)),
]

ELIMINATE_INSTANCES = [
    (SpliceCase.EliminateMerge, (s(0, 1, 2, 5), s(0, 1, 3, 4)), ((0, 1, 5, 3), (0, 1, 2, 5))),
    (SpliceCase.EliminateOneSideType0, (s(0, 1, 2, 5), s(1, 2, 3, 4), s(3, 4, 6, 7)), ((0, 1, 5, 3), (0, 2, 0, 6))),
    (SpliceCase.EliminateBothSidesType0, (s(0, 1, 2, 5), s(1, 2, 3, 4), s(2, 3, 4, 6)), ((0, 1, 5, 3), (0, 2, 0, 6))),
]


def _sequence(start, *steps):
    return ExchangeSequence(tuple(start), tuple(ExchangeStep(*step) for step in steps))


def _pair_sequence():
    """Pairs in the relaxation of the wide matroid with type 0 entries at indices 1 and 2 of position 0."""
    return _sequence((s(0, 1, 2, 5), s(3, 4, 6, 7)), (0, 1, 5, 3), (0, 1, 2, 4), (0, 1, 0, 6))


def _separated(indices):
    return all(second - first >= 2 for first, second in zip(indices, indices[1:]))


@pytest.mark.parametrize("case,start,step", REDUCE_INSTANCES, ids=[str(i[0]) for i in REDUCE_INSTANCES])
def test_reduce_cases(wide, case, start, step):
    ctx = StarContext(wide, H8, Solver().solve)
    seq = _sequence(start, step)
    state = LiftState.from_sequence(seq, H8)
    assert state.h_set(0) == [0, 1]
    with local(ProvenanceContext()) as provenance:
        reduce_consecutive(state, ctx, 0)
    assert provenance.counts == {case: 1}
    assert _separated(state.h_set(0))
    assert state.r_set() <= LiftState.from_sequence(seq, H8).r_set()
    assert validate_sequence(wide, state.sequence(), seq.end, relaxed_validator(wide, H8)).ok


@pytest.mark.parametrize("case,start,steps", ELIMINATE_INSTANCES, ids=[str(i[0]) for i in ELIMINATE_INSTANCES])
def test_eliminate_cases(wide, case, start, steps):
    ctx = StarContext(wide, H8, Solver().solve)
    seq = _sequence(start, *steps)
    state = LiftState.from_sequence(seq, H8)
    assert state.h_set(0) == [1]
    with local(ProvenanceContext()) as provenance:
        eliminate_H1(state, ctx, 0)
    assert provenance.counts == {case: 1}
    assert state.h_set(0) == []
    assert validate_sequence(wide, state.sequence(), seq.end, relaxed_validator(wide, H8)).ok


def test_bystander_type0_stays_relaxed(wide):
    ctx = StarContext(wide, H8, Solver().solve)
    seq = _sequence((s(0, 1, 2, 3), s(0, 1, 2, 4), s(3, 5, 6, 7)), (1, 2, 4, 3))
    state = LiftState.from_sequence(seq, H8)
    reduce_consecutive(state, ctx, 0)
    assert state.h_set(0) == [0, len(state.steps)]
    assert all(type_of(tup[2], H8) >= 2 for tup in state.tuples)


def test_lift_degree2(wide):
    seq = _pair_sequence()
    with local(ProvenanceContext()) as provenance:
        lifted = lift_degree2(wide, H8, seq)
    assert provenance.counts == {SpliceCase.Lift2Type0Pair: 1, SpliceCase.Lift2Star: 2}
    assert lifted.start == seq.start
    assert validate_sequence(wide, lifted, seq.end).ok
    with pytest.raises(PreconditionError):
        lift_degree2(wide, H8, stacked_type0())


def _construct_every_case(m2, wide):
    lift_sequence(m2, H2, stacked_type0())
    lift_degree2(wide, H8, _pair_sequence())
    for _, start, step in REDUCE_INSTANCES:
        state = LiftState.from_sequence(_sequence(start, step), H8)
        reduce_consecutive(state, StarContext(wide, H8, Solver().solve), 0)
    for _, start, steps in ELIMINATE_INSTANCES:
        state = LiftState.from_sequence(_sequence(start, *steps), H8)
        eliminate_H1(state, StarContext(wide, H8, Solver().solve), 0)


def test_every_case_constructed(m2, wide):
    with local(ProvenanceContext()) as provenance:
        _construct_every_case(m2, wide)
    assert set(provenance.counts) == set(SpliceCase)


@pytest.mark.slow
def test_case_coverage_campaign(m2, fano, wide):
    report = CrossCheckReport()
    for matroid, degree, seed in ((m2, 3, 1), (m2, 4, 2), (fano, 3, 3), (wide, 3, 4)):
        part = cross_check(matroid, random_pairs(degree, seed), budget=100)
        assert part.disagreements == 0
        report.instances += part.instances
        report.counts.update(part.counts)
    with local(ProvenanceContext()) as provenance:
        _construct_every_case(m2, wide)
    report.counts.update(provenance.counts)
    assert case_coverage(report, list(SpliceCase)) == []


def _relaxed_pairs(matroid, h, degree, rng, count):
    relaxed = relax(matroid, h)
    bases = relaxed.bases
    for _ in range(count):
        start = tuple(bases[int(i)] for i in rng.integers(len(bases), size=degree))
        fiber = enumerate_fiber(relaxed, multiset_union(start), degree)
        yield start, fiber[int(rng.integers(len(fiber)))]


@pytest.mark.slow
@pytest.mark.parametrize("name", list_matroids())
def test_lower_every_hyperplane(name):
    matroid = get_matroid(name)
    rng = np.random.default_rng(0x10)
    solver = Solver()
    for h in stressed_hyperplanes(matroid):
        relaxed = relaxed_validator(matroid, h)
        for degree in (2, 3):
            for start, end in _relaxed_pairs(matroid, h, degree, rng, 20):
                seq = lower_to_relaxation(matroid, h, start, end, solver.solve)
                assert validate_sequence(matroid, seq, end, relaxed).ok


@pytest.mark.slow
@pytest.mark.parametrize("name,degree", [("m2", 3), ("fano", 3), ("wide", 3)])
def test_certificates_reproducible(name, degree, request):
    matroid = request.getfixturevalue(name)
    first, second = Solver(), Solver()
    for start, end in islice(random_pairs(degree, 99)(matroid), 100):
        assert format_sequence(first.solve(matroid, start, end)) == format_sequence(second.solve(matroid, start, end))


@pytest.mark.slow
def test_random_paving_campaign():
    rng = np.random.default_rng(200)
    solver = Solver()
    for seed in range(200):
        matroid = make_random_paving(6 + seed % 3, 3, 1 + seed % 2, seed)
        degree = 2 + seed % 2
        start = tuple(matroid.bases[int(i)] for i in rng.integers(len(matroid.bases), size=degree))
        fiber = enumerate_fiber(matroid, multiset_union(start), degree)
        end = fiber[int(rng.integers(len(fiber)))]
        assert validate_sequence(matroid, solver.solve(matroid, start, end), end).ok
