"""
Provides the harness comparing the solver against the brute-force oracle.

Every sampled instance is solved, its certificate validated and its length compared with a geodesic
of the fiber graph. For degree two the geodesic is also compared with ``min(r, r - |B_1 & B_1'| + 1)``,
a known upper bound on the shortest length for split and paving matroids. Any mismatch is a finding.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

import numpy as np
from public import public

from ..matroid.elements import size
from ..matroid.error import PreconditionError, InternalError
from ..matroid.matroid import Matroid
from ..white.context import ProvenanceContext, SpliceCase, local
from ..white.sequence import BasisTuple, validate_sequence, multiset_union
from ..white.solver import Solver
from .fiber import enumerate_fiber, shortest_sequence
from .verify import fiber_representatives

log = logging.getLogger(__name__)

Instance = Tuple[BasisTuple, BasisTuple]
Sampler = Callable[[Matroid], Iterable[Instance]]
"""Produces the instances to check for a matroid."""

public(Instance=Instance, Sampler=Sampler)


@public
def length_bound(start: BasisTuple, end: BasisTuple) -> int:
    """``min(r, r - |B_1 & B_1'| + 1)`` for the first entries of two degree 2 tuples."""
    r = size(start[0])
    return min(r, r - size(start[0] & end[0]) + 1)


@public
def all_pairs(n: int) -> Sampler:
    """All ordered pairs of distinct tuples of degree ``n`` from the same fiber, fiber by fiber."""

    def sampler(matroid: Matroid) -> Iterator[Instance]:
        for representative in fiber_representatives(matroid, n):
            fiber = enumerate_fiber(matroid, multiset_union(representative), n)
            for start in fiber:
                for end in fiber:
                    if start != end:
                        yield start, end

    return sampler


@public
def random_pairs(n: int, seed: int) -> Sampler:
    """Seeded random pairs of degree ``n``: random bases for the start, a random tuple of its fiber for the end."""

    def sampler(matroid: Matroid) -> Iterator[Instance]:
        rng = np.random.default_rng(seed)
        bases = matroid.bases
        while True:
            start = tuple(bases[int(i)] for i in rng.integers(len(bases), size=n))
            fiber = enumerate_fiber(matroid, multiset_union(start), n)
            yield start, fiber[int(rng.integers(len(fiber)))]

    return sampler


@public
@dataclass
class CrossCheckReport:
    """The outcome of a cross-check campaign."""

    instances: int = 0
    findings: List[str] = field(default_factory=list)
    """Descriptions of every disagreement, empty when solver and oracle agree."""
    counts: Counter = field(default_factory=Counter)
    """How often each splice case was applied."""
    longest: int = 0

    @property
    def disagreements(self) -> int:
        return len(self.findings)

    def __str__(self):
        lines = [f"instances={self.instances} disagreements={self.disagreements} longest={self.longest}"]
        lines.extend(f"case {case} applied={count}" for case, count in sorted(self.counts.items(), key=lambda i: i[0].value))
        lines.extend(f"finding {finding}" for finding in self.findings)
        return "\n".join(lines) + "\n"


@public
def cross_check(
        matroid: Matroid, sampler: Sampler, budget: Optional[int] = None, solver: Optional[Solver] = None
) -> CrossCheckReport:
    """
    Solve sampled instances and compare every certificate with the oracle.

    :param matroid: The paving matroid.
    :param sampler: The instances, see :py:func:`all_pairs` and :py:func:`random_pairs`.
    :param budget: The maximal number of instances, all the sampler gives if ``None``.
    :param solver: The solver, a fresh one if not given.
    :return: The report.
    """
    if solver is None:
        solver = Solver()
    report = CrossCheckReport()
    for start, end in islice(sampler(matroid), budget):
        report.instances += 1
        label = f"{start} -> {end}"
        try:
            with local(ProvenanceContext()) as ctx:
                seq = solver.solve(matroid, start, end)
            report.counts.update(ctx.counts)
        except (PreconditionError, InternalError) as e:
            report.findings.append(f"{label}: solver failed, {e}")
            continue
        check = validate_sequence(matroid, seq, end)
        if not check.ok:
            report.findings.append(f"{label}: certificate invalid, {check}")
            continue
        report.longest = max(report.longest, len(seq))
        try:
            geodesic = shortest_sequence(matroid, start, end)
        except (PreconditionError, InternalError) as e:
            report.findings.append(f"{label}: oracle failed, {e}")
            continue
        if len(seq) < len(geodesic):
            report.findings.append(f"{label}: certificate of length {len(seq)} beats geodesic of length {len(geodesic)}")
        if len(start) == 2 and len(geodesic) > length_bound(start, end):
            report.findings.append(f"{label}: geodesic of length {len(geodesic)} exceeds {length_bound(start, end)}")
    log.info("Cross-checked %d instances on %s, %d disagreements.", report.instances, matroid, report.disagreements)
    return report


@public
def case_coverage(report: CrossCheckReport, cases: Iterable[SpliceCase]) -> List[SpliceCase]:
    """The cases among ``cases`` that were never applied."""
    return [case for case in cases if not report.counts[case]]
