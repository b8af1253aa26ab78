"""
Provides exhaustive verification that all fibers of a matroid are connected.

Fibers are independent of each other, with :py:attr:`OracleConfig.workers` above one they are checked
by a pool of worker processes. Workers do not see the configuration of the caller, the fiber cap is
passed to them along with the matroid.
"""
import logging
import multiprocessing as mp
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations_with_replacement
from pathlib import Path
from typing import List, Optional, Tuple, Union, TextIO

from public import public

from ..matroid.matroid import Matroid
from ..misc.cfg import getconfig
from ..misc.utils import write_text
from ..white.sequence import BasisTuple, union_key
from .fiber import FiberGraph

log = logging.getLogger(__name__)


@public
@dataclass(frozen=True)
class FiberReport:
    """The verdict on one fiber."""

    union: Tuple[Tuple[int, int], ...]
    """The multiset union, as sorted pairs of element and multiplicity."""
    size: int
    connected: bool
    diameter: Optional[int]
    """The diameter, ``None`` when the fiber is not connected."""

    def __str__(self):
        union = ",".join(",".join([str(e)] * count) for e, count in self.union)
        diameter = "-" if self.diameter is None else self.diameter
        connected = "true" if self.connected else "false"
        return f"fiber union={union} size={self.size} connected={connected} diameter={diameter}"


@public
@dataclass
class WhiteReport:
    """The verdict on all fibers of one degree."""

    degree: int
    fibers: List[FiberReport] = field(default_factory=list)
    truncated: bool = False
    """Whether the fiber cap stopped the enumeration of multiset unions."""

    @property
    def checked(self) -> int:
        return len(self.fibers)

    @property
    def all_connected(self) -> bool:
        return all(fiber.connected for fiber in self.fibers)

    @property
    def max_diameter(self) -> int:
        return max((fiber.diameter for fiber in self.fibers if fiber.diameter is not None), default=0)

    def summary(self) -> str:
        verdict = "all connected" if self.all_connected else "disconnected fibers found"
        line = f"degree={self.degree} fibers={self.checked} max_diameter={self.max_diameter}: {verdict}"
        if self.truncated:
            line += " (truncated by cap)"
        return line

    def __str__(self):
        return "".join(f"{fiber}\n" for fiber in self.fibers) + self.summary() + "\n"


def _check_fiber(matroid: Matroid, fiber_cap: int, tup: BasisTuple) -> FiberReport:
    fiber = FiberGraph.build(matroid, tup, fiber_cap)
    connected = fiber.is_connected()
    return FiberReport(union_key(tup), len(fiber), connected, fiber.diameter() if connected else None)


@public
def fiber_representatives(matroid: Matroid, n: int) -> List[BasisTuple]:
    """One tuple per fiber of degree ``n``, iterating multisets of bases as sorted lists of basis indices."""
    seen = set()
    result = []
    for indices in combinations_with_replacement(range(len(matroid.bases)), n):
        tup = tuple(matroid.bases[i] for i in indices)
        key = union_key(tup)
        if key not in seen:
            seen.add(key)
            result.append(tup)
    return result


@public
def verify_white(matroid: Matroid, n: int, cap: Optional[int] = None) -> WhiteReport:
    """
    Check that every fiber of degree ``n`` is connected.

    :param matroid: The matroid.
    :param n: The degree.
    :param cap: The maximal number of fibers to check, all if ``None``. Hitting it is recorded in the report.
    :return: The report, one line per fiber.
    """
    representatives = fiber_representatives(matroid, n)
    report = WhiteReport(n)
    if cap is not None and len(representatives) > cap:
        log.warning("Checking %d of %d fibers of degree %d.", cap, len(representatives), n)
        representatives = representatives[:cap]
        report.truncated = True
    config = getconfig().oracle
    workers = config.workers
    check = partial(_check_fiber, matroid, config.fiber_cap)
    if workers > 1:
        with mp.Pool(workers) as pool:
            report.fibers = pool.map(check, representatives)
    else:
        report.fibers = [check(tup) for tup in representatives]
    log.info("Verified %d fibers of degree %d of %s: %s.", report.checked, n, matroid, report.summary())
    return report


@public
def dump_report(report: WhiteReport, file: Union[str, Path, TextIO]) -> None:
    write_text(file, str(report))
