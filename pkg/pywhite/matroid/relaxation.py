"""
Provides stressed hyperplanes and their relaxation.

A hyperplane ``H`` of a rank ``r`` matroid is stressed if every ``r``-subset of ``H`` is a circuit.
Relaxing a stressed hyperplane of size at least ``r`` declares all of its ``r``-subsets to be bases,
which again gives a matroid. Repeated relaxation turns every paving matroid into the uniform one.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple, Union, TextIO

from public import public

from ..misc.utils import write_text
from .elements import ElementSet, size, subsets_of_size, contains, format_set, iter_elements
from .error import RelaxationError, raise_non_paving
from .matroid import Matroid

log = logging.getLogger(__name__)


def _is_hyperplane(matroid: Matroid, h: ElementSet) -> bool:
    return matroid.rank(h) == matroid.r - 1 and matroid.closure(h) == h


def _is_circuit(matroid: Matroid, s: ElementSet) -> bool:
    if matroid.is_independent(s):
        return False
    return all(matroid.is_independent(s & ~(1 << e)) for e in iter_elements(s))


@public
def is_stressed(matroid: Matroid, h: ElementSet) -> bool:
    """
    Decide whether a hyperplane is stressed.

    :param matroid: The matroid.
    :param h: A hyperplane of ``matroid``.
    :return: Whether every ``r``-subset of ``h`` is a circuit, vacuously true when ``|h| < r``.
    :raises RelaxationError: If ``h`` is not a hyperplane.
    """
    if not _is_hyperplane(matroid, h):
        raise RelaxationError(f"{{{format_set(h)}}} is not a hyperplane.")
    return all(_is_circuit(matroid, s) for s in subsets_of_size(h, matroid.r))


@public
def relax(matroid: Matroid, h: ElementSet) -> Matroid:
    """
    Relax a stressed hyperplane.

    :param matroid: The matroid.
    :param h: A stressed hyperplane with at least ``r`` elements.
    :return: The matroid whose bases are the bases of ``matroid`` together with all ``r``-subsets of ``h``.
    """
    if not is_stressed(matroid, h):
        raise RelaxationError(f"Hyperplane {{{format_set(h)}}} is not stressed.")
    if size(h) < matroid.r:
        raise RelaxationError(f"Hyperplane {{{format_set(h)}}} has fewer than {matroid.r} elements.")
    return Matroid(matroid.n, matroid.r, matroid.bases + tuple(subsets_of_size(h, matroid.r)))


@public
def stressed_hyperplanes(matroid: Matroid) -> List[ElementSet]:
    """All stressed hyperplanes with at least ``r`` elements, sorted by bit pattern."""
    return [h for h in matroid.hyperplanes() if size(h) >= matroid.r and is_stressed(matroid, h)]


@public
def type_of(s: ElementSet, h: ElementSet) -> int:
    """The type ``|s - h|`` of ``s`` with respect to ``h``."""
    return size(s & ~h)


@public
def in_B_of(h: ElementSet, x: int, s: ElementSet) -> bool:
    """
    Whether ``s`` consists of ``x`` outside of ``h`` and otherwise of elements of ``h``.

    Such a set is a basis whenever ``h`` is a stressed hyperplane of size at least ``r``.
    """
    return contains(s, x) and not contains(h, x) and not (s & ~(1 << x) & ~h)


@public
@dataclass
class RelaxationTrace:
    """A sequence of relaxations from a matroid to the uniform matroid."""

    origin: Matroid
    steps: List[Tuple[ElementSet, Matroid]] = field(default_factory=list)
    """Pairs of the relaxed hyperplane and the resulting matroid."""

    @property
    def final(self) -> Matroid:
        return self.steps[-1][1] if self.steps else self.origin

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


@public
def relaxation_trace(matroid: Matroid) -> RelaxationTrace:
    """
    Relax a paving matroid until it is uniform.

    Always relaxes the stressed hyperplane with the smallest bit pattern. Each matroid on the way
    is checked to be paving, a failure is handled according to :py:attr:`SolverConfig.non_paving_action`.

    :param matroid: The paving matroid.
    :return: The trace.
    :raises RelaxationError: If a non-uniform matroid on the way has no stressed hyperplane of size at least ``r``.
    """
    if not matroid.is_paving():
        raise_non_paving(f"{matroid} is not paving.")
    trace = RelaxationTrace(matroid)
    current = matroid
    while not current.is_uniform():
        hyperplanes = stressed_hyperplanes(current)
        if not hyperplanes:
            raise RelaxationError(f"{current} is not uniform and has no stressed hyperplane to relax.")
        h = hyperplanes[0]
        current = relax(current, h)
        log.debug("Relaxed {%s}, %d bases.", format_set(h), len(current.bases))
        if not current.is_paving():
            raise_non_paving(f"Relaxation at {{{format_set(h)}}} gives a non-paving {current}.")
        trace.steps.append((h, current))
    return trace


@public
def format_trace(trace: RelaxationTrace) -> str:
    """Format a trace, one ``relax H=<set> bases=<count>`` line per step."""
    return "".join(f"relax H={format_set(h)} bases={len(m.bases)}\n" for h, m in trace.steps)


@public
def dump_trace(trace: RelaxationTrace, file: Union[str, Path, TextIO]) -> None:
    write_text(file, format_trace(trace))
