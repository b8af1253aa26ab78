"""
Provides fibers of ordered tuples of bases and their exchange graphs.

The fiber of a multiset ``U`` in degree ``n`` consists of all ordered ``n``-tuples of bases whose multiset union
is ``U``. Two tuples of a fiber are adjacent when one symmetric exchange of two entries turns one into the other.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Dict, Iterator, Tuple, Optional

import networkx as nx
from public import public

from ..matroid.elements import ElementSet, iter_elements, swap, format_set, smallest
from ..matroid.error import FiberLimitError, DisconnectedFiberError, UnequalUnionError, NotABasisError
from ..matroid.matroid import Matroid
from ..misc.cfg import getconfig
from ..white.sequence import BasisTuple, ExchangeStep, ExchangeSequence, multiset_union

log = logging.getLogger(__name__)


def _fits(basis: ElementSet, remaining: Counter) -> bool:
    return all(remaining[e] > 0 for e in iter_elements(basis))


@public
def enumerate_fiber(matroid: Matroid, union: Counter, n: int, cap: Optional[int] = None) -> List[BasisTuple]:
    """
    Enumerate all ordered tuples of bases with a given multiset union.

    :param matroid: The matroid.
    :param union: The multiset union, as element multiplicities.
    :param n: The degree.
    :param cap: The maximal number of tuples, :py:attr:`OracleConfig.fiber_cap` if not given.
    :return: The tuples, in lexicographic order of basis indices.
    :raises FiberLimitError: If the fiber has more tuples than ``cap``.
    """
    if cap is None:
        cap = getconfig().oracle.fiber_cap
    result: List[BasisTuple] = []
    remaining = Counter(union)
    prefix: List[ElementSet] = []

    def extend():
        if len(prefix) == n:
            if not +remaining:
                if len(result) >= cap:
                    raise FiberLimitError(f"Fiber has more than {cap} tuples.")
                result.append(tuple(prefix))
            return
        for basis in matroid.bases:
            if not _fits(basis, remaining):
                continue
            for e in iter_elements(basis):
                remaining[e] -= 1
            prefix.append(basis)
            extend()
            prefix.pop()
            for e in iter_elements(basis):
                remaining[e] += 1

    extend()
    return result


@public
def neighbours(matroid: Matroid, tup: BasisTuple) -> Iterator[Tuple[BasisTuple, ExchangeStep]]:
    """All tuples one symmetric exchange away from ``tup`` together with the step leading there."""
    for i in range(len(tup)):
        for j in range(i + 1, len(tup)):
            b_i, b_j = tup[i], tup[j]
            for x in iter_elements(b_i & ~b_j):
                for y in iter_elements(b_j & ~b_i):
                    new_i, new_j = swap(b_i, x, y), swap(b_j, y, x)
                    if matroid.is_basis(new_i) and matroid.is_basis(new_j):
                        following = list(tup)
                        following[i], following[j] = new_i, new_j
                        yield tuple(following), ExchangeStep(i, j, x, y)


@public
@dataclass
class FiberGraph:
    """The exchange graph of one fiber."""

    matroid: Matroid
    degree: int
    graph: nx.Graph
    """Nodes are the tuples of the fiber, edges are single symmetric exchanges."""

    @classmethod
    def build(cls, matroid: Matroid, tup: BasisTuple, cap: Optional[int] = None) -> "FiberGraph":
        """Build the exchange graph of the fiber containing ``tup``, see :py:func:`enumerate_fiber` for ``cap``."""
        tup = tuple(tup)
        for entry in tup:
            if not matroid.is_basis(entry):
                raise NotABasisError(f"{{{format_set(entry)}}} is not a basis.")
        graph = nx.Graph()
        nodes = enumerate_fiber(matroid, multiset_union(tup), len(tup), cap)
        graph.add_nodes_from(nodes)
        for node in nodes:
            for following, _ in neighbours(matroid, node):
                graph.add_edge(node, following)
        log.debug("Fiber of %s has %d tuples and %d exchanges.", matroid, graph.number_of_nodes(), graph.number_of_edges())
        return cls(matroid, len(tup), graph)

    def __len__(self):
        return self.graph.number_of_nodes()

    def is_connected(self) -> bool:
        return nx.is_connected(self.graph)

    def diameter(self) -> int:
        """The diameter of a connected fiber."""
        if len(self) == 1:
            return 0
        return nx.diameter(self.graph)


@public
def fiber_bfs(matroid: Matroid, tup: BasisTuple) -> Dict[BasisTuple, int]:
    """
    Breadth-first search from ``tup`` over its fiber.

    :param matroid: The matroid.
    :param tup: A tuple of bases.
    :return: The exchange distance from ``tup`` of every reachable tuple of the fiber.
    """
    fiber = FiberGraph.build(matroid, tup)
    return dict(nx.single_source_shortest_path_length(fiber.graph, tuple(tup)))


def _step_between(tup: BasisTuple, following: BasisTuple) -> ExchangeStep:
    i, j = (position for position in range(len(tup)) if tup[position] != following[position])
    return ExchangeStep(i, j, smallest(tup[i] & ~following[i]), smallest(following[i] & ~tup[i]))


@public
def shortest_sequence(matroid: Matroid, start: BasisTuple, end: BasisTuple) -> ExchangeSequence:
    """
    A shortest exchange sequence between two tuples of bases.

    :param matroid: The matroid.
    :param start: The start tuple.
    :param end: The end tuple, with the same multiset union.
    :return: A geodesic of the fiber graph.
    :raises DisconnectedFiberError: If no exchange sequence exists.
    """
    start, end = tuple(start), tuple(end)
    if len(start) != len(end) or multiset_union(start) != multiset_union(end):
        raise UnequalUnionError("Tuples do not have the same multiset union.")
    fiber = FiberGraph.build(matroid, start)
    if end not in fiber.graph:
        raise NotABasisError("The end tuple is not a tuple of bases.")
    try:
        path = nx.shortest_path(fiber.graph, start, end)
    except nx.NetworkXNoPath:
        raise DisconnectedFiberError(f"No exchange sequence connects the tuples in {matroid}.")
    return ExchangeSequence(start, tuple(_step_between(a, b) for a, b in zip(path, path[1:])))
