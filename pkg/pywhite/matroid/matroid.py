"""Provides a matroid given by an explicit family of bases, together with its rank, closure and circuit queries."""
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, List, Tuple, FrozenSet, Optional

import numpy as np
from public import public

from .elements import (
    ElementSet,
    MAX_GROUND,
    full_set,
    size,
    iter_elements,
    subsets_of_size,
    from_elements,
    swap,
    to_array,
    popcount_array,
    format_set,
)
from .error import InvalidMatroidError, NotABasisError, PreconditionError


@public
class Matroid:
    """A matroid on the ground set ``{0, ..., n - 1}``, given by its bases."""

    n: int
    """The size of the ground set."""
    r: int
    """The rank."""
    bases: Tuple[ElementSet, ...]
    """The bases, sorted by bit pattern."""
    _basis_set: FrozenSet[ElementSet]
    _array: np.ndarray

    def __init__(self, n: int, r: int, bases: Iterable[ElementSet]):
        if n < 0 or n > MAX_GROUND:
            raise InvalidMatroidError(f"Ground set size {n} outside of [0, {MAX_GROUND}].")
        if r < 1 or r > n:
            raise InvalidMatroidError(f"Rank {r} outside of [1, {n}].")
        ground = full_set(n)
        unique = sorted(set(bases))
        if not unique:
            raise InvalidMatroidError("A matroid needs at least one basis.")
        for basis in unique:
            if basis & ~ground:
                raise InvalidMatroidError(f"Basis {{{format_set(basis)}}} leaves the ground set.")
            if size(basis) != r:
                raise InvalidMatroidError(f"Basis {{{format_set(basis)}}} does not have {r} elements.")
        self.n = n
        self.r = r
        self.bases = tuple(unique)
        self._basis_set = frozenset(unique)
        self._array = to_array(unique)

    @property
    def ground(self) -> ElementSet:
        """The ground set."""
        return full_set(self.n)

    def is_basis(self, s: ElementSet) -> bool:
        return s in self._basis_set

    def is_independent(self, s: ElementSet) -> bool:
        mask = np.uint64(s)
        return bool(np.any((self._array & mask) == mask))

    def rank(self, s: ElementSet) -> int:
        """
        Compute the rank of a subset.

        :param s: The subset.
        :return: The largest intersection of ``s`` with a basis.
        """
        return int(popcount_array(self._array & np.uint64(s)).max())

    def closure(self, s: ElementSet) -> ElementSet:
        """
        Compute the closure of a subset.

        :param s: The subset.
        :return: All elements whose addition does not increase the rank of ``s``.
        """
        rank = self.rank(s)
        result = s
        for e in iter_elements(self.ground & ~s):
            if self.rank(s | (1 << e)) == rank:
                result |= 1 << e
        return result

    def fundamental_circuit(self, basis: ElementSet, e: int) -> ElementSet:
        """
        Compute the fundamental circuit of an element with respect to a basis.

        :param basis: The basis.
        :param e: The element, not in the basis.
        :return: The unique circuit inside ``basis + e``.
        """
        if not self.is_basis(basis):
            raise NotABasisError(f"{{{format_set(basis)}}} is not a basis.")
        if basis >> e & 1:
            raise PreconditionError(f"Element {e} already lies in the basis.")
        result = 1 << e
        for c in iter_elements(basis):
            if self.is_basis(swap(basis, c, e)):
                result |= 1 << c
        return result

    def is_uniform(self) -> bool:
        return len(self.bases) == comb(self.n, self.r)

    def is_paving(self) -> bool:
        """Whether every subset of size ``r - 1`` is independent."""
        covered = set()
        for basis in self.bases:
            for e in iter_elements(basis):
                covered.add(basis & ~(1 << e))
        return len(covered) == comb(self.n, self.r - 1)

    def hyperplanes(self) -> List[ElementSet]:
        """All closed sets of rank ``r - 1``, sorted by bit pattern."""
        result = set()
        for independent in subsets_of_size(self.ground, self.r - 1):
            if self.is_independent(independent):
                result.add(self.closure(independent))
        return sorted(result)

    def circuits(self) -> List[ElementSet]:
        """All minimal dependent sets, sorted by bit pattern."""
        found: List[ElementSet] = []
        for k in range(1, self.r + 2):
            for s in subsets_of_size(self.ground, k):
                if self.is_independent(s):
                    continue
                if any(c & s == c for c in found):
                    continue
                found.append(s)
        return sorted(found)

    def circuit_hyperplanes(self) -> List[ElementSet]:
        """The hyperplanes with exactly ``r`` elements that are circuits."""
        return [h for h in self.hyperplanes() if size(h) == self.r and not self.is_independent(h)]

    def dual(self) -> "Matroid":
        ground = self.ground
        return Matroid(self.n, self.n - self.r, (ground & ~basis for basis in self.bases))

    def is_sparse_paving(self) -> bool:
        """Whether both the matroid and its dual are paving."""
        return self.is_paving() and (self.r == self.n or self.dual().is_paving())

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return False
        return self.n == other.n and self.r == other.r and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.r, self.bases))

    def __str__(self):
        return f"Matroid(n={self.n}, r={self.r}, {len(self.bases)} bases)"

    def __repr__(self):
        return f"{self.__class__.__name__}({self.n!r}, {self.r!r}, {list(self.bases)!r})"


@public
@dataclass
class ValidationReport:
    """The result of checking the basis exchange axiom."""

    violations: List[Tuple[ElementSet, ElementSet, int]] = field(default_factory=list)
    """Triples ``(A, B, a)`` with ``a`` in ``A - B`` and no ``b`` in ``B - A`` making ``A - a + b`` a basis."""

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def witness(self) -> Optional[Tuple[ElementSet, ElementSet, int]]:
        """The first violation found, if any."""
        return self.violations[0] if self.violations else None

    def __str__(self):
        if self.ok:
            return "ok"
        a_set, b_set, a = self.violations[0]
        return f"violation at A={{{format_set(a_set)}}} B={{{format_set(b_set)}}} a={a}"


@public
def validate_matroid(matroid: Matroid) -> ValidationReport:
    """
    Check the basis exchange axiom on the basis family of a matroid.

    For all bases ``A != B`` and every ``a`` in ``A - B`` there has to be a ``b`` in ``B - A``
    such that ``A - a + b`` is a basis.

    :param matroid: The matroid to check.
    :return: The report, listing all violating triples in iteration order.
    """
    report = ValidationReport()
    for a_set in matroid.bases:
        for b_set in matroid.bases:
            if a_set == b_set:
                continue
            for a in iter_elements(a_set & ~b_set):
                if not any(matroid.is_basis(swap(a_set, a, b)) for b in iter_elements(b_set & ~a_set)):
                    report.violations.append((a_set, b_set, a))
    return report


@public
def satisfies_symmetric_exchange(matroid: Matroid) -> bool:
    """
    Check the symmetric exchange property directly.

    For all bases ``A, B`` and ``a`` in ``A - B`` there has to be a ``b`` in ``B - A`` such that
    both ``A - a + b`` and ``B - b + a`` are bases.
    """
    for a_set, b_set in combinations(matroid.bases, 2):
        for first, second in ((a_set, b_set), (b_set, a_set)):
            for a in iter_elements(first & ~second):
                if not any(
                    matroid.is_basis(swap(first, a, b)) and matroid.is_basis(swap(second, b, a))
                    for b in iter_elements(second & ~first)
                ):
                    return False
    return True


@public
def uniform_bases(n: int, r: int) -> List[ElementSet]:
    """All ``r``-subsets of ``{0, ..., n - 1}``."""
    return [from_elements(c) for c in combinations(range(n), r)]
