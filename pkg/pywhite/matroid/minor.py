"""Provides deletion and contraction of explicit matroids, with a map back to the original ground set."""
from dataclasses import dataclass
from typing import Tuple

from public import public

from .elements import ElementSet, from_elements, iter_elements, format_set, size
from .error import PreconditionError
from .matroid import Matroid


@public
@dataclass(frozen=True)
class MinorMap:
    """The correspondence between the ground set of a minor and the ground set it came from."""

    kept: Tuple[int, ...]
    """The surviving elements of the original ground set, in order; element ``i`` of the minor is ``kept[i]``."""
    contracted: ElementSet
    """The contracted elements."""
    deleted: ElementSet
    """The deleted elements."""

    def project(self, s: ElementSet) -> ElementSet:
        """Map the surviving part of an original subset to the minor."""
        return from_elements(i for i, e in enumerate(self.kept) if s >> e & 1)

    def lift(self, s: ElementSet) -> ElementSet:
        """Map a subset of the minor back to the original ground set."""
        return from_elements(self.kept[i] for i in iter_elements(s))

    def lift_element(self, e: int) -> int:
        return self.kept[e]

    def lift_basis(self, s: ElementSet) -> ElementSet:
        """Map a basis of the minor to the corresponding basis of the original matroid."""
        return self.lift(s) | self.contracted


@public
def minor(matroid: Matroid, contract: ElementSet = 0, delete: ElementSet = 0) -> Tuple[Matroid, MinorMap]:
    """
    Contract and delete elements of a matroid at once.

    :param matroid: The matroid.
    :param contract: An independent set to contract.
    :param delete: A set to delete, disjoint from ``contract``, whose removal keeps the rank of the contraction.
    :return: The minor and the map back to ``matroid``.
    """
    if contract & delete:
        raise PreconditionError("Contracted and deleted sets intersect.")
    if (contract | delete) & ~matroid.ground:
        raise PreconditionError("Minor sets leave the ground set.")
    if not matroid.is_independent(contract):
        raise PreconditionError(f"Contracted set {{{format_set(contract)}}} is dependent.")
    kept = tuple(e for e in range(matroid.n) if not (contract | delete) >> e & 1)
    mapping = MinorMap(kept, contract, delete)
    bases = [
        mapping.project(basis & ~contract)
        for basis in matroid.bases
        if basis & contract == contract and not basis & delete
    ]
    if not bases:
        raise PreconditionError(f"Deleting {{{format_set(delete)}}} drops the rank.")
    return Matroid(len(kept), matroid.r - size(contract), bases), mapping


@public
def delete(matroid: Matroid, deleted: ElementSet) -> Tuple[Matroid, MinorMap]:
    """
    Delete elements of a matroid.

    :param matroid: The matroid.
    :param deleted: The elements to delete; the rest has to keep full rank.
    :return: The minor and the map back to ``matroid``.
    """
    return minor(matroid, delete=deleted)


@public
def contract(matroid: Matroid, contracted: ElementSet) -> Tuple[Matroid, MinorMap]:
    """
    Contract an independent set of a matroid.

    :param matroid: The matroid.
    :param contracted: The independent set to contract.
    :return: The minor and the map back to ``matroid``.
    """
    return minor(matroid, contract=contracted)
