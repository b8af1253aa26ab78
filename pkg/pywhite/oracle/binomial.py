"""
Provides the quadric binomials of the toric ideal of a matroid.

Each basis ``B`` gets a variable ``y_B`` and the toric map sends it to the monomial of its elements.
Whenever one symmetric exchange turns the pair ``{A, B}`` into ``{A', B'}``, the binomial
``y_A y_B - y_A' y_B'`` lies in the kernel of that map.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import List, Union, TextIO

from public import public
from sympy import symbols, Mul, expand

from ..matroid.elements import ElementSet, iter_elements, swap, format_set
from ..matroid.matroid import Matroid
from ..misc.utils import write_text


@public
@dataclass(frozen=True)
class BinomialRelation:
    """The relation ``y_a y_b - y_a2 y_b2``, sides stored as sorted pairs."""

    a: ElementSet
    b: ElementSet
    a2: ElementSet
    b2: ElementSet

    @property
    def trivial(self) -> bool:
        return (self.a, self.b) == (self.a2, self.b2)

    def __str__(self):
        return (
            f"binomial A={format_set(self.a)} B={format_set(self.b)} "
            f"A'={format_set(self.a2)} B'={format_set(self.b2)}"
        )


def _pair(a: ElementSet, b: ElementSet):
    return (a, b) if a <= b else (b, a)


@public
def emit_quadric_binomials(matroid: Matroid) -> List[BinomialRelation]:
    """
    All relations between unordered pairs of bases related by one symmetric exchange.

    Relations are deduplicated as unordered pairs of unordered pairs. An exchange that gives back the
    same pair yields the trivial relation of that pair.

    :param matroid: The matroid.
    :return: The relations, sorted.
    """
    relations = set()
    bases = matroid.bases
    for index, a in enumerate(bases):
        for b in bases[index + 1:]:
            for x in iter_elements(a & ~b):
                for y in iter_elements(b & ~a):
                    a2, b2 = swap(a, x, y), swap(b, y, x)
                    if matroid.is_basis(a2) and matroid.is_basis(b2):
                        left, right = _pair(a, b), _pair(a2, b2)
                        first, second = (left, right) if left <= right else (right, left)
                        relations.add(BinomialRelation(*first, *second))
    return sorted(relations, key=lambda r: (r.a, r.b, r.a2, r.b2))


@public
def binomial_in_kernel(matroid: Matroid, relation: BinomialRelation) -> bool:
    """
    Check with symbolic monomials that a relation lies in the kernel of the toric map.

    :param matroid: The matroid.
    :param relation: The relation.
    :return: Whether all four sets are bases and both sides map to the same monomial.
    """
    sides = (relation.a, relation.b, relation.a2, relation.b2)
    if not all(matroid.is_basis(s) for s in sides):
        return False
    x = symbols(f"x0:{matroid.n}")

    def monomial(s: ElementSet):
        return Mul(*(x[e] for e in iter_elements(s)))

    difference = monomial(relation.a) * monomial(relation.b) - monomial(relation.a2) * monomial(relation.b2)
    return expand(difference) == 0


@public
def format_binomials(relations: List[BinomialRelation]) -> str:
    return "".join(f"{relation}\n" for relation in relations)


@public
def dump_binomials(relations: List[BinomialRelation], file: Union[str, Path, TextIO]) -> None:
    write_text(file, format_binomials(relations))
