"""
Provides generators of uniform and paving matroids.

A family of subsets of size at least ``r`` whose pairwise intersections have at most ``r - 2`` elements
defines a paving matroid of rank ``r``: its bases are the ``r``-sets not contained in any member of the family,
and the members are exactly its hyperplanes of size at least ``r``.
"""
import logging
from itertools import combinations
from typing import Sequence, List

import numpy as np
from public import public

from .elements import ElementSet, full_set, size, format_set, from_elements
from .error import PreconditionError
from .matroid import Matroid, uniform_bases

log = logging.getLogger(__name__)

DEFAULT_RETRY_BUDGET = 1000
"""The number of candidate hyperplanes drawn before a generator gives up."""
RESTART_AFTER = 50
"""The number of consecutive rejected candidates after which the family is discarded and drawn anew."""


@public
def make_uniform(n: int, r: int) -> Matroid:
    """The uniform matroid ``U_{r,n}``."""
    return Matroid(n, r, uniform_bases(n, r))


def _check_family(n: int, r: int, hyperplanes: Sequence[ElementSet]) -> None:
    ground = full_set(n)
    for h in hyperplanes:
        if h & ~ground:
            raise PreconditionError(f"Hyperplane {{{format_set(h)}}} leaves the ground set.")
        if size(h) < r:
            raise PreconditionError(f"Hyperplane {{{format_set(h)}}} has fewer than {r} elements.")
        if h == ground:
            raise PreconditionError("A hyperplane cannot be the whole ground set.")
    for h1, h2 in combinations(hyperplanes, 2):
        if size(h1 & h2) > r - 2:
            raise PreconditionError(
                f"Hyperplanes {{{format_set(h1)}}} and {{{format_set(h2)}}} share more than {r - 2} elements."
            )


@public
def make_paving_from_hyperplanes(n: int, r: int, hyperplanes: Sequence[ElementSet]) -> Matroid:
    """
    Build the paving matroid with the given large hyperplanes.

    :param n: The size of the ground set.
    :param r: The rank.
    :param hyperplanes: Subsets of size at least ``r`` with pairwise intersections of size at most ``r - 2``.
    :return: The matroid whose bases are the ``r``-sets contained in none of the hyperplanes.
    """
    _check_family(n, r, hyperplanes)
    bases = [s for s in uniform_bases(n, r) if not any(s & h == s for h in hyperplanes)]
    return Matroid(n, r, bases)


def _draw_family(n: int, r: int, k: int, seed: int, sizes: Sequence[int], budget: int) -> List[ElementSet]:
    if not sizes or sizes[0] >= n:
        raise PreconditionError(f"No proper hyperplane of size {r} fits into {n} elements.")
    rng = np.random.default_rng(seed)
    family: List[ElementSet] = []
    attempts = 0
    rejected = 0
    restarts = 0
    while len(family) < k:
        if attempts >= budget:
            raise PreconditionError(
                f"Could not place {k} hyperplanes in {budget} attempts, {restarts} restarts."
            )
        if rejected >= RESTART_AFTER:
            log.debug("Restarting after %d rejected candidates with %d of %d placed.", rejected, len(family), k)
            family = []
            rejected = 0
            restarts += 1
        attempts += 1
        h_size = int(rng.choice(sizes))
        candidate = from_elements(int(e) for e in rng.choice(n, size=h_size, replace=False))
        if all(size(candidate & other) <= r - 2 for other in family):
            family.append(candidate)
            rejected = 0
        else:
            rejected += 1
    log.debug("Placed %d hyperplanes after %d attempts and %d restarts.", k, attempts, restarts)
    return family


@public
def make_random_paving(n: int, r: int, k: int, seed: int, budget: int = DEFAULT_RETRY_BUDGET) -> Matroid:
    """
    Draw a random paving matroid with ``k`` hyperplanes of size at least ``r``.

    Candidate hyperplanes of size ``r`` or ``r + 1`` are drawn from a seeded generator and kept whenever
    they meet every kept hyperplane in at most ``r - 2`` elements. After :py:data:`RESTART_AFTER` rejected
    candidates in a row the kept ones are dropped and the family is drawn again.

    :param n: The size of the ground set.
    :param r: The rank.
    :param k: The number of hyperplanes of size at least ``r``.
    :param seed: The seed.
    :param budget: The total number of candidates to draw, over all restarts, before giving up.
    :return: The matroid.
    :raises PreconditionError: If the budget runs out.
    """
    sizes = [s for s in (r, r + 1) if s < n]
    return make_paving_from_hyperplanes(n, r, _draw_family(n, r, k, seed, sizes, budget))


@public
def make_random_sparse_paving(n: int, r: int, k: int, seed: int, budget: int = DEFAULT_RETRY_BUDGET) -> Matroid:
    """
    Draw a random sparse paving matroid with ``k`` circuit-hyperplanes.

    :param n: The size of the ground set.
    :param r: The rank.
    :param k: The number of circuit-hyperplanes.
    :param seed: The seed.
    :param budget: The total number of candidates to draw, over all restarts, before giving up.
    :return: The matroid.
    """
    sizes = [r] if r < n else []
    return make_paving_from_hyperplanes(n, r, _draw_family(n, r, k, seed, sizes, budget))
