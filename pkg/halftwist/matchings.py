# Copyright the halftwist authors
# Licensed under the MIT license

"""
Crossingless matchings of 2n boundary points, the basis of the skein module of
the disk, and the action of the Temperley–Lieb generators on them.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import DomainError
from .types import NoncrossingMatching


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _matchings(points: tuple[int, ...]) -> list[list[tuple[int, int]]]:
    if not points:
        return [[]]
    first = points[0]
    result = []
    # first pairs with a point leaving an even number of points inside the chord
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1 :]
        for left in _matchings(inside):
            for right in _matchings(outside):
                result.append([(first, points[k]), *left, *right])
    return result


@lru_cache(maxsize=None)
def enumerate_matchings(n: int) -> tuple[NoncrossingMatching, ...]:
    """
    All crossingless perfect matchings of 2n points, ordered lexicographically
    by partner array. n = 0 gives the single empty matching.

    For n = 2 this puts D₁ = {(1,2),(3,4)} before D₂ = {(1,4),(2,3)}. The order
    is forced by the displayed generator matrices: ρ(σ₁) has first column
    (-A³, 0)ᵀ, so σ₁ must close a loop on the first basis element, which
    requires partner(1) = 2 there.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    found = []
    for pairs in _matchings(tuple(range(2 * n))):
        partner = [0] * (2 * n)
        for a, b in pairs:
            partner[a], partner[b] = b, a
        found.append(tuple(partner))
    return tuple(NoncrossingMatching(p) for p in sorted(found))


@lru_cache(maxsize=None)
def basis_index(n: int) -> dict[NoncrossingMatching, int]:
    return {m: i for i, m in enumerate(enumerate_matchings(n))}


def tl_generator_action(i: int, matching: NoncrossingMatching) -> tuple[NoncrossingMatching, int]:
    """
    Compose the cap–cup diagram E_i (1-based i) with a matching.

    Returns the resulting matching and the number of closed loops (0 or 1);
    the caller weighs each loop by δ = -A² - A⁻² in its own scalar ring.
    """
    size = len(matching.partner)
    if not 1 <= i <= size - 1:
        raise DomainError(f"strand index {i} outside 1..{size - 1}")
    a, b = i - 1, i
    partner = list(matching.partner)
    if partner[a] == b:
        return matching, 1
    pa, pb = partner[a], partner[b]
    partner[a], partner[b] = b, a
    partner[pa], partner[pb] = pb, pa
    return NoncrossingMatching(tuple(partner)), 0


def side_by_side(n: int) -> NoncrossingMatching:
    """{(1,2),(3,4),...}."""
    return NoncrossingMatching(tuple(i + 1 if i % 2 == 0 else i - 1 for i in range(2 * n)))
