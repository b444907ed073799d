# Copyright the halftwist authors
# Licensed under the MIT license

"""
The representation ρ of B_2n on the Kauffman bracket skein module of the
3-ball relative to 2n boundary points.

The defining convention is ρ(σ_i) = A E_i + A⁻¹ Id, with each closed loop
weighed by δ = -A² - A⁻². Braid words act on the left: the matrix of a word is
the product of its letter matrices in written order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .errors import DomainError
from .laurent import DELTA
from .matchings import basis_index, enumerate_matchings, side_by_side, tl_generator_action
from .matrix import Matrix
from .rings import Ring, Scalar, SYMBOLIC
from .schema import record
from .types import BraidWord, NoncrossingMatching

LOG = logging.getLogger(__name__)

SUPPORTED_HALF_POINTS = 6

D1 = NoncrossingMatching.from_pairs([(1, 2), (3, 4)])
D2 = NoncrossingMatching.from_pairs([(1, 4), (2, 3)])


@dataclass(frozen=True, eq=False)
class SkeinMatrix(Matrix):
    """ρ of a braid or TL element on the skein module with 2n points."""

    n: int = 0

    @classmethod
    def wrap(cls, n: int, matrix: Matrix) -> SkeinMatrix:
        return cls(matrix.ring, matrix.rows, n)

    def as_record(self, word: BraidWord | None = None) -> dict[str, Any]:
        return record(
            "matrix",
            n=self.n,
            ring=self.ring.name,
            word=None if word is None else list(word.letters),
            basis=[[list(p) for p in m.pairs()] for m in enumerate_matchings(self.n)],
            entries=self.entry_strings(),
        )


def _check_envelope(n: int, allow_large: bool) -> None:
    if n < 1:
        raise DomainError(f"need at least 2 points, got 2n={2 * n}")
    if n > SUPPORTED_HALF_POINTS and not allow_large:
        raise DomainError(
            f"2n={2 * n} is beyond the supported {2 * SUPPORTED_HALF_POINTS} points"
        )


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= 2 * n - 1:
        raise DomainError(f"strand index {i} outside 1..{2 * n - 1}")


@lru_cache(maxsize=None)
def _action(n: int, i: int) -> tuple[tuple[int, int], ...]:
    """For each basis column b: (row of E_i applied to b, closed loops)."""
    index = basis_index(n)
    result = []
    for matching in enumerate_matchings(n):
        image, loops = tl_generator_action(i, matching)
        result.append((index[image], loops))
    return tuple(result)


def _coefficients(ring: Ring, sign: int) -> tuple[Scalar, Scalar, Scalar]:
    """(coefficient of E_i, coefficient of Id, δ) for σ_i^sign."""
    a, a_inv = ring.a_power(1), ring.a_power(-1)
    delta = ring.embed(DELTA)
    if sign > 0:
        return a, a_inv, delta
    return a_inv, a, delta


def tl_generator_matrix(n: int, i: int, ring: Ring = SYMBOLIC) -> SkeinMatrix:
    """The matrix of E_i."""
    _check_index(n, i)
    zero, one = ring.zero(), ring.one()
    delta = ring.embed(DELTA)
    d = len(enumerate_matchings(n))
    entries = [[zero] * d for _ in range(d)]
    for b, (row, loops) in enumerate(_action(n, i)):
        entries[row][b] = delta if loops else one
    return SkeinMatrix(ring, tuple(tuple(r) for r in entries), n)


def braid_generator_matrix(
    n: int, i: int, sign: int = 1, ring: Ring = SYMBOLIC, allow_large: bool = False
) -> SkeinMatrix:
    """
    ρ(σ_i) = A E_i + A⁻¹ Id for sign +1, and its inverse A⁻¹ E_i + A Id for -1.
    """
    _check_envelope(n, allow_large)
    _check_index(n, i)
    if sign not in (1, -1):
        raise DomainError(f"sign must be ±1, got {sign}")
    c_e, c_id, delta = _coefficients(ring, sign)
    zero = ring.zero()
    d = len(enumerate_matchings(n))
    entries = [[zero] * d for _ in range(d)]
    for b, (row, loops) in enumerate(_action(n, i)):
        entries[b][b] = entries[b][b] + c_id
        entries[row][b] = entries[row][b] + (c_e * delta if loops else c_e)
    return SkeinMatrix(ring, tuple(tuple(r) for r in entries), n)


def apply_generator(matrix: Matrix, n: int, letter: int) -> Matrix:
    """
    matrix · ρ(σ_|letter|^±1), using that each column of a generator has at
    most two nonzero entries.
    """
    i, sign = abs(letter), (1 if letter > 0 else -1)
    c_e, c_id, delta = _coefficients(matrix.ring, sign)
    weighted = (c_e, c_e * delta)
    action = _action(n, i)
    columns = [matrix.column(b) for b in range(matrix.dim)]
    new_columns = []
    for b, (row, loops) in enumerate(action):
        weight = weighted[loops]
        new_columns.append(
            tuple(c_id * x + weight * y for x, y in zip(columns[b], columns[row]))
        )
    rows = tuple(tuple(col[r] for col in new_columns) for r in range(matrix.dim))
    return Matrix(matrix.ring, rows)


def braid_word_matrix(
    word: BraidWord, ring: Ring = SYMBOLIC, allow_large: bool = False
) -> SkeinMatrix:
    """ρ(word); the empty word gives the identity."""
    _check_envelope(word.n, allow_large)
    d = len(enumerate_matchings(word.n))
    result: Matrix = Matrix.identity(ring, d)
    for letter in word.letters:
        result = apply_generator(result, word.n, letter)
    LOG.debug("ρ of a %d-letter word on %d points over %s", len(word), 2 * word.n, ring.name)
    return SkeinMatrix.wrap(word.n, result)


def two_strand_basis(n: int, filler: NoncrossingMatching | None = None) -> tuple[int, int]:
    """Basis indices of D′₁ = D₁ ⊔ filler and D′₂ = D₂ ⊔ filler."""
    if n < 2:
        raise DomainError(f"the two-strand subspace needs 2n >= 4, got 2n={2 * n}")
    if filler is None:
        filler = side_by_side(n - 2)
    if filler.n != n - 2:
        raise DomainError(f"filler must match {2 * n - 4} points, got {2 * filler.n}")
    index = basis_index(n)
    return index[D1.disjoint_union(filler)], index[D2.disjoint_union(filler)]


def two_strand_subrep(
    n: int,
    word: BraidWord,
    filler: NoncrossingMatching | None = None,
    ring: Ring = SYMBOLIC,
) -> Matrix:
    """
    The restriction of ρ(word) to span{D′₁, D′₂}, for words in σ₁^±1, σ₂^±1.

    The result does not depend on n or on the filler.
    """
    if any(abs(letter) > 2 for letter in word.letters):
        raise DomainError(f"word {word} uses generators beyond σ₂")
    indices = two_strand_basis(n, filler)
    full = braid_word_matrix(BraidWord(n, word.letters), ring)
    for b in indices:
        for r, value in enumerate(full.column(b)):
            assert r in indices or not value, f"span{{D′₁, D′₂}} not preserved by {word}"
    return full.restrict(indices)
