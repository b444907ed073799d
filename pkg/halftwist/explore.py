# Copyright the halftwist authors
# Licensed under the MIT license

import logging
from itertools import product
from typing import Generator, Iterator

from .certify import certify, Certification
from .cyclotomic import find_pm_root, q_order
from .errors import DomainError
from .rings import CyclotomicRing
from .skein import braid_word_matrix
from .types import BraidWord, RootOfUnityChoice, Verdict

LOG = logging.getLogger(__name__)

EXPLORE_M = 5
EXPLORE_HALF_POINTS = 3


def reduced_words(n: int, max_len: int) -> Iterator[BraidWord]:
    """
    Freely reduced words of length 0..max_len in σ_1^±1 .. σ_(2n-1)^±1, shortest
    first, letters ordered 1, -1, 2, -2, ... The empty word comes first unless
    max_len is 0.
    """
    if max_len < 0:
        raise DomainError(f"max_len must be non-negative, got {max_len}")
    alphabet = [s * i for i in range(1, 2 * n) for s in (1, -1)]
    if max_len:
        yield BraidWord(n, ())
    for length in range(1, max_len + 1):
        for letters in product(alphabet, repeat=length):
            if any(a == -b for a, b in zip(letters, letters[1:])):
                continue
            yield BraidWord(n, letters)


def explore_words(
    max_len: int,
    cap: int | None = None,
    choice: RootOfUnityChoice | None = None,
    n: int = EXPLORE_HALF_POINTS,
) -> Generator[tuple[BraidWord, Certification], bool | None, None]:
    """
    Certify short words of B_2n at a root of P_5, yielding each word with its
    certificate. Send a truthy value to stop early; ``cap`` bounds the number of
    words certified.

    Nothing is concluded from an exhausted search.
    """
    if choice is None:
        choice = find_pm_root(EXPLORE_M)
    ring = CyclotomicRing.for_choice(choice)
    LOG.info("exploring B_%d up to length %d at %s (r=%d)", 2 * n, max_len, choice, q_order(choice))
    count = 0
    for word in reduced_words(n, max_len):
        if cap is not None and count >= cap:
            LOG.info("stopped after %d words", count)
            break
        result = certify(braid_word_matrix(word, ring), word)
        count += 1
        if result.certificate.verdict is Verdict.INFINITE:
            LOG.warning("infinite projective order for %s at %s", word, choice)
        else:
            LOG.debug("%s: %s", word, result.certificate.verdict.value)

        stop = yield word, result
        if stop:
            break
