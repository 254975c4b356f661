"""Recover the exact moment of the sent codeword from a corrupted word.

A codeword's moment is either ``r`` or ``r + w_{n+1}``.  Deleting ``a``
symbols from the received word so that its moment is as small as possible
and comparing the result with ``r`` tells the two apart.
"""

import logging
from typing import Sequence

from helberg.codebook import (
    CodeParams,
    ErrorBudget,
    InvalidInputError,
    Word,
    moment,
)

logger = logging.getLogger(__name__)


def minimize_moment_deletions(y: Sequence[int], a: int) -> Word:
    """Delete ``a`` symbols from ``y`` leaving the smallest possible moment.

    Each round removes the first symbol of the longest nonincreasing run
    that ends the word.  The choice does not depend on the weights.
    """
    if a < 0 or a > len(y):
        raise InvalidInputError(f"cannot delete {a} symbols from a word of length {len(y)}")
    word = list(y)
    for _ in range(a):
        i = len(word) - 1
        while i > 0 and word[i - 1] >= word[i]:
            i -= 1
        del word[i]
    return tuple(word)


def deletion_count(y: Sequence[int], budget: ErrorBudget) -> int:
    # short codes can ask for more deletions than y has symbols
    return min(budget.a, len(y))


def recover_moment(y: Sequence[int], params: CodeParams, budget: ErrorBudget) -> int:
    reduced = minimize_moment_deletions(y, deletion_count(y, budget))
    low = moment(reduced, params.weights)
    total = params.r if low <= params.r else params.r + params.modulus
    logger.debug("minimized moment %d against r=%d; M(x)=%d", low, params.r, total)
    return total
