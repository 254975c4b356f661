"""Deletions-only decoding with a known exact moment.

Given ``y'`` obtained from an unknown ``x'`` of length ``n_target`` by at most
``d`` deletions, and the exact moment ``M(x')``, the answer is the
supersequence of ``y'`` of length ``n_target`` with that moment.  The search
places symbols left to right, tracks how much of ``y'`` has been embedded
and abandons a prefix as soon as the moment can no longer be reached.

The decoder is total: when nothing qualifies it still answers with a word of
length ``n_target``, namely ``y'`` followed by ``n_target - len(y')`` copies
of the largest symbol.
"""

import logging
from typing import Iterator, List, Optional, Sequence

from helberg.codebook import InvalidInputError, WeightTable, Word, build_weights

logger = logging.getLogger(__name__)


def deletion_candidates(
    y_prime: Sequence[int], n_target: int, exact_moment: int, q: int, weights: WeightTable
) -> Iterator[Word]:
    """Yield, in lexicographic order, every word of length ``n_target`` that has
    ``y_prime`` as a subsequence and moment exactly ``exact_moment``."""
    p = q - 1
    # tail[i] is the largest moment positions i+1 .. n_target can still add.
    tail = [0] * (n_target + 1)
    for i in range(n_target - 1, -1, -1):
        tail[i] = tail[i + 1] + p * weights[i + 1]
    if not 0 <= exact_moment <= tail[0]:
        return
    prefix: List[int] = []

    def extend(placed: int, matched: int, current: int) -> Iterator[Word]:
        if placed == n_target:
            if matched == len(y_prime) and current == exact_moment:
                yield tuple(prefix)
            return
        weight = weights[placed + 1]
        for symbol in range(q):
            value = current + symbol * weight
            if value > exact_moment:
                break
            if value + tail[placed + 1] < exact_moment:
                continue
            embedded = matched
            if matched < len(y_prime) and y_prime[matched] == symbol:
                embedded += 1
            if len(y_prime) - embedded > n_target - placed - 1:
                continue
            prefix.append(symbol)
            yield from extend(placed + 1, embedded, value)
            prefix.pop()

    yield from extend(0, 0, 0)


def decode_deletions(
    y_prime: Sequence[int],
    n_target: int,
    exact_moment: int,
    q: int,
    d: int,
    *,
    weights: Optional[WeightTable] = None,
) -> Word:
    k = n_target - len(y_prime)
    if not 0 <= k <= d:
        raise InvalidInputError(
            f"cannot restore length {n_target} from {len(y_prime)} symbols"
            f" with at most {d} deletions"
        )
    if weights is None:
        weights = build_weights(q, d, n_target + 1)
    found = next(deletion_candidates(y_prime, n_target, exact_moment, q, weights), None)
    if found is not None:
        return found
    logger.debug("no supersequence of length %d has moment %d", n_target, exact_moment)
    return tuple(y_prime) + (q - 1,) * k
