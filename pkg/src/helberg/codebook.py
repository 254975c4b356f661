"""Weight sequences, moments and codebook membership for generalized Helberg codes.

A code is selected by its length ``n``, its indel budget ``d``, its alphabet
size ``q`` and a residue ``r``: it holds every word of length ``n`` over
``{0, ..., q - 1}`` whose moment is congruent to ``r`` modulo ``w_{n+1}``.

All arithmetic is done on Python ints, so weights and moments never overflow.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Tuple

logger = logging.getLogger(__name__)

# Symbols are stored 0-indexed; every public contract speaks about
# 1-indexed positions, so x_i is word[i - 1].
Word = Tuple[int, ...]
WeightTable = Tuple[int, ...]


class CodecError(Exception):
    """Base class of every error raised by this package."""


class InvalidParameterError(CodecError, ValueError):
    pass


class LengthMismatchError(CodecError, ValueError):
    pass


class InvalidInputError(CodecError, ValueError):
    pass


def build_weights(q: int, d: int, count: int) -> WeightTable:
    """Return ``w_0 ... w_{count-1}`` for alphabet size ``q`` and budget ``d``.

    ``w_i = 0`` for ``i <= 0`` and ``w_i = 1 + p * (w_{i-1} + ... + w_{i-d})``
    otherwise, where ``p = q - 1``.
    """
    if q < 2:
        raise InvalidParameterError(f"alphabet size must be at least 2, got q={q}")
    if d < 1:
        raise InvalidParameterError(f"indel budget must be at least 1, got d={d}")
    if count < 1:
        raise InvalidParameterError(f"weight table needs at least one entry, got count={count}")
    p = q - 1
    weights = [0]
    window = 0  # w_{i-1} + ... + w_{i-d}
    for i in range(1, count):
        weights.append(1 + p * window)
        window += weights[i]
        if i - d >= 0:
            window -= weights[i - d]
    return tuple(weights)


def export_weights(weights: Sequence[int]) -> str:
    return "\n".join(str(w) for w in weights)


def moment(x: Sequence[int], weights: Sequence[int]) -> int:
    """Return ``M(x) = x_1 w_1 + ... + x_len(x) w_len(x)``."""
    if len(x) + 1 > len(weights):
        raise LengthMismatchError(
            f"weight table of length {len(weights)} cannot weigh a word of length {len(x)}"
        )
    return sum(symbol * weights[i] for i, symbol in enumerate(x, 1))


@dataclass(frozen=True)
class CodeParams:
    """Identifies the codebook ``C_H(n, d, r, q)`` with modulus ``w_{n+1}``.

    Use :meth:`create` to build one; it derives the weight table and
    normalizes the residue.
    """

    n: int
    d: int
    q: int
    r: int
    weights: WeightTable = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"codeword length must be at least 1, got n={self.n}")
        if len(self.weights) != self.n + 2:
            raise InvalidParameterError(
                f"expected {self.n + 2} weights (w_0 .. w_{self.n + 1}), got {len(self.weights)}"
            )
        if not 0 <= self.r < self.modulus:
            raise InvalidParameterError(f"residue {self.r} outside [0, {self.modulus})")

    @classmethod
    def create(cls, n: int, d: int, q: int, r: int = 0) -> CodeParams:
        if n < 1:
            raise InvalidParameterError(f"codeword length must be at least 1, got n={n}")
        weights = build_weights(q, d, n + 2)
        modulus = weights[n + 1]
        if not 0 <= r < modulus:
            reduced = r % modulus
            logger.warning("residue %d reduced modulo %d to %d", r, modulus, reduced)
            r = reduced
        return cls(n, d, q, r, weights)

    @property
    def p(self) -> int:
        return self.q - 1

    @property
    def modulus(self) -> int:
        return self.weights[self.n + 1]

    def weight(self, i: int) -> int:
        return self.weights[i] if i > 0 else 0

    def __str__(self) -> str:
        return f"n={self.n},d={self.d},q={self.q},r={self.r}"


def partial_moment(
    total: int, x_suffix_known: Sequence[int], n_prime: int, params: CodeParams
) -> int:
    """Return ``m' = total - sum(x_i w_i for n' < i <= n)``.

    ``x_suffix_known[0]`` is the symbol at position ``n' + 1``.  A negative
    result means the caller is on a branch that cannot hold.
    """
    known = sum(
        symbol * params.weights[n_prime + k] for k, symbol in enumerate(x_suffix_known, 1)
    )
    return total - known


def is_codeword(x: Sequence[int], params: CodeParams) -> bool:
    if len(x) != params.n:
        raise LengthMismatchError(f"expected a word of length {params.n}, got {len(x)}")
    return moment(x, params.weights) % params.modulus == params.r


def enumerate_codebook(params: CodeParams) -> Iterator[Word]:
    """Yield the codewords in lexicographic order.

    This walks all ``q**n`` words; keep ``q**n`` at or below about ``2**24``.
    """
    for x in itertools.product(range(params.q), repeat=params.n):
        if moment(x, params.weights) % params.modulus == params.r:
            yield x


def codebook_size(params: CodeParams) -> int:
    return sum(1 for _ in enumerate_codebook(params))


def max_moment(params: CodeParams) -> int:
    """Largest moment of any word of length n, reached by ``p * n``."""
    return params.p * sum(params.weights[1 : params.n + 1])


def possible_moments(params: CodeParams) -> Tuple[int, int]:
    """The only two moments a codeword can have when ``d >= 2``."""
    return params.r, params.r + params.modulus


@dataclass(frozen=True)
class ErrorBudget:
    """Upper bounds ``a`` on insertions and ``b`` on deletions for a received word."""

    a: int
    b: int
    d: int

    @property
    def needs_extra_deletion(self) -> bool:
        # a + b is either d or d - 1; the decoder wants exactly d.
        return self.a + self.b < self.d


def compute_budget(len_y: int, params: CodeParams) -> ErrorBudget:
    n, d = params.n, params.d
    if abs(len_y - n) > d:
        raise InvalidInputError(
            f"a word of length {len_y} is more than d={d} indels away from length n={n}"
        )
    return ErrorBudget(a=(d + len_y - n) // 2, b=(d - len_y + n) // 2, d=d)
