"""Longest common subsequences, suffix windows and single-symbol edits.

Positions in :func:`delete_at` and :func:`insert_at` are 1-indexed.
"""

from typing import Any, List, Optional, Sequence, Union

from helberg.codebook import CodecError, Word


class EditPositionError(CodecError, IndexError):
    pass


class Unreachable:
    """The value of ``v`` when no suffix of ``y`` is long enough.

    Orders above every int, so ``max(v1, v2)`` picks it.
    """

    _instance: Optional["Unreachable"] = None

    def __new__(cls) -> "Unreachable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: Any) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("Unreachable")

    def __lt__(self, other: Any) -> bool:
        return False

    def __le__(self, other: Any) -> bool:
        return other is self

    def __gt__(self, other: Any) -> bool:
        return other is not self

    def __ge__(self, other: Any) -> bool:
        return True


UNREACHABLE = Unreachable()

VValue = Union[int, Unreachable]


def lcs_length(s1: Sequence[int], s2: Sequence[int]) -> int:
    if len(s1) < len(s2):
        s1, s2 = s2, s1
    row = [0] * (len(s2) + 1)
    for a in s1:
        diagonal = 0
        for j, b in enumerate(s2, 1):
            above = row[j]
            if a == b:
                row[j] = diagonal + 1
            elif row[j - 1] > above:
                row[j] = row[j - 1]
            diagonal = above
    return row[-1]


def indel_distance(s1: Sequence[int], s2: Sequence[int]) -> int:
    """Fewest insertions plus deletions turning ``s1`` into ``s2``."""
    return len(s1) + len(s2) - 2 * lcs_length(s1, s2)


def is_subsequence(s1: Sequence[int], s2: Sequence[int]) -> bool:
    remaining = iter(s2)
    return all(symbol in remaining for symbol in s1)


def lcs_suffix_profile(candidate: Sequence[int], y: Sequence[int]) -> List[int]:
    """Return ``lcs(candidate, y[len(y) - v + 1 : len(y)])`` for ``v = 0 .. len(y)``.

    Both words are read right to left, so each new row of the table extends
    the suffix of ``y`` by one symbol.
    """
    reversed_candidate = candidate[::-1]
    row = [0] * (len(candidate) + 1)
    profile = [0]
    for a in reversed(y):
        diagonal = 0
        for j, b in enumerate(reversed_candidate, 1):
            above = row[j]
            if a == b:
                row[j] = diagonal + 1
            elif row[j - 1] > above:
                row[j] = row[j - 1]
            diagonal = above
        profile.append(row[-1])
    return profile


def compute_v(candidate: Sequence[int], y: Sequence[int], threshold: int) -> VValue:
    """Smallest ``v >= 0`` whose length-``v`` suffix of ``y`` shares ``threshold``
    common symbols with ``candidate``, or :data:`UNREACHABLE`."""
    if threshold <= 0:
        return 0
    for v, common in enumerate(lcs_suffix_profile(candidate, y)):
        if common >= threshold:
            return v
    return UNREACHABLE


def delete_at(s: Sequence[int], j: int) -> Word:
    if not 1 <= j <= len(s):
        raise EditPositionError(f"cannot delete position {j} of a word of length {len(s)}")
    return tuple(s[: j - 1]) + tuple(s[j:])


def insert_at(s: Sequence[int], j: int, sym: int, q: Optional[int] = None) -> Word:
    if not 1 <= j <= len(s) + 1:
        raise EditPositionError(f"cannot insert at position {j} of a word of length {len(s)}")
    if sym < 0 or (q is not None and sym >= q):
        raise EditPositionError(f"symbol {sym} is outside the alphabet")
    return tuple(s[: j - 1]) + (sym,) + tuple(s[j - 1 :])
