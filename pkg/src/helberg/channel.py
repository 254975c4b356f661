"""Insertion/deletion channel: corruption plans, random and exhaustive.

A plan is an ordered list of edits applied one after the other to a working
copy of the word, so each position refers to the word as it is at that
moment.  Plans print as ``D4;I10:0`` (delete position 4, then insert a 0 at
position 10); the empty plan prints as ``-``.
"""

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from helberg.codebook import CodecError, Word
from helberg.subsequence import EditPositionError, delete_at, insert_at


class InvalidPlanError(CodecError, ValueError):
    pass


@dataclass(frozen=True)
class Delete:
    position: int

    def __str__(self) -> str:
        return f"D{self.position}"


@dataclass(frozen=True)
class Insert:
    position: int
    symbol: int

    def __str__(self) -> str:
        return f"I{self.position}:{self.symbol}"


Edit = Union[Delete, Insert]


@dataclass(frozen=True)
class CorruptionPlan:
    edits: Tuple[Edit, ...] = ()

    @property
    def insertions(self) -> int:
        return sum(1 for edit in self.edits if isinstance(edit, Insert))

    @property
    def deletions(self) -> int:
        return sum(1 for edit in self.edits if isinstance(edit, Delete))

    def __str__(self) -> str:
        return ";".join(str(edit) for edit in self.edits) or "-"


def parse_plan(text: str) -> CorruptionPlan:
    text = text.strip()
    if text in ("", "-"):
        return CorruptionPlan()
    edits: List[Edit] = []
    for item in text.split(";"):
        item = item.strip()
        try:
            if item.startswith("D"):
                edits.append(Delete(int(item[1:])))
            elif item.startswith("I"):
                position, _, symbol = item[1:].partition(":")
                edits.append(Insert(int(position), int(symbol)))
            else:
                raise ValueError(item)
        except ValueError:
            raise InvalidPlanError(f"cannot parse edit {item!r} in plan {text!r}") from None
    return CorruptionPlan(tuple(edits))


def corrupt(x: Sequence[int], plan: CorruptionPlan, q: Optional[int] = None) -> Word:
    word = tuple(x)
    try:
        for edit in plan.edits:
            if isinstance(edit, Delete):
                word = delete_at(word, edit.position)
            else:
                word = insert_at(word, edit.position, edit.symbol, q)
    except EditPositionError as exc:
        raise InvalidPlanError(
            f"plan {plan} does not apply to a word of length {len(x)}: {exc}"
        ) from exc
    return word


def _check_counts(num_ins: int, num_del: int, n: int, d: Optional[int]) -> None:
    if num_ins < 0 or num_del < 0:
        raise InvalidPlanError(f"edit counts must be nonnegative, got {num_ins}, {num_del}")
    if num_del > n:
        raise InvalidPlanError(f"cannot delete {num_del} symbols from a word of length {n}")
    if d is not None and num_ins + num_del > d:
        raise InvalidPlanError(f"{num_ins} insertions and {num_del} deletions exceed d={d}")


def random_plan(
    n: int, num_ins: int, num_del: int, seed: int, q: int, *, d: Optional[int] = None
) -> CorruptionPlan:
    """Draw a plan with ``num_del`` deletions followed by ``num_ins`` insertions.

    Every position (and inserted symbol) is drawn uniformly from the choices
    valid at that point, using :class:`random.Random` seeded with ``seed``.
    """
    _check_counts(num_ins, num_del, n, d)
    rng = random.Random(seed)
    edits: List[Edit] = []
    length = n
    for _ in range(num_del):
        edits.append(Delete(rng.randint(1, length)))
        length -= 1
    for _ in range(num_ins):
        edits.append(Insert(rng.randint(1, length + 1), rng.randrange(q)))
        length += 1
    return CorruptionPlan(tuple(edits))


def _edit_counts(
    max_ins: int, max_del: int, n: int, d: Optional[int]
) -> Iterator[Tuple[int, int]]:
    for num_del in range(min(max_del, n) + 1):
        for num_ins in range(max_ins + 1):
            if d is None or num_ins + num_del <= d:
                yield num_ins, num_del


def enumerate_plans(
    n: int, max_ins: int, max_del: int, q: int, *, d: Optional[int] = None
) -> Iterator[CorruptionPlan]:
    """Yield every plan with up to ``max_del`` deletions and ``max_ins`` insertions.

    The empty plan comes first.  Deletions are listed right to left so their
    positions refer to the original word; insertions follow left to right,
    each position being the place of the symbol in the final word.  Every
    reachable corrupted word is produced at least once.
    """
    for num_ins, num_del in _edit_counts(max_ins, max_del, n, d):
        for removed in itertools.combinations(range(1, n + 1), num_del):
            deletions = tuple(Delete(position) for position in reversed(removed))
            final_length = n - num_del + num_ins
            for places in itertools.combinations(range(1, final_length + 1), num_ins):
                for symbols in itertools.product(range(q), repeat=num_ins):
                    insertions = tuple(Insert(*pair) for pair in zip(places, symbols))
                    yield CorruptionPlan(deletions + insertions)


def count_plans(n: int, max_ins: int, max_del: int, q: int, *, d: Optional[int] = None) -> int:
    return sum(
        math.comb(n, num_del) * math.comb(n - num_del + num_ins, num_ins) * q**num_ins
        for num_ins, num_del in _edit_counts(max_ins, max_del, n, d)
    )
