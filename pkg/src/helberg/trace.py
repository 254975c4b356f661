"""Decision record of one decoder run.

Every event renders as a single line ``<kind> key=value ...`` with a fixed
key order, so a trace can be compared against a golden text verbatim.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from helberg.codebook import Word
from helberg.subsequence import VValue
from helberg.words import format_word

logger = logging.getLogger(__name__)

Field = Tuple[str, str]


def _word(word: Sequence[int], q: int) -> str:
    return format_word(word, q) if word else "<empty>"


@dataclass(frozen=True)
class PreliminaryEvent:
    extra_deletion: bool
    y_working: Word
    a: int
    b: int
    reduced: Word
    reduced_moment: int
    total_moment: int

    kind = "preliminary"

    def fields(self, q: int) -> List[Field]:
        return [
            ("p1", "yes" if self.extra_deletion else "no"),
            ("y", _word(self.y_working, q)),
            ("a", str(self.a)),
            ("b", str(self.b)),
            ("reduced", _word(self.reduced, q)),
            ("reduced_moment", str(self.reduced_moment)),
            ("moment", str(self.total_moment)),
        ]


@dataclass(frozen=True)
class BruteForceEvent:
    y: Word
    tried: int
    found: Tuple[Word, ...]

    kind = "bruteforce"

    def fields(self, q: int) -> List[Field]:
        found = ",".join(_word(word, q) for word in self.found) or "none"
        return [("y", _word(self.y, q)), ("tried", str(self.tried)), ("found", found)]


@dataclass(frozen=True)
class StepOneEvent:
    n_prime: int
    m_prime: int
    h: Tuple[int, ...]
    g: int

    kind = "step1"

    def fields(self, q: int) -> List[Field]:
        return [
            ("n_prime", str(self.n_prime)),
            ("m_prime", str(self.m_prime)),
            ("h", ",".join(str(g) for g in self.h) or "none"),
            ("g", str(self.g)),
        ]


@dataclass(frozen=True)
class StepTwoEvent:
    n_prime: int
    g: int
    pattern1: Word
    pattern2: Word
    v1: VValue
    v2: VValue
    t: int
    branch: str
    m_double_prime: int
    substeps: Tuple[Word, ...]
    result: str

    kind = "step2"

    def fields(self, q: int) -> List[Field]:
        substeps = ",".join(_word(word, q) for word in self.substeps) or "none"
        return [
            ("n_prime", str(self.n_prime)),
            ("v1", str(self.v1)),
            ("v2", str(self.v2)),
            ("t", str(self.t)),
            ("branch", self.branch),
            ("m2", str(self.m_double_prime)),
            ("substeps", substeps),
            ("result", self.result),
        ]


@dataclass(frozen=True)
class ResultEvent:
    word: Word
    verified: bool

    kind = "result"

    def fields(self, q: int) -> List[Field]:
        return [("word", _word(self.word, q)), ("verified", "yes" if self.verified else "no")]


Event = Union[PreliminaryEvent, BruteForceEvent, StepOneEvent, StepTwoEvent, ResultEvent]


class DecoderTrace:
    def __init__(self, q: int) -> None:
        self.q = q
        self.events: List[Event] = []

    def add(self, event: Event) -> None:
        self.events.append(event)
        logger.debug("%s", self.render(event))

    def render(self, event: Event) -> str:
        pairs = " ".join(f"{key}={value}" for key, value in event.fields(self.q))
        return f"{event.kind} {pairs}"

    def lines(self) -> List[str]:
        return [self.render(event) for event in self.events]

    def to_text(self) -> str:
        return "\n".join(self.lines())

    def step_one_events(self) -> List[StepOneEvent]:
        return [event for event in self.events if isinstance(event, StepOneEvent)]

    def step_two_events(self) -> List[StepTwoEvent]:
        return [event for event in self.events if isinstance(event, StepTwoEvent)]

    def preliminary(self) -> Optional[PreliminaryEvent]:
        for event in self.events:
            if isinstance(event, PreliminaryEvent):
                return event
        return None

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)
