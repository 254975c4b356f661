"""Indel-correcting decoder.

The decoder recovers a codeword of ``C_H(n, d, r, q)`` from a word that went
through at most ``d`` insertions and deletions.  It first pins the exact
moment ``M(x)``, then determines the codeword right to left:

* Step 1 narrows the rightmost unknown symbol ``x_{n'}`` to the set ``H`` of
  values compatible with the remaining partial moment.  A single candidate
  is taken as is.
* Step 2 handles a two-element ``H = {g, g + 1}``.  Only two completions of
  the next ``d`` symbols remain (zeros then ``g + 1``, or ``p``'s then ``g``).
  The one that uses up more of the tail of ``y`` is explored with the
  deletions decoder; it either yields the whole codeword or is refuted,
  which settles ``d`` symbols at once.
"""

import enum
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Union

from helberg.codebook import (
    CodecError,
    CodeParams,
    ErrorBudget,
    InvalidInputError,
    Word,
    compute_budget,
    is_codeword,
    moment,
    partial_moment,
)
from helberg.deletions import decode_deletions
from helberg.moment import deletion_count, minimize_moment_deletions, recover_moment
from helberg.subsequence import compute_v, delete_at, insert_at, lcs_length
from helberg.trace import (
    BruteForceEvent,
    DecoderTrace,
    PreliminaryEvent,
    ResultEvent,
    StepOneEvent,
    StepTwoEvent,
)
from helberg.words import check_word

logger = logging.getLogger(__name__)


class InvariantViolation(CodecError):
    """A bound that holds for every in-model input failed."""


class DecodeFailure(CodecError):
    def __init__(self, message: str, trace: Optional[DecoderTrace] = None) -> None:
        super().__init__(message)
        self.trace = trace


class NoCodewordFound(DecodeFailure):
    pass


class MultipleCodewordsFound(DecodeFailure):
    pass


class Case(enum.IntEnum):
    CASE1 = 1
    CASE2 = 2

    @property
    def other(self) -> "Case":
        return Case.CASE2 if self is Case.CASE1 else Case.CASE1


@dataclass(frozen=True)
class StepTwoCase:
    which: Case
    pattern: Word
    candidate: Word

    @classmethod
    def build(cls, which: Case, g: int, d: int, p: int, known_suffix: Word) -> "StepTwoCase":
        if which is Case.CASE1:
            pattern = (0,) * (d - 1) + (g + 1,)
        else:
            pattern = (p,) * (d - 1) + (g,)
        return cls(which, pattern, pattern + known_suffix)


@dataclass(frozen=True)
class FullSolution:
    word: Word


@dataclass(frozen=True)
class ResolvedCase:
    case: StepTwoCase


StepTwoOutcome = Union[FullSolution, ResolvedCase]


@dataclass(frozen=True)
class DecoderState:
    params: CodeParams
    y_working: Word
    budget: ErrorBudget
    total_moment: int
    n_prime: int
    known_suffix: Word

    @property
    def m_prime(self) -> int:
        return partial_moment(self.total_moment, self.known_suffix, self.n_prime, self.params)

    def advance(self, symbols: Word) -> "DecoderState":
        """Fix ``symbols`` as ``x[n' - len(symbols) + 1 : n']``."""
        return DecoderState(
            self.params,
            self.y_working,
            self.budget,
            self.total_moment,
            self.n_prime - len(symbols),
            symbols + self.known_suffix,
        )


@dataclass(frozen=True)
class DecodeResult:
    word: Word
    trace: DecoderTrace
    verified: bool


def step_one_candidates(m_prime: int, n_prime: int, params: CodeParams) -> FrozenSet[int]:
    w = params.weight(n_prime)
    spread = params.p * sum(params.weights[1:n_prime])
    return frozenset(g for g in range(params.q) if g * w <= m_prime <= g * w + spread)


def answer_is_correct(
    candidate: Sequence[int], total_moment: int, y: Sequence[int], params: CodeParams, b: int
) -> bool:
    return (
        len(candidate) == params.n
        and moment(candidate, params.weights) == total_moment
        and lcs_length(candidate, y) >= params.n - b
    )


def _tail_moment(candidate: Word, n_prime: int, d: int, params: CodeParams) -> int:
    # candidate occupies positions n' - d + 1 .. n
    first = n_prime - d + 1
    return sum(symbol * params.weights[first + k] for k, symbol in enumerate(candidate))


def step_two(
    state: DecoderState,
    g: int,
    *,
    tie_break: int = 1,
    trace: Optional[DecoderTrace] = None,
) -> StepTwoOutcome:
    params = state.params
    n, d, p = params.n, params.d, params.p
    n_prime = state.n_prime
    a, b = state.budget.a, state.budget.b
    y = state.y_working
    if g + 1 > p:
        raise InvariantViolation(f"H = {{{g}, {g + 1}}} leaves the alphabet 0..{p}")
    if n_prime - d < 0:
        raise InvariantViolation(f"step 2 at n'={n_prime} would run past the first symbol")

    cases = {
        which: StepTwoCase.build(which, g, d, p, state.known_suffix)
        for which in (Case.CASE1, Case.CASE2)
    }
    threshold = n - n_prime + d - b
    v1 = compute_v(cases[Case.CASE1].candidate, y, threshold)
    v2 = compute_v(cases[Case.CASE2].candidate, y, threshold)
    if v1 == v2:
        t = Case(tie_break)
    else:
        t = Case.CASE1 if v1 > v2 else Case.CASE2
    v_t = v1 if t is Case.CASE1 else v2
    explored = cases[t]
    refuted = ResolvedCase(cases[t.other])
    m2 = state.total_moment - _tail_moment(explored.candidate, n_prime, d, params)

    low = n - n_prime + 2 * a
    fragments: List[Word] = []
    if v_t >= low + 1:
        branch = "ii"
    elif v_t == low:
        branch = "iii"
        assert isinstance(v_t, int)
        fragments.append(y[: max(len(y) - v_t - b, 0)])
    elif v_t == low - 1:
        branch = "iv"
        assert isinstance(v_t, int)
        end = len(y) - v_t - b
        if end > 0:
            fragments.extend(y[: j - 1] + y[j:end] for j in range(1, end + 1))
        else:
            fragments.append(())
    else:
        raise InvariantViolation(f"v_t={v_t} is below the lower bound {low - 1} at n'={n_prime}")

    outcome: StepTwoOutcome = refuted
    substeps: List[Word] = []
    for fragment in fragments:
        try:
            x_prime = decode_deletions(
                fragment, n_prime - d, m2, params.q, d, weights=params.weights
            )
        except InvalidInputError:
            logger.debug("fragment of length %d is not a valid substep input", len(fragment))
            continue
        substeps.append(x_prime)
        full = x_prime + explored.candidate
        if answer_is_correct(full, state.total_moment, y, params, b):
            outcome = FullSolution(full)
            break

    if trace is not None:
        trace.add(
            StepTwoEvent(
                n_prime=n_prime,
                g=g,
                pattern1=cases[Case.CASE1].pattern,
                pattern2=cases[Case.CASE2].pattern,
                v1=v1,
                v2=v2,
                t=int(t),
                branch=branch,
                m_double_prime=m2,
                substeps=tuple(substeps),
                result="solution" if isinstance(outcome, FullSolution) else f"case{int(t.other)}",
            )
        )
    return outcome


def decode_brute_force_d1(y: Sequence[int], params: CodeParams) -> Word:
    """Single-indel decoding by trying every single insertion or deletion."""
    y = tuple(y)
    n = params.n
    if len(y) == n + 1:
        tried = {delete_at(y, j) for j in range(1, len(y) + 1)}
    elif len(y) == n - 1:
        tried = {
            insert_at(y, j, symbol)
            for j in range(1, len(y) + 2)
            for symbol in range(params.q)
        }
    elif len(y) == n:
        # one insertion and one deletion would already be two errors
        tried = {y}
    else:
        raise InvalidInputError(f"a word of length {len(y)} is not one indel from length {n}")
    found = sorted(word for word in tried if is_codeword(word, params))
    if not found:
        raise NoCodewordFound(f"no codeword is one indel away from {y}")
    if len(found) > 1:
        raise MultipleCodewordsFound(f"{len(found)} codewords are one indel away from {y}")
    return found[0]


def _step_one_bounds(h: FrozenSet[int], n_prime: int) -> None:
    if not h:
        raise InvariantViolation(f"no symbol fits the partial moment at n'={n_prime}")
    if len(h) > 2 or max(h) - min(h) > 1:
        raise InvariantViolation(f"candidate set {sorted(h)} at n'={n_prime} is not adjacent")


def decode(y: Sequence[int], params: CodeParams, *, tie_break: int = 1) -> DecodeResult:
    if tie_break not in (1, 2):
        raise InvalidInputError(f"tie_break must be 1 or 2, got {tie_break}")
    y = tuple(y)
    check_word(y, params.q)
    trace = DecoderTrace(params.q)
    n, d = params.n, params.d
    budget = compute_budget(len(y), params)

    if d == 1:
        try:
            word = decode_brute_force_d1(y, params)
        except DecodeFailure as exc:
            trace.add(BruteForceEvent(y, 0, ()))
            exc.trace = trace
            raise
        trace.add(BruteForceEvent(y, 1, (word,)))
        trace.add(ResultEvent(word, True))
        return DecodeResult(word, trace, True)

    extra_deletion = budget.needs_extra_deletion
    if extra_deletion:
        y = y[1:]
        budget = compute_budget(len(y), params)
    reduced = minimize_moment_deletions(y, deletion_count(y, budget))
    total = recover_moment(y, params, budget)
    trace.add(
        PreliminaryEvent(
            extra_deletion, y, budget.a, budget.b, reduced, moment(reduced, params.weights), total
        )
    )

    state = DecoderState(params, y, budget, total, n, ())
    word: Optional[Word] = None
    try:
        while state.n_prime > 0:
            m_prime = state.m_prime
            h = step_one_candidates(m_prime, state.n_prime, params)
            _step_one_bounds(h, state.n_prime)
            g = min(h)
            trace.add(StepOneEvent(state.n_prime, m_prime, tuple(sorted(h)), g))
            if len(h) == 1:
                state = state.advance((g,))
                continue
            outcome = step_two(state, g, tie_break=tie_break, trace=trace)
            if isinstance(outcome, FullSolution):
                word = outcome.word
                break
            state = state.advance(outcome.case.pattern)
    except InvariantViolation as exc:
        raise DecodeFailure(str(exc), trace) from exc
    if word is None:
        word = state.known_suffix

    verified = answer_is_correct(word, total, y, params, budget.b)
    trace.add(ResultEvent(word, verified))
    if not verified:
        logger.warning("decoded word fails the final check; input is likely outside the model")
    return DecodeResult(word, trace, verified)
