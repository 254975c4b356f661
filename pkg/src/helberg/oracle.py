"""Brute-force oracle and the verification harness built on it.

:func:`verify_exhaustive` corrupts codewords, decodes them, and compares the
answer with the original word and with :func:`oracle_decode`.  Mismatches are
collected in a :class:`VerificationReport` rather than raised.
"""

import logging
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from helberg.channel import CorruptionPlan, corrupt, count_plans, enumerate_plans, random_plan
from helberg.codebook import CodecError, CodeParams, Word, enumerate_codebook, moment
from helberg.decoder import decode
from helberg.subsequence import indel_distance, lcs_length
from helberg.trace import DecoderTrace, StepOneEvent, StepTwoEvent
from helberg.words import format_word

logger = logging.getLogger(__name__)

FULL_RUN_LIMIT = 10**8


class VerificationBudgetError(CodecError, ValueError):
    pass


@dataclass(frozen=True)
class FullMode:
    pass


@dataclass(frozen=True)
class SampledMode:
    seed: int
    count: int


VerifyMode = Union[FullMode, SampledMode]


@dataclass(frozen=True)
class Failure:
    word: Word
    plan: CorruptionPlan
    got: str
    reasons: Tuple[str, ...] = ()

    def to_text(self, q: int) -> str:
        line = f"FAIL x={format_word(self.word, q)} plan={self.plan} got={self.got}"
        if self.reasons:
            line += " reason=" + ",".join(self.reasons)
        return line


@dataclass
class VerificationReport:
    params: CodeParams
    codebook: int
    plans: int
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self, include_time: bool = False) -> str:
        q = self.params.q
        lines = [f"params={self.params}", f"codebook={self.codebook}", f"plans={self.plans}"]
        lines.extend(failure.to_text(q) for failure in self.failures)
        if include_time:
            lines.append(f"time={self.elapsed:.3f}s")
        lines.append(f"result={'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def oracle_decode(
    y: Sequence[int], params: CodeParams, codebook: Optional[Iterable[Word]] = None
) -> List[Word]:
    """Every codeword within ``d`` insertions and deletions of ``y``, sorted."""
    if codebook is None:
        codebook = enumerate_codebook(params)
    return sorted(x for x in codebook if indel_distance(x, y) <= params.d)


def check_trace_against(
    trace: DecoderTrace, x: Word, params: CodeParams, num_ins: int, num_del: int
) -> List[str]:
    """Compare the decisions recorded in ``trace`` with the known codeword ``x``.

    Returns the names of the properties that did not hold.
    """
    n, d = params.n, params.d
    problems: List[str] = []
    preliminary = trace.preliminary()
    if preliminary is None:
        return problems
    a = preliminary.a
    if preliminary.a < num_ins or preliminary.b < num_del:
        problems.append("budget")
    if preliminary.total_moment != moment(x, params.weights):
        problems.append("moment")
    for event in trace:
        if isinstance(event, StepOneEvent):
            if x[event.n_prime - 1] not in event.h:
                problems.append(f"containment@{event.n_prime}")
            if len(event.h) > 2 or max(event.h) - min(event.h) > 1:
                problems.append(f"adjacency@{event.n_prime}")
        elif isinstance(event, StepTwoEvent):
            n_prime = event.n_prime
            truth = x[n_prime - d : n_prime]
            patterns = {1: event.pattern1, 2: event.pattern2}
            if n_prime - d <= 1 or truth not in patterns.values():
                problems.append(f"structure@{n_prime}")
            if max(event.v1, event.v2) < n - n_prime + 2 * a - 1:
                problems.append(f"v-bound@{n_prime}")
            if event.branch == "ii" and patterns[event.t] == truth:
                problems.append(f"false-case@{n_prime}")
            if event.result.startswith("case") and patterns[int(event.result[4:])] != truth:
                problems.append(f"resolved-case@{n_prime}")
    return problems


def check_corruption(
    x: Word,
    plan: CorruptionPlan,
    params: CodeParams,
    codebook: Sequence[Word],
    *,
    check_bounds: bool = True,
) -> Optional[Failure]:
    q = params.q
    y = corrupt(x, plan, q)
    reasons: List[str] = []
    if check_bounds:
        if indel_distance(x, y) > plan.insertions + plan.deletions:
            reasons.append("reachability")
        if lcs_length(x, y) < params.n - plan.deletions:
            reasons.append("lcs-bound")
    try:
        result = decode(y, params)
    except CodecError as exc:
        return Failure(x, plan, f"<{type(exc).__name__}>", tuple(reasons))
    got = format_word(result.word, q)
    if result.word != x:
        reasons.append("wrong-word")
    elif not result.verified:
        reasons.append("not-verified")
    matches = oracle_decode(y, params, codebook)
    if matches != [x] or matches != [result.word]:
        reasons.append("oracle:" + ("|".join(format_word(m, q) for m in matches) or "none"))
    if check_bounds:
        reasons.extend(
            check_trace_against(result.trace, x, params, plan.insertions, plan.deletions)
        )
    if reasons:
        return Failure(x, plan, got or "<empty>", tuple(reasons))
    return None


@dataclass(frozen=True)
class _Task:
    params: CodeParams
    codebook: Tuple[Word, ...]
    word: Word
    plans: Optional[Tuple[CorruptionPlan, ...]]
    max_ins: int
    max_del: int
    check_bounds: bool


def _run_task(task: _Task) -> Tuple[int, List[Failure]]:
    params = task.params
    if task.plans is None:
        plans: Iterable[CorruptionPlan] = enumerate_plans(
            params.n, task.max_ins, task.max_del, params.q, d=params.d
        )
    else:
        plans = task.plans
    tested = 0
    failures: List[Failure] = []
    for plan in plans:
        tested += 1
        failure = check_corruption(
            task.word, plan, params, task.codebook, check_bounds=task.check_bounds
        )
        if failure is not None:
            failures.append(failure)
    return tested, failures


def _sampled_plans(
    codebook: Sequence[Word], params: CodeParams, mode: SampledMode, max_ins: int, max_del: int
) -> List[Tuple[Word, Tuple[CorruptionPlan, ...]]]:
    rng = random.Random(mode.seed)
    drawn: Dict[Word, List[CorruptionPlan]] = {}
    for _ in range(mode.count):
        x = rng.choice(codebook)
        num_del = rng.randint(0, min(max_del, params.d, params.n))
        num_ins = rng.randint(0, min(max_ins, params.d - num_del))
        plan = random_plan(
            params.n, num_ins, num_del, rng.randrange(2**32), params.q, d=params.d
        )
        drawn.setdefault(x, []).append(plan)
    return [(x, tuple(plans)) for x, plans in drawn.items()]


def verify_exhaustive(
    params: CodeParams,
    mode: VerifyMode,
    *,
    max_ins: Optional[int] = None,
    max_del: Optional[int] = None,
    workers: int = 1,
    force: bool = False,
    check_bounds: bool = True,
) -> VerificationReport:
    n, d, q = params.n, params.d, params.q
    max_ins = d if max_ins is None else max_ins
    max_del = d if max_del is None else max_del
    if isinstance(mode, FullMode):
        per_word = count_plans(n, max_ins, max_del, q, d=d)
        estimate = -(-(q**n) // params.modulus) * per_word
        if estimate > FULL_RUN_LIMIT and not force:
            raise VerificationBudgetError(
                f"a full run over {params} needs about {estimate} decodes;"
                f" the limit is {FULL_RUN_LIMIT} without force"
            )
    start = time.perf_counter()
    codebook = tuple(enumerate_codebook(params))
    logger.info("codebook %s has %d codewords", params, len(codebook))

    tasks: List[_Task] = []
    if isinstance(mode, FullMode):
        tasks = [
            _Task(params, codebook, x, None, max_ins, max_del, check_bounds) for x in codebook
        ]
    elif codebook:
        tasks = [
            _Task(params, codebook, x, plans, max_ins, max_del, check_bounds)
            for x, plans in _sampled_plans(codebook, params, mode, max_ins, max_del)
        ]

    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_run_task, tasks)
    else:
        results = [_run_task(task) for task in tasks]

    tested = sum(count for count, _ in results)
    failures = sorted(
        (failure for _, chunk in results for failure in chunk),
        key=lambda failure: (failure.word, str(failure.plan)),
    )
    report = VerificationReport(params, len(codebook), tested, failures)
    report.elapsed = time.perf_counter() - start
    logger.info(
        "verified %d corruptions of %d codewords: %d failures",
        tested,
        len(codebook),
        len(failures),
    )
    return report
