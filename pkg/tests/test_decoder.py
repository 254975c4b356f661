import textwrap

import pytest
from helberg.channel import corrupt, enumerate_plans
from helberg.codebook import CodeParams, InvalidInputError, compute_budget, enumerate_codebook
from helberg.decoder import (
    Case,
    DecodeFailure,
    DecoderState,
    FullSolution,
    InvariantViolation,
    NoCodewordFound,
    ResolvedCase,
    answer_is_correct,
    decode,
    decode_brute_force_d1,
    step_one_candidates,
    step_two,
)
from helberg.trace import DecoderTrace
from helberg.words import format_word, parse_word


def test_step_one_candidates(
    binary_params: CodeParams, ternary_params: CodeParams, quaternary_params: CodeParams
) -> None:
    assert step_one_candidates(381, 10, binary_params) == {0, 1}
    assert step_one_candidates(147376, 9, quaternary_params) == {2, 3}
    assert step_one_candidates(135, 5, quaternary_params) == {0}
    assert step_one_candidates(49493, 10, ternary_params) == {2}


def test_answer_is_correct(binary_params: CodeParams, quaternary_params: CodeParams) -> None:
    x = parse_word("0011110001", 2)
    y = parse_word("00111000101", 2)
    assert answer_is_correct(x, 381, y, binary_params, 1)
    assert answer_is_correct(x, 381, x, binary_params, 0)
    assert not answer_is_correct(x[:-1], 381, y, binary_params, 1)
    assert not answer_is_correct(x, 981, y, binary_params, 1)
    assert not answer_is_correct(
        parse_word("013033003", 4), 147376, parse_word("013002103", 4), quaternary_params, 1
    )


def test_binary_example(binary_params: CodeParams) -> None:
    result = decode(parse_word("00111000101", 2), binary_params)
    assert format_word(result.word, 2) == "0011110001"
    assert result.verified
    substeps = "0111001,0111001,0011001,0011001,0011001,0011101,0011101"
    assert result.trace.lines() == [
        "preliminary p1=no y=00111000101 a=2 b=1 reduced=001110000 reduced_moment=27 moment=381",
        "step1 n_prime=10 m_prime=381 h=0,1 g=0",
        f"step2 n_prime=10 v1=2 v2=3 t=2 branch=iv m2=108 substeps={substeps} result=case1",
        "step1 n_prime=7 m_prime=55 h=0,1 g=0",
        "step2 n_prime=7 v1=5 v2=7 t=2 branch=iii m2=12 substeps=0011 result=solution",
        "result word=0011110001 verified=yes",
    ]


def test_ternary_example(ternary_params: CodeParams) -> None:
    result = decode(parse_word("1021210202", 3), ternary_params)
    assert format_word(result.word, 3) == "1021210222"
    assert result.verified

    preliminary = result.trace.preliminary()
    assert preliminary is not None
    assert preliminary.extra_deletion
    assert format_word(preliminary.y_working, 3) == "021210202"
    assert (preliminary.a, preliminary.b) == (1, 2)
    assert format_word(preliminary.reduced, 3) == "02121020"
    assert preliminary.reduced_moment == 1498
    assert preliminary.total_moment == 49493

    rows = [(e.n_prime, e.m_prime, e.g) for e in result.trace.step_one_events()]
    assert rows == [
        (10, 49493, 2),
        (9, 15887, 2),
        (8, 4377, 2),
        (7, 435, 0),
        (6, 435, 1),
        (5, 204, 2),
        (4, 46, 1),
        (3, 19, 2),
        (2, 1, 0),
        (1, 1, 1),
    ]
    assert all(len(e.h) == 1 for e in result.trace.step_one_events())
    assert result.trace.step_two_events() == []


def test_quaternary_example(quaternary_params: CodeParams) -> None:
    # x = 130200103 with its 4th symbol deleted and a 0 inserted in front
    result = decode(parse_word("013000103", 4), quaternary_params)
    assert format_word(result.word, 4) == "130200103"
    assert result.verified
    expected = """
    preliminary p1=no y=013000103 a=1 b=1 reduced=01300010 reduced_moment=3389 moment=147376
    step1 n_prime=9 m_prime=147376 h=2,3 g=2
    step2 n_prime=9 v1=1 v2=1 t=1 branch=iv m2=3472 substeps=1302001 result=solution
    result word=130200103 verified=yes
    """
    assert result.trace.to_text() == textwrap.dedent(expected).strip()


def test_quaternary_example_exploring_the_second_case(quaternary_params: CodeParams) -> None:
    result = decode(parse_word("013000103", 4), quaternary_params, tie_break=2)
    assert format_word(result.word, 4) == "130200103"
    assert result.verified

    first, second = result.trace.step_two_events()
    assert (first.n_prime, first.v1, first.v2, first.t, first.branch) == (9, 1, 1, 2, "iv")
    assert first.m_double_prime == 13484
    assert [format_word(word, 4) for word in first.substeps] == [
        "1300013",
        "0300013",
        "0100013",
        "0130013",
        "0130013",
        "0130013",
        "0130003",
    ]
    assert first.result == "case1"

    assert (second.n_prime, second.v1, second.v2, second.t, second.branch) == (7, 3, 4, 2, "iii")
    assert second.m_double_prime == 832
    assert [format_word(word, 4) for word in second.substeps] == ["01303"]
    assert second.result == "case1"

    m_primes = {e.n_prime: e.m_prime for e in result.trace.step_one_events()}
    assert m_primes[5] == 135


def test_word_outside_the_model(quaternary_params: CodeParams) -> None:
    # four indels away from 130200103, beyond d = 2
    result = decode(parse_word("013002103", 4), quaternary_params)
    assert format_word(result.word, 4) == "330233332"
    assert not result.verified

    preliminary = result.trace.preliminary()
    assert preliminary is not None
    assert preliminary.reduced_moment == 5149
    assert preliminary.total_moment == 147376

    # no supersequence fits the explored case, so the other case is taken
    (event,) = result.trace.step_two_events()
    assert (event.v1, event.v2, event.t, event.branch) == (1, 1, 1, "iv")
    assert event.m_double_prime == 3472
    assert [format_word(word, 4) for word in event.substeps] == [
        "1300213",
        "0300213",
        "0100213",
        "0130213",
        "0130213",
        "0130013",
        "0130023",
    ]
    assert event.result == "case2"
    rows = [(e.n_prime, e.m_prime, e.g) for e in result.trace.step_one_events()]
    assert rows == [
        (9, 147376, 2),
        (7, 13484, 3),
        (6, 3473, 3),
        (5, 833, 3),
        (4, 137, 2),
        (3, 15, 0),
        (2, 15, 3),
        (1, 3, 3),
    ]


def test_uncorrupted_words_decode_to_themselves(binary_params: CodeParams) -> None:
    for x in enumerate_codebook(binary_params):
        assert decode(x, binary_params).word == x


@pytest.mark.parametrize("n, d", [(1, 3), (1, 4), (2, 4)])
def test_short_codes_delete_every_received_symbol(n: int, d: int) -> None:
    params = CodeParams.create(n, d, 2, 0)
    x = (0,) * n
    result = decode(x, params)
    assert result.word == x
    assert result.verified
    preliminary = result.trace.preliminary()
    assert preliminary is not None
    assert preliminary.reduced == ()


def test_short_code_after_the_extra_deletion() -> None:
    result = decode((0,), CodeParams.create(2, 4, 2, 0))
    assert result.word == (0, 0)
    preliminary = result.trace.preliminary()
    assert preliminary is not None
    assert preliminary.extra_deletion
    assert (preliminary.y_working, preliminary.a) == ((), 1)


def test_decode_rejects_bad_input(binary_params: CodeParams) -> None:
    with pytest.raises(InvalidInputError):
        decode((0,) * 14, binary_params)
    with pytest.raises(InvalidInputError):
        decode((0,) * 10, binary_params, tie_break=3)
    with pytest.raises(ValueError):
        decode((0, 2, 0, 0, 0, 0, 0, 0, 0, 0), binary_params)


def test_step_two_resolves_the_first_visit(binary_params: CodeParams) -> None:
    y = parse_word("00111000101", 2)
    state = DecoderState(binary_params, y, compute_budget(len(y), binary_params), 381, 10, ())
    trace = DecoderTrace(2)
    outcome = step_two(state, 0, trace=trace)
    assert isinstance(outcome, ResolvedCase)
    assert outcome.case.which is Case.CASE1
    assert outcome.case.pattern == (0, 0, 1)
    assert len(trace) == 1

    state = state.advance(outcome.case.pattern)
    assert (state.n_prime, state.m_prime) == (7, 55)
    outcome = step_two(state, 0)
    assert outcome == FullSolution(parse_word("0011110001", 2))


def test_step_two_guards(binary_params: CodeParams) -> None:
    y = parse_word("00111000101", 2)
    budget = compute_budget(len(y), binary_params)
    state = DecoderState(binary_params, y, budget, 381, 10, ())
    with pytest.raises(InvariantViolation):
        step_two(state, 1)
    state = DecoderState(binary_params, y, budget, 381, 2, (0,) * 8)
    with pytest.raises(InvariantViolation):
        step_two(state, 0)


def test_single_indel_brute_force() -> None:
    params = CodeParams.create(2, 1, 2, 0)
    assert decode_brute_force_d1((0, 0, 0), params) == (0, 0)
    assert decode_brute_force_d1((0,), params) == (0, 0)
    assert decode_brute_force_d1((1,), params) == (1, 1)
    assert decode_brute_force_d1((1, 1), params) == (1, 1)
    with pytest.raises(NoCodewordFound):
        decode_brute_force_d1((0, 1), params)


def test_single_indel_decode_records_the_search() -> None:
    params = CodeParams.create(4, 1, 2, 0)
    result = decode((0, 0, 0), params)
    assert result.word == (0, 0, 0, 0)
    assert result.verified
    assert result.trace.to_text().splitlines() == [
        "bruteforce y=000 tried=1 found=0000",
        "result word=0000 verified=yes",
    ]


def test_single_indel_failure_carries_the_trace() -> None:
    params = CodeParams.create(2, 1, 2, 0)
    with pytest.raises(DecodeFailure) as excinfo:
        decode((0, 1), params)
    assert excinfo.value.trace is not None
    assert excinfo.value.trace.lines() == ["bruteforce y=01 tried=0 found=none"]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_every_single_indel_is_corrected(n: int) -> None:
    modulus = CodeParams.create(n, 1, 2).modulus
    for r in range(modulus):
        params = CodeParams.create(n, 1, 2, r)
        for x in enumerate_codebook(params):
            for plan in enumerate_plans(n, 1, 1, 2, d=1):
                assert decode(corrupt(x, plan), params).word == x, (x, str(plan))


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_every_single_indel_is_corrected_full_scale(n: int) -> None:
    test_every_single_indel_is_corrected(n)
