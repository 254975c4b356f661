import itertools
import logging

import pytest
from helberg.codebook import (
    CodeParams,
    InvalidInputError,
    InvalidParameterError,
    LengthMismatchError,
    build_weights,
    codebook_size,
    compute_budget,
    enumerate_codebook,
    export_weights,
    is_codeword,
    max_moment,
    moment,
    partial_moment,
    possible_moments,
)
from helberg.words import parse_word

TABLE_BINARY_D3 = (0, 1, 2, 4, 8, 15, 28, 52, 96, 177, 326, 600)
TABLE_TERNARY_D3 = (0, 1, 3, 9, 27, 79, 231, 675, 1971, 5755, 16803, 49059)
TABLE_QUATERNARY_D2 = (0, 1, 4, 16, 61, 232, 880, 3337, 12652, 47968, 181861)


def test_weight_tables() -> None:
    assert build_weights(2, 3, 12) == TABLE_BINARY_D3
    assert build_weights(3, 3, 12) == TABLE_TERNARY_D3
    assert build_weights(4, 2, 11) == TABLE_QUATERNARY_D2
    assert build_weights(5, 4, 1) == (0,)
    assert build_weights(2, 1, 3) == (0, 1, 2)


def test_weights_are_exact_for_long_tables() -> None:
    weights = build_weights(4, 2, 40)
    assert weights[39] > 2**64
    assert weights == build_weights(4, 2, 40)
    for i in range(3, 40):
        assert weights[i] == 1 + 3 * (weights[i - 1] + weights[i - 2])


@pytest.mark.parametrize("q, d, count", [(1, 2, 5), (2, 0, 5), (2, 2, 0)])
def test_invalid_weight_parameters(q: int, d: int, count: int) -> None:
    with pytest.raises(InvalidParameterError):
        build_weights(q, d, count)


def test_export_weights() -> None:
    assert export_weights(build_weights(2, 1, 3)) == "0\n1\n2"


def test_moment_of_worked_examples() -> None:
    assert moment(parse_word("0011110001", 2), TABLE_BINARY_D3) == 381
    assert moment(parse_word("1021210222", 3), TABLE_TERNARY_D3) == 49493
    assert moment(parse_word("130200103", 4), TABLE_QUATERNARY_D2) == 147376
    assert moment((), (0,)) == 0


def test_moment_needs_long_enough_table() -> None:
    with pytest.raises(LengthMismatchError):
        moment((1, 1, 1), (0, 1, 2))


def test_partial_moment(binary_params: CodeParams, ternary_params: CodeParams) -> None:
    assert partial_moment(381, (), 10, binary_params) == 381
    assert partial_moment(381, (0, 0, 1), 7, binary_params) == 55
    assert partial_moment(49493, (2, 2, 2), 7, ternary_params) == 435


def test_partial_moment_decomposes_the_moment(binary_params: CodeParams) -> None:
    x = parse_word("0011110001", 2)
    for n_prime in range(11):
        prefix_moment = moment(x[:n_prime], binary_params.weights)
        assert partial_moment(381, x[n_prime:], n_prime, binary_params) == prefix_moment


def test_code_params(binary_params: CodeParams) -> None:
    assert binary_params.modulus == 600
    assert binary_params.p == 1
    assert binary_params.weight(0) == 0
    assert binary_params.weight(-2) == 0
    assert binary_params.weight(11) == 600
    assert str(binary_params) == "n=10,d=3,q=2,r=381"


def test_residue_is_reduced_with_a_warning(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger="helberg.codebook"):
        params = CodeParams.create(10, 3, 2, 981)
    assert params.r == 381
    assert "reduced" in caplog.text
    assert params == CodeParams.create(10, 3, 2, 381)


def test_invalid_code_params() -> None:
    with pytest.raises(InvalidParameterError):
        CodeParams.create(0, 3, 2)
    with pytest.raises(InvalidParameterError):
        CodeParams(3, 1, 2, 9, build_weights(2, 1, 5))
    with pytest.raises(InvalidParameterError):
        CodeParams(3, 1, 2, 0, build_weights(2, 1, 4))


def test_is_codeword(
    binary_params: CodeParams, quaternary_params: CodeParams
) -> None:
    assert is_codeword(parse_word("0011110001", 2), binary_params)
    assert is_codeword(parse_word("130200103", 4), quaternary_params)
    assert not is_codeword((0,) * 10, CodeParams.create(10, 3, 2, 1))
    with pytest.raises(LengthMismatchError):
        is_codeword((0, 1), binary_params)


def test_enumerate_small_codebooks() -> None:
    # weights 0, 1, 2, 3: M(00) = 0 and M(11) = 3 are both multiples of 3
    assert list(enumerate_codebook(CodeParams.create(2, 1, 2, 0))) == [(0, 0), (1, 1)]
    assert list(enumerate_codebook(CodeParams.create(1, 1, 2, 0))) == [(0,)]


def test_enumerate_codebook_is_sorted_and_complete(binary_params: CodeParams) -> None:
    codebook = list(enumerate_codebook(binary_params))
    assert codebook == sorted(codebook)
    assert parse_word("0011110001", 2) in codebook
    assert codebook_size(binary_params) == len(codebook)
    expected = [
        x
        for x in itertools.product(range(2), repeat=10)
        if moment(x, binary_params.weights) % 600 == 381
    ]
    assert codebook == expected


def test_codebooks_partition_the_space() -> None:
    n, d, q = 4, 2, 3
    modulus = CodeParams.create(n, d, q).modulus
    sizes = [codebook_size(CodeParams.create(n, d, q, r)) for r in range(modulus)]
    assert sum(sizes) == q**n


def test_moment_bound(binary_params: CodeParams) -> None:
    assert max_moment(binary_params) == 709
    assert max_moment(binary_params) < 2 * binary_params.modulus
    assert possible_moments(binary_params) == (381, 981)


@pytest.mark.parametrize("n, d, q", [(5, 2, 2), (6, 3, 2), (4, 2, 3), (5, 3, 3), (4, 2, 4)])
def test_codeword_moments_take_two_values(n: int, d: int, q: int) -> None:
    for r in (0, 1):
        params = CodeParams.create(n, d, q, r)
        for x in enumerate_codebook(params):
            assert moment(x, params.weights) in possible_moments(params)


def test_compute_budget(
    binary_params: CodeParams, quaternary_params: CodeParams
) -> None:
    budget = compute_budget(11, binary_params)
    assert (budget.a, budget.b) == (2, 1)
    assert not budget.needs_extra_deletion
    budget = compute_budget(10, binary_params)
    assert (budget.a, budget.b) == (1, 1)
    assert budget.needs_extra_deletion
    budget = compute_budget(9, quaternary_params)
    assert (budget.a, budget.b) == (1, 1)
    assert not budget.needs_extra_deletion


def test_compute_budget_rejects_far_lengths(binary_params: CodeParams) -> None:
    with pytest.raises(InvalidInputError):
        compute_budget(14, binary_params)
    with pytest.raises(InvalidInputError):
        compute_budget(6, binary_params)


def test_budget_sums_to_d_or_one_less(binary_params: CodeParams) -> None:
    for len_y in range(7, 14):
        budget = compute_budget(len_y, binary_params)
        assert budget.a + budget.b in (2, 3)
        assert budget.a >= 0 and budget.b >= 0
