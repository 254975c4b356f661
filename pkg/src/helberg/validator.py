from typing import Sequence

from helberg.codebook import CodecError, CodeParams


class ValidationError(CodecError):
    pass


class TableValidator:
    def __init__(self, q: int, d: int) -> None:
        self.q = q
        self.d = d

    def validate_table(self, weights: Sequence[int]) -> None:
        if not weights or weights[0] != 0:
            raise ValidationError("a weight table starts with w_0 = 0")
        for i in range(1, len(weights)):
            self.check(i, weights)

    def check(self, i: int, weights: Sequence[int]) -> None:
        pass


class RecurrenceValidator(TableValidator):
    def check(self, i: int, weights: Sequence[int]) -> None:
        window = sum(weights[max(i - self.d, 0) : i])
        expected = 1 + (self.q - 1) * window
        if weights[i] != expected:
            raise ValidationError(
                f"w_{i} = {weights[i]} breaks the recurrence, expected {expected}"
            )


class MonotonicValidator(TableValidator):
    def check(self, i: int, weights: Sequence[int]) -> None:
        if weights[i] <= weights[i - 1]:
            raise ValidationError(f"weights are not increasing at w_{i} = {weights[i]}")


class DominanceValidator(TableValidator):
    """``w_c`` exceeds ``p`` times the sum of ``w_1 .. w_{c-2}``."""

    def check(self, i: int, weights: Sequence[int]) -> None:
        if self.d < 2:
            # with d = 1 the sums catch up with the weights
            return
        far = (self.q - 1) * sum(weights[1 : max(i - 1, 1)])
        if weights[i] <= far:
            raise ValidationError(
                f"w_{i} = {weights[i]} does not dominate the weights up to w_{i - 2}"
            )


def validate_weights(weights: Sequence[int], q: int, d: int) -> None:
    for validator_cls in TableValidator.__subclasses__():
        validator = validator_cls(q, d)
        validator.validate_table(weights)


def validate_params(params: CodeParams) -> None:
    validate_weights(params.weights, params.q, params.d)
    if not 0 <= params.r < params.modulus:
        raise ValidationError(f"residue {params.r} is outside [0, {params.modulus})")
