"""Text form of words.

Words over an alphabet with at most ten symbols are written as digit strings
(``0011110001``); larger alphabets use comma-separated decimals
(``12,0,7``).  The empty word is the empty string.
"""

from typing import Sequence

from helberg.codebook import CodecError, Word


class WordFormatError(CodecError, ValueError):
    pass


def check_word(word: Sequence[int], q: int) -> None:
    for position, symbol in enumerate(word, 1):
        if not 0 <= symbol < q:
            raise WordFormatError(
                f"symbol {symbol} at position {position} is outside the alphabet 0..{q - 1}"
            )


def parse_word(text: str, q: int) -> Word:
    text = text.strip()
    if not text:
        return ()
    if q <= 10:
        if not text.isdigit():
            raise WordFormatError(f"expected a digit string, got {text!r}")
        word = tuple(int(ch) for ch in text)
    else:
        try:
            word = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise WordFormatError(f"expected comma-separated symbols, got {text!r}") from None
    check_word(word, q)
    return word


def format_word(word: Sequence[int], q: int) -> str:
    if q <= 10:
        return "".join(str(symbol) for symbol in word)
    return ",".join(str(symbol) for symbol in word)
