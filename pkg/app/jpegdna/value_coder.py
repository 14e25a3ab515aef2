"""
Fixed-length quaternary value coder.

Values are written with the twelve nucleotide pairs whose two bases differ,
as base-12 digits, most significant first. A category-c index always takes
the same number of pairs: the smallest k with 12**k >= 2**c.
"""

from functools import lru_cache

from app.errors import DesynchronizationError, InputError

PAIRS = tuple(a + b for a in "ACGT" for b in "ACGT" if a != b)
PAIR_INDEX = {pair: i for i, pair in enumerate(PAIRS)}
RADIX = len(PAIRS)


@lru_cache(maxsize=None)
def pairs_for_category(cat: int) -> int:
    k = 0
    while RADIX**k < 1 << cat:
        k += 1
    return k


def digits_to_pairs(value: int, width: int, radix: int = RADIX) -> str:
    """``value`` as ``width`` base-``radix`` digits spelled with PAIRS."""
    out = []
    for _ in range(width):
        value, digit = divmod(value, radix)
        out.append(PAIRS[digit])
    if value:
        raise InputError("value_too_wide", f"value does not fit in {width} base-{radix} digits")
    return "".join(reversed(out))


def encode_value(index: int, cat: int) -> str:
    if not 0 <= index < 1 << cat:
        raise InputError("bad_value_index", f"index {index} outside category {cat}")
    return digits_to_pairs(index, pairs_for_category(cat))


def encode_values(categories, indices) -> str:
    return "".join(encode_value(index, cat) for cat, index in zip(categories, indices))


class PairReader:
    """Sequential reader over a pair-coded nucleotide string."""

    def __init__(self, bases: str, stream: str = "values"):
        self.bases = bases
        self.stream = stream
        self.offset = 0

    def read_pair(self) -> int:
        pair = self.bases[self.offset : self.offset + 2]
        if len(pair) < 2:
            raise DesynchronizationError(
                "truncated_stream", self.offset, f"{self.stream} stream ends in the middle of a value"
            )
        digit = PAIR_INDEX.get(pair)
        if digit is None:
            raise DesynchronizationError("bad_pair", self.offset, f"{pair!r} is not a value-coder pair")
        self.offset += 2
        return digit

    def read_index(self, cat: int) -> int:
        start = self.offset
        index = 0
        for _ in range(pairs_for_category(cat)):
            index = index * RADIX + self.read_pair()
        if index >= 1 << cat:
            raise DesynchronizationError("bad_value", start, f"index {index} outside category {cat}")
        return index

    def exhausted(self) -> bool:
        return self.offset >= len(self.bases)
