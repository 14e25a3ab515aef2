"""
Nucleotide serialization of the codec header.

Every header integer is written as base-11 digits over the first eleven
value-coder pairs, most significant first, closed by the twelfth pair.
"""

import logging

from app.errors import DesynchronizationError, StructuralError
from app.schemas.codec import AC_ALPHABET_SIZE, DC_ALPHABET_SIZE, CodecHeader

from .value_coder import PAIRS, PairReader

logger = logging.getLogger(__name__)

DIGIT_RADIX = len(PAIRS) - 1
TERMINATOR = PAIRS[-1]
VLC_KINDS = ("sfc", "goldman")
NUCLEOTIDE_ORDER = "ACGT"


def encode_int(value: int) -> str:
    if value < 0:
        raise ValueError("header integers are non-negative")
    digits = []
    while True:
        value, digit = divmod(value, DIGIT_RADIX)
        digits.append(PAIRS[digit])
        if not value:
            break
    return "".join(reversed(digits)) + TERMINATOR


def _read_int(reader: PairReader) -> int:
    value = 0
    ndigits = 0
    while True:
        digit = reader.read_pair()
        if digit == DIGIT_RADIX:
            break
        value = value * DIGIT_RADIX + digit
        ndigits += 1
    if not ndigits:
        raise StructuralError("bad_header", f"empty integer field at offset {reader.offset - 2}")
    return value


def _table_ints(table: tuple[tuple[int, int], ...]) -> list[int]:
    out = [len(table)]
    for symbol_id, count in table:
        out.extend((symbol_id, count))
    return out


def encode_header(header: CodecHeader) -> str:
    fields = [
        header.version,
        header.height,
        header.width,
        header.quality,
        VLC_KINDS.index(header.vlc_kind),
        header.max_hl,
        NUCLEOTIDE_ORDER.index(header.initial_nucleotide),
        *_table_ints(header.dc_table),
        *_table_ints(header.ac_table),
    ]
    return "".join(encode_int(v) for v in fields)


def _read_table(reader: PairReader, alphabet_size: int, name: str) -> tuple[tuple[int, int], ...]:
    size = _read_int(reader)
    entries = []
    for _ in range(size):
        symbol_id = _read_int(reader)
        count = _read_int(reader)
        if symbol_id >= alphabet_size:
            raise StructuralError("bad_header", f"{name} table symbol {symbol_id} outside alphabet")
        if entries and symbol_id <= entries[-1][0]:
            raise StructuralError("bad_header", f"{name} table ids are not increasing")
        entries.append((symbol_id, count))
    return tuple(entries)


def decode_header(bases: str) -> CodecHeader:
    """
    Parse a serialized header.

    Raises:
        StructuralError: If a field is out of range or bases remain after the last field
        DesynchronizationError: If the header is truncated or holds a non-pair
    """
    reader = PairReader(bases, stream="header")
    version = _read_int(reader)
    if version != 1:
        raise StructuralError("bad_header", f"unsupported header version {version}")
    height, width, quality, vlc, max_hl, initial = (_read_int(reader) for _ in range(6))
    if vlc >= len(VLC_KINDS) or initial >= len(NUCLEOTIDE_ORDER) or not 1 <= quality <= 100 or max_hl < 2:
        raise StructuralError("bad_header", "header field out of range")
    dc_table = _read_table(reader, DC_ALPHABET_SIZE, "DC")
    ac_table = _read_table(reader, AC_ALPHABET_SIZE, "AC")
    if not reader.exhausted():
        raise DesynchronizationError("trailing_symbols", reader.offset, "bases left after the header")
    return CodecHeader(
        version=version,
        height=height,
        width=width,
        quality=quality,
        vlc_kind=VLC_KINDS[vlc],
        max_hl=max_hl,
        initial_nucleotide=NUCLEOTIDE_ORDER[initial],
        dc_table=dc_table,
        ac_table=ac_table,
    )
