"""
JPEG-style symbol modeling: DC differences by category, AC coefficients as
run/category symbols with EOB and ZRL, and within-category value indices.
"""

from typing import Callable, Iterable, Iterator, Sequence

from app.errors import CategoryOverflowError, DesynchronizationError
from app.schemas.codec import (
    EOB_ID,
    MAX_CATEGORY,
    MAX_RUN,
    ZRL_ID,
    BlockSpectrum,
    JpegDnaBitstreamLayout,
    RunCategorySymbol,
)

AC_COUNT = 63


def category(value: int) -> int:
    """Bit length of |value|."""
    cat = abs(value).bit_length()
    if cat > MAX_CATEGORY:
        raise CategoryOverflowError("category_overflow", f"value {value} needs category {cat} > {MAX_CATEGORY}")
    return cat


def value_index(value: int, cat: int) -> int:
    """Within-category index: positives map to themselves, negatives to v + 2^c - 1."""
    return value if value > 0 else value + (1 << cat) - 1


def value_from_index(index: int, cat: int) -> int:
    if cat == 0:
        return 0
    return index if index >= 1 << (cat - 1) else index - (1 << cat) + 1


def ac_symbol_id(run: int, cat: int) -> int:
    return RunCategorySymbol(run=run, category=cat).id


def _ac_symbols(ac: Sequence[int]) -> Iterator[tuple[int, int, int]]:
    """(symbol id, category, value) triples for one block; markers carry category 0."""
    run = 0
    for coef in ac:
        if coef == 0:
            run += 1
            continue
        while run > MAX_RUN:
            yield ZRL_ID, 0, 0
            run -= MAX_RUN + 1
        cat = category(coef)
        yield 2 + run * MAX_CATEGORY + (cat - 1), cat, coef
        run = 0
    if run:
        yield EOB_ID, 0, 0


def categorize(blocks: Iterable[BlockSpectrum]) -> JpegDnaBitstreamLayout:
    """
    Split block spectra into the DC category, AC run/category and value streams.

    DC is predicted from the previous block's DC (0 for the first block).

    Raises:
        CategoryOverflowError: If a DC difference or AC value needs more than 11 bits
    """
    dc_cats: list[int] = []
    ac_ids: list[int] = []
    val_cats: list[int] = []
    val_idx: list[int] = []
    previous = 0
    for block in blocks:
        diff = block.dc - previous
        previous = block.dc
        cat = category(diff)
        dc_cats.append(cat)
        if cat:
            val_cats.append(cat)
            val_idx.append(value_index(diff, cat))
        for symbol_id, cat, coef in _ac_symbols(block.ac):
            ac_ids.append(symbol_id)
            if cat:
                val_cats.append(cat)
                val_idx.append(value_index(coef, cat))
    return JpegDnaBitstreamLayout(
        dc_categories=tuple(dc_cats),
        ac_symbols=tuple(ac_ids),
        value_categories=tuple(val_cats),
        value_indices=tuple(val_idx),
    )


def decategorize(
    dc_categories: Sequence[int],
    ac_symbols: Sequence[int],
    read_value: Callable[[int], int],
    block_count: int,
) -> list[BlockSpectrum]:
    """
    Rebuild block spectra from decoded category streams.

    Args:
        dc_categories: Decoded DC category symbols
        ac_symbols: Decoded AC run/category symbol ids
        read_value: Returns the next signed value of the given category
        block_count: Number of blocks in the image

    Raises:
        DesynchronizationError: If a stream runs out early, an AC run passes
            the end of a block, or category symbols are left over
    """
    if len(dc_categories) < block_count:
        raise DesynchronizationError("truncated_stream", len(dc_categories), "DC stream ends before the last block")
    blocks: list[BlockSpectrum] = []
    ac_pos = 0
    previous = 0
    for index in range(block_count):
        cat = dc_categories[index]
        if cat > MAX_CATEGORY:
            raise DesynchronizationError("bad_symbol", index, f"DC category {cat} out of range")
        dc = previous + (read_value(cat) if cat else 0)
        previous = dc
        ac = [0] * AC_COUNT
        pos = 0
        while pos < AC_COUNT:
            if ac_pos >= len(ac_symbols):
                raise DesynchronizationError("truncated_stream", ac_pos, "AC stream ends inside a block")
            symbol_id = ac_symbols[ac_pos]
            ac_pos += 1
            if symbol_id == EOB_ID:
                break
            if symbol_id == ZRL_ID:
                pos += MAX_RUN + 1
                if pos >= AC_COUNT:
                    raise DesynchronizationError("run_overflow", ac_pos - 1, f"ZRL passes the end of block {index}")
                continue
            symbol = RunCategorySymbol.from_id(symbol_id)
            pos += symbol.run
            if pos >= AC_COUNT:
                raise DesynchronizationError("run_overflow", ac_pos - 1, f"AC run passes the end of block {index}")
            ac[pos] = read_value(symbol.category)
            pos += 1
        blocks.append(BlockSpectrum(dc=dc, ac=tuple(ac)))

    if len(dc_categories) != block_count:
        raise DesynchronizationError("trailing_symbols", block_count, "DC stream has symbols past the last block")
    if ac_pos != len(ac_symbols):
        raise DesynchronizationError("trailing_symbols", ac_pos, "AC stream has symbols past the last block")
    return blocks


def layout_to_blocks(layout: JpegDnaBitstreamLayout, block_count: int) -> list[BlockSpectrum]:
    """Inverse of ``categorize`` on an in-memory layout."""
    pairs = iter(zip(layout.value_categories, layout.value_indices))

    def read_value(cat: int) -> int:
        stored_cat, index = next(pairs, (None, None))
        if stored_cat != cat:
            raise DesynchronizationError("value_mismatch", 0, f"expected a category-{cat} value, found {stored_cat}")
        return value_from_index(index, cat)

    blocks = decategorize(layout.dc_categories, layout.ac_symbols, read_value, block_count)
    if next(pairs, None) is not None:
        raise DesynchronizationError("trailing_symbols", len(layout.value_indices), "values left after the last block")
    return blocks
