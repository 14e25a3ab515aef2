"""
JPEG-DNA codec schemas.
"""

from typing import Literal, Optional

from pydantic import Field, field_validator, model_validator

from .base import FrozenModel

MAX_CATEGORY = 11
MAX_RUN = 15

# AC symbol ids: EOB, ZRL, then every (run, category) with category >= 1
EOB_ID = 0
ZRL_ID = 1
AC_ALPHABET_SIZE = 2 + (MAX_RUN + 1) * MAX_CATEGORY
DC_ALPHABET_SIZE = MAX_CATEGORY + 1


class CodecConfig(FrozenModel):
    quality: int = Field(50, ge=1, le=100)
    vlc_kind: Literal["sfc", "goldman"] = "sfc"
    max_hl: int = Field(3, ge=2)
    block_size: Literal[8] = 8


class BlockSpectrum(FrozenModel):
    """Quantized coefficients of one 8x8 block; AC in zigzag order."""

    dc: int
    ac: tuple[int, ...]

    @field_validator("ac")
    @classmethod
    def _sixty_three(cls, ac: tuple[int, ...]) -> tuple[int, ...]:
        if len(ac) != 63:
            raise ValueError(f"a block carries 63 AC coefficients, got {len(ac)}")
        return ac


class RunCategorySymbol(FrozenModel):
    run: int = Field(0, ge=0, le=MAX_RUN)
    category: int = Field(0, ge=0, le=MAX_CATEGORY)
    marker: Optional[Literal["EOB", "ZRL"]] = None

    @model_validator(mode="after")
    def _marker_or_value(self) -> "RunCategorySymbol":
        if self.marker is None and self.category == 0:
            raise ValueError("a run/category symbol without a marker needs category >= 1")
        if self.marker is not None and (self.run or self.category):
            raise ValueError("EOB and ZRL carry no run or category")
        return self

    @property
    def id(self) -> int:
        if self.marker == "EOB":
            return EOB_ID
        if self.marker == "ZRL":
            return ZRL_ID
        return 2 + self.run * MAX_CATEGORY + (self.category - 1)

    @classmethod
    def from_id(cls, symbol_id: int) -> "RunCategorySymbol":
        if symbol_id == EOB_ID:
            return cls(marker="EOB")
        if symbol_id == ZRL_ID:
            return cls(marker="ZRL")
        run, cat = divmod(symbol_id - 2, MAX_CATEGORY)
        return cls(run=run, category=cat + 1)

    @property
    def label(self) -> str:
        return self.marker or f"{self.run}/{self.category}"


def ac_label(symbol_id: int) -> str:
    if symbol_id == EOB_ID:
        return "EOB"
    if symbol_id == ZRL_ID:
        return "ZRL"
    run, cat = divmod(symbol_id - 2, MAX_CATEGORY)
    return f"{run}/{cat + 1}"


class JpegDnaBitstreamLayout(FrozenModel):
    """
    Symbol streams of an image before nucleotide serialization.

    ``value_categories[i]`` and ``value_indices[i]`` describe the i-th
    nonzero value (DC differences and AC coefficients interleaved in coding
    order); category-0 DC differences carry no value.
    """

    dc_categories: tuple[int, ...]
    ac_symbols: tuple[int, ...]
    value_categories: tuple[int, ...]
    value_indices: tuple[int, ...]

    @model_validator(mode="after")
    def _values_paired(self) -> "JpegDnaBitstreamLayout":
        if len(self.value_categories) != len(self.value_indices):
            raise ValueError("value categories and indices differ in length")
        return self


class CodecHeader(FrozenModel):
    """Fields serialized at the front of every encoded image."""

    version: int = 1
    height: int = Field(..., ge=0)
    width: int = Field(..., ge=0)
    quality: int = Field(..., ge=1, le=100)
    vlc_kind: Literal["sfc", "goldman"]
    max_hl: int = Field(..., ge=2)
    initial_nucleotide: Literal["A", "C", "G", "T"] = "A"
    # (symbol id, count) for every observed symbol, ascending id
    dc_table: tuple[tuple[int, int], ...]
    ac_table: tuple[tuple[int, int], ...]

    @property
    def config(self) -> CodecConfig:
        return CodecConfig(quality=self.quality, vlc_kind=self.vlc_kind, max_hl=self.max_hl)
