"""
Benchmark specification and rate report schemas.
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, field_validator, model_validator

from .base import FrozenModel
from .source import GaussianSourceConfig

KNOWN_CODERS = ("sfc", "goldman", "huffman2", "huffman3", "huffman4", "huffman4-constrained")
DEFAULT_CODERS = ("huffman4", "sfc", "huffman4-constrained", "goldman")


class BenchSpec(FrozenModel):
    source: Literal["gaussian", "table-file"] = "gaussian"
    gaussian: GaussianSourceConfig = GaussianSourceConfig()
    table_file: Optional[Path] = None
    # table-file sources: samples per realization and base seed
    samples: int = Field(10000, ge=1)
    seed: int = Field(2023, ge=0)
    realizations: int = Field(1, ge=1)
    exact: bool = False
    coders: tuple[str, ...] = DEFAULT_CODERS
    max_hl: int = Field(3, ge=2)
    out_dir: Path = Path("out")
    jobs: int = Field(1, ge=1)

    @field_validator("coders")
    @classmethod
    def _known_coders(cls, coders: tuple[str, ...]) -> tuple[str, ...]:
        if not coders:
            raise ValueError("select at least one coder")
        unknown = [c for c in coders if c not in KNOWN_CODERS]
        if unknown:
            raise ValueError(f"unknown coders {unknown}; choose from {', '.join(KNOWN_CODERS)}")
        return tuple(dict.fromkeys(coders))

    @model_validator(mode="after")
    def _table_file_present(self) -> "BenchSpec":
        if self.source == "table-file" and self.table_file is not None and not self.table_file.is_file():
            raise ValueError(f"table file {self.table_file} does not exist")
        if self.exact and self.source != "table-file":
            raise ValueError("exact evaluation needs a table-file source")
        return self


class CoderRate(FrozenModel):
    coder: str
    radix: int
    expected_length: float
    # None when the coder has no nucleotide mapping or nothing was transcoded
    stream_max_run: Optional[int] = None
    codeword_max_run: Optional[int] = None


class RealizationReport(FrozenModel):
    index: int
    origin: str
    sample_count: int
    entropy_2: float
    entropy_3: float
    entropy_4: float
    coders: tuple[CoderRate, ...]

    def rate(self, coder: str) -> Optional[CoderRate]:
        return next((c for c in self.coders if c.coder == coder), None)


class SummaryStat(FrozenModel):
    mean: float
    std: float


class RateReport(FrozenModel):
    """All realizations of one bench run plus mean/std per column."""

    schema_version: int = 1
    source: str
    max_hl: int
    coders: tuple[str, ...]
    realizations: tuple[RealizationReport, ...]
    summary: dict[str, SummaryStat]
