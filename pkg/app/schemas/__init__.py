"""
Schemas package for Pydantic models.
"""

from .base import ErrorResponse, FrozenModel
from .builder import BuilderConfig
from .codebook import Codebook, CodebookEntry, kraft_sum, require_prefix_free, validate_prefix_free
from .codec import BlockSpectrum, CodecConfig, CodecHeader, JpegDnaBitstreamLayout, RunCategorySymbol
from .nucleotide import NUCLEOTIDES, NucleotideStream
from .report import BenchSpec, CoderRate, RateReport, RealizationReport, SummaryStat
from .source import GaussianSourceConfig, SourceRealization
from .symbols import FrequencyEntry, FrequencyTable, Symbol

__all__ = [
    "ErrorResponse",
    "FrozenModel",
    "BuilderConfig",
    "Codebook",
    "CodebookEntry",
    "kraft_sum",
    "require_prefix_free",
    "validate_prefix_free",
    "BlockSpectrum",
    "CodecConfig",
    "CodecHeader",
    "JpegDnaBitstreamLayout",
    "RunCategorySymbol",
    "NUCLEOTIDES",
    "NucleotideStream",
    "BenchSpec",
    "CoderRate",
    "RateReport",
    "RealizationReport",
    "SummaryStat",
    "GaussianSourceConfig",
    "SourceRealization",
    "FrequencyEntry",
    "FrequencyTable",
    "Symbol",
]
