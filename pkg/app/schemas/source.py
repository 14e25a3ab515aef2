"""
Source configuration and realization schemas.
"""

from pydantic import Field, model_validator

from .base import FrozenModel


class GaussianSourceConfig(FrozenModel):
    """
    i.i.d. Gaussian source quantized by a uniform midrise quantizer with
    ``alphabet_size`` bins over [-support_sigmas * sigma, +support_sigmas * sigma];
    samples beyond the support fall into the end bins.
    """

    realizations: int = Field(100, ge=1)
    samples_per_realization: int = Field(10000, ge=1)
    alphabet_size: int = Field(162, ge=2)
    seed: int = Field(2023, ge=0)
    sigma: float = Field(1.0, gt=0)
    support_sigmas: float = Field(2.7, gt=0)


class SourceRealization(FrozenModel):
    symbols: tuple[int, ...]
    alphabet_size: int = Field(..., ge=1)
    origin: str

    @model_validator(mode="after")
    def _ids_in_alphabet(self) -> "SourceRealization":
        if self.symbols and (min(self.symbols) < 0 or max(self.symbols) >= self.alphabet_size):
            raise ValueError(f"symbol ids must lie in [0, {self.alphabet_size})")
        return self

    def __len__(self) -> int:
        return len(self.symbols)
