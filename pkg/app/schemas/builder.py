"""
Tree-builder configuration.
"""

from typing import Literal

from pydantic import Field

from .base import FrozenModel


class BuilderConfig(FrozenModel):
    """
    max_hl is the longest homopolymer the code may produce inside a
    codeword; depths congruent to 0 modulo max_hl get ternary nodes.
    tie_break orders symbols of equal count before the Shannon-Fano split.
    """

    max_hl: int = Field(3, ge=2)
    tie_break: Literal["ascending-id", "descending-id"] = "ascending-id"
