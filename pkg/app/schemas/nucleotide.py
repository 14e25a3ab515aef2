"""
Nucleotide stream schema.
"""

from pydantic import Field

from .base import FrozenModel

NUCLEOTIDES = "ACGT"


class NucleotideStream(FrozenModel):
    """A sequence over {A,C,G,T}."""

    bases: str = Field("", pattern=r"^[ACGT]*$")

    def __len__(self) -> int:
        return len(self.bases)

    def __str__(self) -> str:
        return self.bases

    def __add__(self, other: "NucleotideStream") -> "NucleotideStream":
        return NucleotideStream(bases=self.bases + other.bases)
