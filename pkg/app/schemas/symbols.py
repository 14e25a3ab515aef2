"""
Symbol and frequency-table schemas.
"""

from typing import Iterable, Optional, Sequence

import numpy as np
from pydantic import Field, PrivateAttr, field_validator

from .base import FrozenModel


class Symbol(FrozenModel):
    """A source symbol: a dense integer id plus an optional report label."""

    id: int = Field(..., ge=0)
    display: Optional[str] = None

    @property
    def label(self) -> str:
        return self.display if self.display is not None else str(self.id)


class FrequencyEntry(FrozenModel):
    symbol: Symbol
    count: int = Field(..., ge=0)


class FrequencyTable(FrozenModel):
    """
    Occurrence counts over an alphabet whose ids run 0..n-1.

    Entries are stored in id order; builders ask for ``sorted_for_coding()``
    when they need decreasing-frequency order.
    """

    entries: tuple[FrequencyEntry, ...] = ()

    _counts: tuple[int, ...] = PrivateAttr(default=())
    _total: int = PrivateAttr(default=0)

    def model_post_init(self, __context) -> None:
        self._counts = tuple(e.count for e in self.entries)
        self._total = sum(self._counts)

    @field_validator("entries")
    @classmethod
    def _ids_dense(cls, entries: tuple[FrequencyEntry, ...]) -> tuple[FrequencyEntry, ...]:
        ordered = tuple(sorted(entries, key=lambda e: e.symbol.id))
        for index, entry in enumerate(ordered):
            if entry.symbol.id != index:
                raise ValueError(
                    f"symbol ids must be unique and contiguous from 0 (got {entry.symbol.id} at position {index})"
                )
        return ordered

    @classmethod
    def from_counts(
        cls, counts: Sequence[int], labels: Optional[Sequence[Optional[str]]] = None
    ) -> "FrequencyTable":
        """Build a table from a count per symbol id."""
        if labels is not None and len(labels) != len(counts):
            raise ValueError("labels and counts differ in length")
        return cls(
            entries=tuple(
                FrequencyEntry(
                    symbol=Symbol(id=i, display=labels[i] if labels is not None else None),
                    count=int(c),
                )
                for i, c in enumerate(counts)
            )
        )

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], alphabet_size: Optional[int] = None) -> "FrequencyTable":
        """Count occurrences of integer symbols."""
        data = np.fromiter(symbols, dtype=np.int64)
        size = alphabet_size if alphabet_size is not None else (int(data.max()) + 1 if data.size else 0)
        counts = np.bincount(data, minlength=size) if data.size else np.zeros(size, dtype=np.int64)
        if counts.size > size:
            raise ValueError(f"symbol id {int(data.max())} outside alphabet of size {size}")
        return cls.from_counts(counts.tolist())

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def counts(self) -> tuple[int, ...]:
        return self._counts

    @property
    def total(self) -> int:
        return self._total

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(e.symbol for e in self.entries)

    def probability(self, symbol_id: int) -> float:
        return self.entries[symbol_id].count / self.total

    def probabilities(self) -> np.ndarray:
        counts = np.asarray(self.counts, dtype=np.float64)
        return counts / counts.sum()

    def sorted_for_coding(self) -> list[FrequencyEntry]:
        """Decreasing count, ties by ascending symbol id."""
        return sorted(self.entries, key=lambda e: (-e.count, e.symbol.id))

    def merged(self, other: "FrequencyTable") -> "FrequencyTable":
        """Add counts symbol by symbol (tables over the same alphabet)."""
        if len(other) != len(self):
            raise ValueError("tables cover different alphabets")
        return self.from_counts(
            [a + b for a, b in zip(self.counts, other.counts)],
            [e.symbol.display for e in self.entries],
        )
