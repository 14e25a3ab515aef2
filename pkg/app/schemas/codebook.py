"""
Codebook schemas: symbol -> base-sequence maps produced from code trees.
"""

from fractions import Fraction
from typing import Iterable, Optional

from pydantic import Field, PrivateAttr, field_validator, model_validator

from app.errors import CoverageError, DesynchronizationError, StructuralError

from .base import FrozenModel


class CodebookEntry(FrozenModel):
    symbol: int = Field(..., ge=0)
    codeword: str = Field(..., min_length=1, pattern=r"^[0-3]+$")


class Codebook(FrozenModel):
    """
    Codewords over the base alphabet {0,1,2,3}, stored apart from any
    nucleotide transcription.

    ``arity`` is the largest node arity the builder may use; ``max_hl`` is
    set for builders that constrain depths congruent to 0 modulo max_hl to
    ternary nodes.
    """

    builder: str
    arity: int = Field(4, ge=2, le=4)
    max_hl: Optional[int] = Field(None, ge=2)
    entries: tuple[CodebookEntry, ...] = ()

    _codewords: dict[int, str] = PrivateAttr(default_factory=dict)
    _reverse: dict[str, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._codewords = {e.symbol: e.codeword for e in self.entries}
        self._reverse = {e.codeword: e.symbol for e in self.entries}

    @model_validator(mode="after")
    def _check_alphabet(self) -> "Codebook":
        allowed = "0123"[: self.arity]
        seen: set[int] = set()
        for entry in self.entries:
            if entry.symbol in seen:
                raise ValueError(f"duplicate symbol {entry.symbol}")
            seen.add(entry.symbol)
            if any(base not in allowed for base in entry.codeword):
                raise ValueError(
                    f"codeword {entry.codeword!r} uses bases outside {allowed!r}"
                )
        return self

    @field_validator("entries")
    @classmethod
    def _sort_entries(cls, entries: tuple[CodebookEntry, ...]) -> tuple[CodebookEntry, ...]:
        return tuple(sorted(entries, key=lambda e: e.symbol))

    @property
    def codewords(self) -> dict[int, str]:
        return dict(self._codewords)

    def codeword(self, symbol: int) -> str:
        try:
            return self._codewords[symbol]
        except KeyError:
            raise CoverageError("missing_codeword", f"symbol {symbol} has no codeword") from None

    def constrained(self, position: int) -> bool:
        """True when 1-based codeword position ``position`` is ternary."""
        return self.max_hl is not None and position % self.max_hl == 0

    def arity_schedule(self) -> list[int]:
        """Allowed arity per depth class 1..max_hl (one entry when unconstrained)."""
        if self.max_hl is None:
            return [self.arity]
        return [3 if d % self.max_hl == 0 else self.arity for d in range(1, self.max_hl + 1)]

    def encode(self, message: Iterable[int]) -> str:
        """Concatenate the codewords of ``message``."""
        return "".join(self.codeword(s) for s in message)

    def decode(self, bases: str) -> list[int]:
        """Split a concatenation of codewords back into symbols."""
        out: list[int] = []
        start = 0
        for end in range(1, len(bases) + 1):
            symbol = self._reverse.get(bases[start:end])
            if symbol is not None:
                out.append(symbol)
                start = end
        if start != len(bases):
            raise DesynchronizationError(
                "truncated_codeword", start, f"{len(bases) - start} trailing bases match no codeword"
            )
        return out

    def kraft_sum(self) -> Fraction:
        return kraft_sum(self)

    def to_json_dict(self) -> dict:
        """External form: {builder, max_hl, arity, entries: [{symbol, codeword}]}."""
        return self.model_dump(mode="json")


def kraft_sum(book: Codebook) -> Fraction:
    """Exact Kraft sum in the book's own radix."""
    radix = book.arity
    return sum((Fraction(1, radix ** len(e.codeword)) for e in book.entries), Fraction(0))


def validate_prefix_free(book: Codebook) -> tuple[bool, Fraction]:
    """
    Check that no codeword is a prefix of another.

    Returns the verdict together with the Kraft sum. Sorting the codewords
    lexicographically puts any prefix immediately before one of its
    extensions, so only neighbours need comparing.
    """
    words = sorted(e.codeword for e in book.entries)
    prefix_free = all(not b.startswith(a) for a, b in zip(words, words[1:]))
    return prefix_free, kraft_sum(book)


def require_prefix_free(book: Codebook) -> None:
    ok, total = validate_prefix_free(book)
    if not ok:
        raise StructuralError("not_prefix_free", f"codebook {book.builder!r} has a prefix violation")
    if total > 1:
        raise StructuralError("kraft_violation", f"Kraft sum {float(total):.6f} exceeds 1")
