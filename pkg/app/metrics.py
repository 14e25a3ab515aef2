"""
Information-theoretic and codec quality measurements.
"""

import math

import numpy as np

from app.errors import ConfigError, CoverageError, InputError
from app.schemas.codebook import Codebook
from app.schemas.nucleotide import NucleotideStream
from app.schemas.symbols import FrequencyTable

PSNR_IDENTICAL = math.inf


def entropy(table: FrequencyTable, base: int) -> float:
    """
    Shannon entropy of the table's distribution in base-``base`` units.

    Zero-count symbols contribute nothing (p log p -> 0).

    Raises:
        ConfigError: If base < 2
    """
    if base < 2:
        raise ConfigError("bad_entropy_base", f"entropy base must be at least 2, got {base}")
    p = table.probabilities()
    p = p[p > 0]
    return float(-(p * np.log(p)).sum() / math.log(base))


def expected_length(book: Codebook, table: FrequencyTable) -> float:
    """
    Probability-weighted mean codeword length, in code symbols per source symbol.

    Raises:
        CoverageError: If a positive-count symbol has no codeword
    """
    codewords = book.codewords
    total = table.total
    acc = 0
    for entry in table.entries:
        if entry.count == 0:
            continue
        word = codewords.get(entry.symbol.id)
        if word is None:
            raise CoverageError("missing_codeword", f"symbol {entry.symbol.id} has no codeword")
        acc += entry.count * len(word)
    return acc / total


def compression_ratio_bits_per_nt(source_bits: int, stream: NucleotideStream | int) -> float:
    """
    Source bits per emitted nucleotide.

    ``stream`` may be a stream or a nucleotide count.

    Raises:
        InputError: If the stream is empty
    """
    length = stream if isinstance(stream, int) else len(stream)
    if length <= 0:
        raise InputError("empty_stream", "compression ratio of an empty nucleotide stream")
    return source_bits / length


def psnr(original: np.ndarray, reconstructed: np.ndarray) -> float:
    """
    Peak signal-to-noise ratio for 8-bit images, in dB.

    Returns ``PSNR_IDENTICAL`` (infinity) when the images are equal.

    Raises:
        InputError: If the images differ in shape
    """
    a = np.asarray(original, dtype=np.float64)
    b = np.asarray(reconstructed, dtype=np.float64)
    if a.shape != b.shape:
        raise InputError("shape_mismatch", f"{a.shape} vs {b.shape}")
    mse = float(np.mean((a - b) ** 2))
    if mse == 0:
        return PSNR_IDENTICAL
    return 10.0 * math.log10(255.0**2 / mse)
