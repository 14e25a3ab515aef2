"""
Tests for entropy, expected length, compression ratio and PSNR.
"""

import math

import numpy as np
import pytest

from app.errors import ConfigError, CoverageError, InputError
from app.metrics import PSNR_IDENTICAL, compression_ratio_bits_per_nt, entropy, expected_length, psnr
from app.schemas.codebook import Codebook, CodebookEntry
from app.schemas.nucleotide import NucleotideStream
from app.schemas.symbols import FrequencyTable

EXAMPLE_BINARY_CODE = ["0", "1010", "110", "1011", "111", "100"]


def test_entropy_uniform():
    assert entropy(FrequencyTable.from_counts([3, 3, 3, 3]), 4) == pytest.approx(1.0)


def test_entropy_example_distribution(six_symbol_table):
    assert entropy(six_symbol_table, 2) == pytest.approx(2.2553, abs=1e-3)


def test_entropy_single_symbol_and_zero_counts():
    assert entropy(FrequencyTable.from_counts([9]), 2) == 0.0
    assert entropy(FrequencyTable.from_counts([1, 0, 1]), 2) == pytest.approx(1.0)


def test_entropy_bases_are_ordered(six_symbol_table):
    assert entropy(six_symbol_table, 4) <= entropy(six_symbol_table, 3) <= entropy(six_symbol_table, 2)


def test_entropy_rejects_small_base(six_symbol_table):
    with pytest.raises(ConfigError):
        entropy(six_symbol_table, 1)


def test_expected_length_example_code(six_symbol_table):
    book = Codebook(
        builder="manual",
        arity=2,
        entries=tuple(CodebookEntry(symbol=i, codeword=w) for i, w in enumerate(EXAMPLE_BINARY_CODE)),
    )
    assert expected_length(book, six_symbol_table) == pytest.approx(2.32)


def test_expected_length_requires_coverage(six_symbol_table):
    book = Codebook(builder="manual", entries=(CodebookEntry(symbol=0, codeword="0"),))
    with pytest.raises(CoverageError):
        expected_length(book, six_symbol_table)


def test_expected_length_ignores_unused_symbols():
    table = FrequencyTable.from_counts([4, 0])
    book = Codebook(builder="manual", entries=(CodebookEntry(symbol=0, codeword="01"),))
    assert expected_length(book, table) == 2.0


def test_compression_ratio():
    assert compression_ratio_bits_per_nt(512 * 512 * 8, 100000) == pytest.approx(20.97, abs=0.01)
    assert compression_ratio_bits_per_nt(16, NucleotideStream(bases="ACGTACGT")) == 2.0
    with pytest.raises(InputError):
        compression_ratio_bits_per_nt(8, NucleotideStream(bases=""))


def test_psnr_values():
    zeros = np.zeros((8, 8), dtype=np.uint8)
    assert psnr(zeros, zeros) == PSNR_IDENTICAL
    assert math.isinf(psnr(zeros, zeros))
    assert psnr(zeros, np.full((8, 8), 255, dtype=np.uint8)) == pytest.approx(0.0)
    assert psnr(zeros, zeros + 1) == pytest.approx(48.13, abs=0.01)


def test_psnr_shape_mismatch():
    with pytest.raises(InputError):
        psnr(np.zeros((4, 4)), np.zeros((4, 5)))


if __name__ == "__main__":
    pytest.main([__file__])
