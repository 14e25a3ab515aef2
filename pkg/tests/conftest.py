"""
Shared fixtures for the coder tests.
"""

import numpy as np
import pytest

from app.schemas.symbols import FrequencyTable

# Example distribution with a known binary Huffman code, counts in percent
SIX_SYMBOL_COUNTS = [40, 5, 18, 7, 20, 10]
SIX_SYMBOL_LABELS = ["a", "b", "c", "d", "e", "f"]


@pytest.fixture
def six_symbol_table() -> FrequencyTable:
    return FrequencyTable.from_counts(SIX_SYMBOL_COUNTS, SIX_SYMBOL_LABELS)


@pytest.fixture
def gaussian_like_table() -> FrequencyTable:
    """Bell-shaped counts over 40 symbols."""
    x = np.linspace(-2.5, 2.5, 40)
    counts = np.rint(1000 * np.exp(-x**2 / 2)).astype(int) + 1
    return FrequencyTable.from_counts(counts.tolist())


@pytest.fixture
def smooth_image() -> np.ndarray:
    """Deterministic natural-looking test image (gradients, texture and mild noise), 72x100."""
    rng = np.random.Generator(np.random.PCG64(7))
    yy, xx = np.mgrid[0:72, 0:100].astype(np.float64)
    base = 90 + 0.8 * xx + 0.5 * yy
    texture = 25 * np.sin(xx / 6.0) * np.cos(yy / 9.0) + 12 * np.sin((xx + 2 * yy) / 3.5)
    image = base + texture + rng.normal(0, 3, size=xx.shape)
    return np.clip(np.rint(image), 0, 255).astype(np.uint8)
