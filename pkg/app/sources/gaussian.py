"""
Quantized Gaussian test source.

Realization ``i`` draws from ``numpy.random.Generator(PCG64(seed + i))`` so a
single realization can be regenerated on its own and results do not depend
on how realizations are spread over worker processes.
"""

import logging
import numpy as np
from scipy.stats import norm

from app.schemas.source import GaussianSourceConfig, SourceRealization
from app.schemas.symbols import FrequencyTable

logger = logging.getLogger(__name__)


def _bin_edges(cfg: GaussianSourceConfig) -> tuple[float, float]:
    """Lower support bound and bin width."""
    half = cfg.support_sigmas * cfg.sigma
    return -half, 2.0 * half / cfg.alphabet_size


def quantize(samples: np.ndarray, cfg: GaussianSourceConfig) -> np.ndarray:
    """Map real samples to bin ids 0..alphabet_size-1; outliers go to the end bins."""
    low, width = _bin_edges(cfg)
    ids = np.floor((np.asarray(samples, dtype=np.float64) - low) / width).astype(np.int64)
    return np.clip(ids, 0, cfg.alphabet_size - 1)


def realization(cfg: GaussianSourceConfig, index: int) -> SourceRealization:
    rng = np.random.Generator(np.random.PCG64(cfg.seed + index))
    samples = rng.normal(0.0, cfg.sigma, cfg.samples_per_realization)
    return SourceRealization(
        symbols=tuple(quantize(samples, cfg).tolist()),
        alphabet_size=cfg.alphabet_size,
        origin=f"gaussian:seed={cfg.seed}:realization={index}",
    )


def gaussian_quantized_source(cfg: GaussianSourceConfig) -> list[SourceRealization]:
    """
    Yield ``cfg.realizations`` independent realizations.

    Args:
        cfg: Source parameters

    Returns:
        Realizations in index order
    """
    logger.info(
        "Gaussian source: %d realizations x %d samples, %d bins over +/-%.2f sigma, seed %d",
        cfg.realizations,
        cfg.samples_per_realization,
        cfg.alphabet_size,
        cfg.support_sigmas,
        cfg.seed,
    )
    return [realization(cfg, index) for index in range(cfg.realizations)]


def gaussian_bin_probabilities(cfg: GaussianSourceConfig) -> np.ndarray:
    """Exact bin probabilities of the quantized source (end bins absorb the tails)."""
    low, width = _bin_edges(cfg)
    edges = low + width * np.arange(cfg.alphabet_size + 1, dtype=np.float64)
    cdf = norm.cdf(edges, scale=cfg.sigma)
    cdf[0] = 0.0
    cdf[-1] = 1.0
    return np.diff(cdf)


def empirical_table(source: SourceRealization) -> FrequencyTable:
    """Occurrence counts over the full alphabet; unseen symbols get count 0."""
    return FrequencyTable.from_symbols(source.symbols, source.alphabet_size)
