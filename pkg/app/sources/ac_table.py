"""
I.i.d. source following a frequency table file (by default the shipped AC
run/category table).
"""

import logging
from pathlib import Path
from typing import Optional

import numpy as np

from app.config import AC_FIXTURE_PATH
from app.errors import InputError
from app.schemas.source import SourceRealization
from app.schemas.symbols import FrequencyTable
from app.services.tables import read_frequency_table

logger = logging.getLogger(__name__)


def load_ac_table(table_file: Optional[str | Path] = None) -> FrequencyTable:
    return read_frequency_table(table_file if table_file is not None else AC_FIXTURE_PATH)


def sample_table(table: FrequencyTable, samples: int, seed: int, origin: str = "table") -> SourceRealization:
    """Draw ``samples`` symbol ids from the table's distribution."""
    if samples < 0:
        raise InputError("bad_sample_count", f"sample count must be non-negative, got {samples}")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.choice(len(table), size=samples, p=table.probabilities())
    return SourceRealization(symbols=tuple(draws.tolist()), alphabet_size=len(table), origin=origin)


def ac_frequency_source(table_file: Optional[str | Path], samples: int, seed: int) -> SourceRealization:
    """
    Sample a realization from a frequency table CSV.

    Args:
        table_file: CSV path; None selects the shipped AC run/category table
        samples: Realization length
        seed: Generator seed

    Returns:
        SourceRealization over the table's alphabet

    Raises:
        IngestionError: If the CSV is malformed (carries the row number)
    """
    table = load_ac_table(table_file)
    logger.info("Sampling %d symbols from %d-symbol table (seed %d)", samples, len(table), seed)
    return sample_table(table, samples, seed, origin=f"table:{table_file or AC_FIXTURE_PATH.name}:seed={seed}")
