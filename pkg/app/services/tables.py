"""
Frequency-table CSV files (header ``symbol,count``, one row per symbol).

Lines starting with ``#`` are comments. When every symbol cell is an integer
and together they cover 0..n-1, the cells are used as symbol ids; otherwise
symbols are treated as labels and numbered in row order.
"""

import csv
import logging
from pathlib import Path

from app.errors import IngestionError
from app.schemas.symbols import FrequencyTable

logger = logging.getLogger(__name__)

TABLE_SCHEMA = "# schema=frequency-table/1"


def read_frequency_table(path: str | Path) -> FrequencyTable:
    """
    Load a frequency table CSV.

    Raises:
        IngestionError: With the offending row number on malformed input
    """
    rows: list[tuple[int, str, int]] = []
    header_seen = False
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise IngestionError("unreadable_table", f"{path}: {exc.strerror}") from None
    with handle:
        for lineno, row in enumerate(csv.reader(handle), 1):
            if not row or row[0].startswith("#"):
                continue
            cells = [c.strip() for c in row]
            if not header_seen:
                if cells[:2] != ["symbol", "count"]:
                    raise IngestionError("bad_table_header", "expected header 'symbol,count'", row=lineno)
                header_seen = True
                continue
            if len(cells) != 2:
                raise IngestionError("bad_table_row", f"expected 2 cells, found {len(cells)}", row=lineno)
            try:
                count = int(cells[1])
            except ValueError:
                raise IngestionError("bad_count", f"count {cells[1]!r} is not an integer", row=lineno) from None
            if count < 0:
                raise IngestionError("bad_count", f"negative count {count}", row=lineno)
            rows.append((lineno, cells[0], count))

    if not header_seen:
        raise IngestionError("bad_table_header", "file has no 'symbol,count' header", row=1)
    if not rows:
        raise IngestionError("empty_table", "no symbol rows", row=None)

    labels = [label for _, label, _ in rows]
    if len(set(labels)) != len(labels):
        seen: set[str] = set()
        for lineno, label, _ in rows:
            if label in seen:
                raise IngestionError("duplicate_symbol", f"symbol {label!r} repeated", row=lineno)
            seen.add(label)

    if all(label.isdigit() for label in labels) and sorted(int(x) for x in labels) == list(range(len(labels))):
        counts = [0] * len(rows)
        for _, label, count in rows:
            counts[int(label)] = count
        table = FrequencyTable.from_counts(counts)
    else:
        table = FrequencyTable.from_counts([c for _, _, c in rows], labels)

    if table.total <= 0:
        raise IngestionError("zero_total", "all counts are zero", row=None)
    logger.debug("Loaded %d-symbol table from %s", len(table), path)
    return table


def write_frequency_table(table: FrequencyTable, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        handle.write(TABLE_SCHEMA + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["symbol", "count"])
        for entry in table.entries:
            writer.writerow([entry.symbol.label, entry.count])
    logger.info("Wrote %d-symbol frequency table to %s", len(table), path)
