"""
FASTA-like nucleotide record files.

Each record is a header line ``>name meta=<json>`` followed by sequence lines
of at most ``width`` characters over ACGT. An empty sequence is written as a
header with no sequence lines.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import orjson

from app.errors import IngestionError

logger = logging.getLogger(__name__)

_SEQUENCE_LINE = re.compile(r"^[ACGT]*$")


@dataclass
class FastaRecord:
    name: str
    sequence: str
    meta: dict[str, Any] = field(default_factory=dict)


def write_records(records: list[FastaRecord], path: str | Path, width: int = 80) -> None:
    """
    Write records to ``path``.

    Args:
        records: Records in output order
        path: Output file
        width: Maximum sequence characters per line
    """
    with open(path, "w", encoding="utf-8", newline="\n") as outfile:
        for record in records:
            meta = orjson.dumps(record.meta, option=orjson.OPT_SORT_KEYS).decode()
            outfile.write(f">{record.name} meta={meta}\n")
            for start in range(0, len(record.sequence), width):
                outfile.write(record.sequence[start : start + width] + "\n")
    logger.info("Wrote %d FASTA records to %s", len(records), path)


def read_records(path: str | Path) -> list[FastaRecord]:
    """
    Read every record from ``path``.

    Raises:
        IngestionError: On a sequence line before any header, a header with
            malformed metadata, or characters outside ACGT
    """
    records: list[FastaRecord] = []
    chunks: list[str] = []
    with open(path, encoding="utf-8") as infile:
        for lineno, raw in enumerate(infile, 1):
            line = raw.rstrip("\n")
            if line.startswith(">"):
                if records:
                    records[-1].sequence = "".join(chunks)
                chunks = []
                name, _, meta_text = line[1:].partition(" meta=")
                try:
                    meta = orjson.loads(meta_text) if meta_text else {}
                except orjson.JSONDecodeError as exc:
                    raise IngestionError("bad_fasta_header", str(exc), row=lineno) from None
                records.append(FastaRecord(name=name.strip(), sequence="", meta=meta))
                continue
            if not line:
                continue
            if not records:
                raise IngestionError("sequence_before_header", "sequence line before any '>' header", row=lineno)
            if not _SEQUENCE_LINE.match(line):
                raise IngestionError("bad_nucleotide", "sequence line has characters outside ACGT", row=lineno)
            chunks.append(line)
    if records:
        records[-1].sequence = "".join(chunks)
    return records
