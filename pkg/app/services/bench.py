"""
Rate benchmark harness.

Each realization is evaluated independently: build its frequency table,
build every selected coder on it, measure entropies and expected lengths,
then transcode the realization with each nucleotide coder to record the
longest homopolymer. Realization i of a run is generated from seed + i, so
the report does not depend on the number of worker processes.
"""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

import numpy as np
import orjson
from pydantic import ValidationError

from app.coders import get_coder
from app.errors import IngestionError
from app.metrics import entropy, expected_length
from app.models.tree import codebook_from_tree
from app.schemas.report import BenchSpec, CoderRate, RateReport, RealizationReport, SummaryStat
from app.schemas.source import SourceRealization
from app.schemas.symbols import FrequencyTable
from app.sources.ac_table import load_ac_table, sample_table
from app.sources.gaussian import empirical_table, realization
from app.transcoders.homopolymer import max_homopolymer_run, max_piece_run

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "# schema=rate-report/1"
SUMMARY_SCHEMA = "# schema=rate-summary/1"

# Column layout of the summary table: entropies interleaved with the coders they bound
SUMMARY_COLUMNS = (
    "H4",
    "L_huffman4",
    "L_sfc",
    "L_huffman4-constrained",
    "H3",
    "L_goldman",
    "H2",
    "L_huffman2",
    "L_huffman3",
)


def evaluate_table(
    table: FrequencyTable,
    coders: tuple[str, ...],
    max_hl: int,
    index: int,
    origin: str,
    message: Optional[SourceRealization] = None,
) -> RealizationReport:
    """
    Measure every coder on one frequency table.

    With ``message`` the realization is transcoded for homopolymer figures;
    without it only the codewords themselves are transcoded.
    """
    rates = []
    for name in coders:
        coder = get_coder(name, max_hl)
        book = codebook_from_tree(coder.tree(table))
        stream_run = codeword_run = None
        if coder.nucleotide:
            if message is not None:
                pieces = coder.pieces(book.codeword(s) for s in message.symbols)
                stream_run = max_homopolymer_run("".join(pieces))
            else:
                pieces = coder.pieces(entry.codeword for entry in book.entries)
            codeword_run = max_piece_run(pieces)
        rates.append(
            CoderRate(
                coder=name,
                radix=coder.radix,
                expected_length=expected_length(book, table),
                stream_max_run=stream_run,
                codeword_max_run=codeword_run,
            )
        )
    return RealizationReport(
        index=index,
        origin=origin,
        sample_count=table.total,
        entropy_2=entropy(table, 2),
        entropy_3=entropy(table, 3),
        entropy_4=entropy(table, 4),
        coders=tuple(rates),
    )


def _source_message(spec: BenchSpec, index: int, table: Optional[FrequencyTable]) -> SourceRealization:
    if spec.source == "gaussian":
        return realization(spec.gaussian, index)
    return sample_table(table, spec.samples, spec.seed + index, origin=f"table:seed={spec.seed + index}")


def evaluate_realization(spec: BenchSpec, index: int) -> RealizationReport:
    """Generate realization ``index`` of ``spec`` and evaluate it (process-pool entry point)."""
    base_table = load_ac_table(spec.table_file) if spec.source == "table-file" else None
    if spec.exact:
        origin = f"table:{spec.table_file or 'ac-fixture'}:exact"
        return evaluate_table(base_table, spec.coders, spec.max_hl, index, origin)
    message = _source_message(spec, index, base_table)
    table = empirical_table(message)
    report = evaluate_table(table, spec.coders, spec.max_hl, index, message.origin, message)
    logger.debug("Realization %d done", index)
    return report


def summarize(reports: list[RealizationReport], coders: tuple[str, ...]) -> dict[str, SummaryStat]:
    """Mean and std per column; H2 only travels with the binary Huffman coder."""
    columns: dict[str, list[float]] = {
        "H3": [r.entropy_3 for r in reports],
        "H4": [r.entropy_4 for r in reports],
    }
    if "huffman2" in coders:
        columns["H2"] = [r.entropy_2 for r in reports]
    for name in coders:
        columns[f"L_{name}"] = [r.rate(name).expected_length for r in reports]
    return {
        key: SummaryStat(mean=float(np.mean(values)), std=float(np.std(values)))
        for key, values in columns.items()
    }


def run_bench(spec: BenchSpec) -> RateReport:
    """
    Evaluate every realization of ``spec`` and aggregate mean and standard deviation.

    Raises:
        IngestionError: If the table file is malformed
        ConfigError: On an invalid coder selection
    """
    count = 1 if spec.exact else (spec.gaussian.realizations if spec.source == "gaussian" else spec.realizations)
    logger.info("Bench: %s source, %d realizations, coders %s", spec.source, count, ", ".join(spec.coders))
    if spec.jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            reports = list(pool.map(evaluate_realization, [spec] * count, range(count)))
    else:
        reports = [evaluate_realization(spec, i) for i in range(count)]
    return RateReport(
        source=spec.source,
        max_hl=spec.max_hl,
        coders=spec.coders,
        realizations=tuple(reports),
        summary=summarize(reports, spec.coders),
    )


def write_report(report: RateReport, out_dir: str | Path) -> dict[str, Path]:
    """
    Write ``rates.csv`` (one row per coder per realization), ``summary.csv``
    (mean/std in summary-column order) and ``report.json``.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"rates": out / "rates.csv", "summary": out / "summary.csv", "json": out / "report.json"}

    with open(paths["rates"], "w", newline="", encoding="utf-8") as handle:
        handle.write(REPORT_SCHEMA + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(
            [
                "realization",
                "origin",
                "samples",
                "coder",
                "radix",
                "expected_length",
                "H2",
                "H3",
                "H4",
                "stream_max_run",
                "codeword_max_run",
            ]
        )
        for r in report.realizations:
            for rate in r.coders:
                writer.writerow(
                    [
                        r.index,
                        r.origin,
                        r.sample_count,
                        rate.coder,
                        rate.radix,
                        f"{rate.expected_length:.6f}",
                        f"{r.entropy_2:.6f}",
                        f"{r.entropy_3:.6f}",
                        f"{r.entropy_4:.6f}",
                        "" if rate.stream_max_run is None else rate.stream_max_run,
                        "" if rate.codeword_max_run is None else rate.codeword_max_run,
                    ]
                )

    columns = [c for c in SUMMARY_COLUMNS if c in report.summary]
    with open(paths["summary"], "w", newline="", encoding="utf-8") as handle:
        handle.write(SUMMARY_SCHEMA + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["statistic", *columns])
        for stat in ("mean", "std"):
            writer.writerow([stat, *(f"{getattr(report.summary[c], stat):.6f}" for c in columns)])

    paths["json"].write_bytes(
        orjson.dumps(report.model_dump(mode="json"), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)
    )
    logger.info("Wrote rate report to %s", out)
    return paths


def read_report(path: str | Path) -> RateReport:
    """
    Load a ``report.json`` written by ``write_report``.

    Raises:
        IngestionError: If the file is missing or not a rate report
    """
    try:
        return RateReport.model_validate(orjson.loads(Path(path).read_bytes()))
    except OSError as exc:
        raise IngestionError("unreadable_report", f"{path}: {exc.strerror}") from None
    except (orjson.JSONDecodeError, ValidationError) as exc:
        raise IngestionError("bad_report", f"{path}: {exc}") from None


def _bound_checks(report: RateReport) -> list[tuple[str, bool]]:
    """Ordering checks on the mean columns that are present."""
    s = {k: v.mean for k, v in report.summary.items()}
    checks = []
    if "L_huffman4" in s:
        checks.append(("H4 <= L(huffman4)", s["H4"] <= s["L_huffman4"] + 1e-9))
        for name in ("sfc", "huffman4-constrained"):
            if f"L_{name}" in s:
                checks.append((f"L(huffman4) <= L({name})", s["L_huffman4"] <= s[f"L_{name}"] + 1e-9))
    if "L_sfc" in s:
        checks.append(("L(sfc) < H3", s["L_sfc"] < s["H3"]))
        if "L_huffman4-constrained" in s:
            checks.append(("L(sfc) < L(huffman4-constrained)", s["L_sfc"] < s["L_huffman4-constrained"]))
    if "L_goldman" in s:
        if "L_huffman4-constrained" in s:
            checks.append(
                ("L(huffman4-constrained) <= L(goldman)", s["L_huffman4-constrained"] <= s["L_goldman"] + 1e-9)
            )
        checks.append(("H3 <= L(goldman)", s["H3"] <= s["L_goldman"] + 1e-9))
    return checks


def render_report(report: RateReport) -> str:
    """Plain-text table of mean and std per column followed by the ordering checks."""
    columns = [c for c in SUMMARY_COLUMNS if c in report.summary]
    width = max(len(c) for c in columns) + 2
    lines = [
        f"source={report.source} max_hl={report.max_hl} realizations={len(report.realizations)}",
        "".join(c.rjust(width) for c in ["", *columns]),
    ]
    for stat in ("mean", "std"):
        cells = [f"{getattr(report.summary[c], stat):.4f}" for c in columns]
        lines.append("".join(x.rjust(width) for x in [stat, *cells]))
    lines.append("")
    for label, ok in _bound_checks(report):
        lines.append(f"{'ok  ' if ok else 'FAIL'} {label}")
    return "\n".join(lines) + "\n"
