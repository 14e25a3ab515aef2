"""
bench and report commands.
"""

import argparse
import logging
from pathlib import Path

from app.schemas.report import DEFAULT_CODERS, BenchSpec
from app.schemas.source import GaussianSourceConfig
from app.services.bench import read_report, render_report, run_bench, write_report
from app.utils import parse_name_list

from .common import add_max_hl, add_source_flags, settings_from_args, validated

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    bench = subparsers.add_parser("bench", help="measure expected lengths and entropies over a source")
    add_source_flags(bench)
    add_max_hl(bench)
    bench.add_argument("--coders", default=None, help=f"comma-separated coders (default {','.join(DEFAULT_CODERS)})")
    bench.add_argument("--table", default=None, help="frequency table CSV; selects the table-file source")
    bench.add_argument("--ac-fixture", action="store_true", help="use the shipped AC run/category table")
    bench.add_argument("--exact", action="store_true", help="evaluate the table itself instead of sampling it")
    bench.add_argument("--out-dir", default=None)
    bench.add_argument("--jobs", type=int, default=None, help="worker processes")
    bench.set_defaults(handler=cmd_bench)

    report = subparsers.add_parser("report", help="render a bench report.json as a text table")
    report.add_argument("report", help="report.json written by bench")
    report.set_defaults(handler=cmd_report)


def spec_from_args(args: argparse.Namespace) -> BenchSpec:
    cfg = settings_from_args(args)
    table_source = args.table is not None or args.ac_fixture
    gaussian = validated(
        GaussianSourceConfig,
        realizations=cfg.realizations,
        samples_per_realization=cfg.samples,
        alphabet_size=cfg.alphabet_size,
        seed=cfg.seed,
        sigma=cfg.sigma,
        support_sigmas=cfg.support_sigmas,
    )
    values = dict(
        source="table-file" if table_source else "gaussian",
        gaussian=gaussian,
        table_file=Path(args.table) if args.table else None,
        samples=cfg.samples,
        seed=cfg.seed,
        realizations=cfg.realizations,
        exact=args.exact,
        max_hl=cfg.max_hl,
        out_dir=Path(cfg.out_dir),
        jobs=cfg.jobs,
    )
    coders = parse_name_list(args.coders)
    if coders is not None:
        values["coders"] = coders
    return validated(BenchSpec, **values)


def cmd_bench(args: argparse.Namespace) -> int:
    """Run the rate benchmark and write rates.csv, summary.csv and report.json."""
    spec = spec_from_args(args)
    report = run_bench(spec)
    paths = write_report(report, spec.out_dir)
    print(render_report(report), end="")
    logger.info("Report files: %s", ", ".join(str(p) for p in paths.values()))
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    print(render_report(read_report(args.report)), end="")
    return 0
