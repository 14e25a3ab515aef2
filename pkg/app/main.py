import argparse
import logging
import sys
import traceback
from typing import Optional, Sequence

from pydantic import ValidationError

from app.cli import COMMAND_MODULES
from app.config import settings
from app.errors import CodingError, ConfigError, InputError
from app.schemas.base import ErrorResponse

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacoder",
        description="Homopolymer-constrained quaternary coders for DNA storage: benchmarks and image codec",
    )
    parser.add_argument("--config", default=None, help="TOML run file; flags override it")
    parser.add_argument("--log-level", default=None, help=f"logging level (default {settings.log_level})")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def _report_error(exc: CodingError) -> int:
    response = ErrorResponse(error=exc.code, detail=exc.detail, exit_code=exc.exit_code)
    print(response.model_dump_json(), file=sys.stderr)
    return exc.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and map failures to exit codes."""
    args = build_parser().parse_args(argv)
    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args)
    except CodingError as exc:
        logger.error("%s failed: %s", args.command, exc)
        return _report_error(exc)
    except ValidationError as exc:
        return _report_error(ConfigError("bad_config", str(exc)))
    except OSError as exc:
        return _report_error(InputError("io_error", str(exc)))
    # Global exception handler
    except Exception as exc:
        logger.error("Unexpected error in %s: %s", args.command, exc)
        response = ErrorResponse(
            error="internal_error",
            detail=traceback.format_exc() if settings.debug else "An unexpected error occurred",
            exit_code=1,
        )
        print(response.model_dump_json(), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
