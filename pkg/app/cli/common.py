"""
Flags and settings resolution shared by the commands.
"""

import argparse
import logging
try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib
from typing import Any

import orjson
from pydantic import ValidationError

from app.config import Settings, resolve_settings
from app.errors import ConfigError

logger = logging.getLogger(__name__)

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def add_max_hl(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-hl", type=int, default=None, help="maximum homopolymer run length (>= 2)")


def add_source_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="base seed; realization i uses seed + i")
    parser.add_argument("--realizations", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None, help="samples per realization")
    parser.add_argument("--alphabet-size", type=int, default=None, help="Gaussian quantizer bins")
    parser.add_argument("--sigma", type=float, default=None)
    parser.add_argument("--support-sigmas", type=float, default=None, help="quantizer support in units of sigma")


def settings_from_args(args: argparse.Namespace, **extra: Any) -> Settings:
    """
    Merge flags over the run file, environment and defaults.

    Raises:
        ConfigError: If the merged values fail validation
    """
    overrides = {
        name: getattr(args, name, None)
        for name in ("seed", "realizations", "samples", "alphabet_size", "sigma", "support_sigmas", "max_hl", "jobs")
    }
    overrides["out_dir"] = getattr(args, "out_dir", None)
    overrides.update(extra)
    try:
        return resolve_settings(getattr(args, "config", None), **overrides)
    except ValidationError as exc:
        raise ConfigError("bad_config", str(exc)) from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError("bad_config", f"{args.config}: {exc}") from None
    except OSError as exc:
        raise ConfigError("unreadable_config", f"{args.config}: {exc.strerror}") from None


def validated(model, **values):
    """Instantiate a pydantic config model, mapping validation failures to ConfigError."""
    try:
        return model(**values)
    except ValidationError as exc:
        raise ConfigError("bad_config", str(exc)) from None


def dump_json(data: Any) -> bytes:
    return orjson.dumps(data, option=JSON_OPTIONS)
