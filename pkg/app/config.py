try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Literal

from pydantic import Field
from pydantic_settings import BaseSettings

_ENV_FILE = Path(__file__).resolve().parent.parent / ".env"
_ENV_FILE_STR = str(_ENV_FILE) if _ENV_FILE.exists() else None

# Shipped AC run/category frequency table
AC_FIXTURE_PATH = Path(__file__).resolve().parent / "data" / "ac_runcategory_freq.csv"


class Settings(BaseSettings):
    # Logging
    log_level: str = "INFO"
    debug: bool = False

    # Synthetic Gaussian source defaults
    seed: int = 2023
    realizations: int = 100
    samples: int = 10000
    alphabet_size: int = 162
    sigma: float = 1.0
    support_sigmas: float = 2.7

    # Coder settings
    max_hl: int = Field(3, ge=2)
    initial_nucleotide: Literal["A", "C", "G", "T"] = "A"

    # Bench harness
    jobs: int = Field(1, ge=1)
    out_dir: str = "out"

    # Image codec
    quality: int = Field(50, ge=1, le=100)

    # Output formatting
    fasta_line_width: int = Field(80, ge=1)

    class Config:
        env_file = _ENV_FILE_STR
        case_sensitive = False
        extra = "ignore"


# Create settings instance
settings = Settings()


def load_run_file(path: str | Path) -> dict[str, Any]:
    """Read a TOML run file; keys map onto Settings field names."""
    with open(path, "rb") as handle:
        data = tomllib.load(handle)
    # Allow an optional [bench] / [codec] table layout as well as flat keys
    flat: dict[str, Any] = {}
    for key, value in data.items():
        if isinstance(value, dict):
            flat.update(value)
        else:
            flat[key] = value
    return flat


def resolve_settings(run_file: str | Path | None = None, **overrides: Any) -> Settings:
    """
    Merge settings with the documented precedence:
    flags > TOML run file > environment/.env > defaults.

    Overrides whose value is None are treated as "flag not given".
    """
    values: dict[str, Any] = settings.model_dump()
    if run_file is not None:
        values.update(load_run_file(run_file))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return Settings(**values)
