"""
Error types shared by the coders, the image codec and the CLI.

Every error carries a machine-readable ``code`` and the process exit code the
CLI maps it to.
"""

from typing import Optional


class CodingError(Exception):
    """Base class for known failures."""

    exit_code = 1

    def __init__(self, code: str, detail: Optional[str] = None):
        self.code = code
        self.detail = detail
        super().__init__(f"{code}: {detail}" if detail else code)


class InputError(CodingError):
    """Bad or unusable input data."""

    exit_code = 2


class CoverageError(InputError):
    """A symbol has no codeword in the codebook."""


class CategoryOverflowError(InputError):
    """A coefficient magnitude does not fit in the largest category."""


class IngestionError(InputError):
    """A file could not be parsed."""

    def __init__(self, code: str, detail: Optional[str] = None, row: Optional[int] = None):
        self.row = row
        if row is not None:
            detail = f"row {row}: {detail}" if detail else f"row {row}"
        super().__init__(code, detail)


class CorruptionError(CodingError):
    """Encoded data is inconsistent with its header or codebook."""

    exit_code = 3


class StructuralError(CorruptionError):
    """A code tree or codebook violates its structural invariants."""


class DesynchronizationError(CorruptionError):
    """Decoding lost synchronization at a known stream offset."""

    def __init__(self, code: str, offset: int, detail: Optional[str] = None):
        self.offset = offset
        text = f"offset {offset}"
        super().__init__(code, f"{text}: {detail}" if detail else text)


class ConfigError(CodingError):
    """Invalid coder, source or codec configuration."""

    exit_code = 4
