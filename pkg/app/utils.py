import re
from pathlib import Path
from typing import Optional

from app.errors import ConfigError

_LIST_SPLIT = re.compile(r"[,\s]+")


def parse_name_list(text: Optional[str]) -> Optional[tuple[str, ...]]:
    """
    Split a comma or whitespace separated list ("sfc,goldman") into names.
    Returns None for None so the caller can fall back to its default.
    """
    if text is None:
        return None
    names = tuple(n for n in _LIST_SPLIT.split(text.strip()) if n)
    if not names:
        raise ConfigError("empty_list", "expected at least one name")
    return names


def parse_int_grid(text: str) -> list[int]:
    """
    Parse "20,40,60" or a range "10:90:10" (start:stop:step, stop inclusive).
    """
    text = text.strip()
    try:
        if ":" in text:
            start, stop, step = (int(x) for x in text.split(":"))
            if step <= 0:
                raise ValueError
            return list(range(start, stop + 1, step))
        return [int(x) for x in _LIST_SPLIT.split(text) if x]
    except ValueError:
        raise ConfigError("bad_grid", f"cannot parse integer grid {text!r}") from None


def ensure_parent(path: str | Path) -> Path:
    """Create the parent directory of an output path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def sidecar_path(path: str | Path) -> Path:
    """Manifest path that sits next to an encoded FASTA file."""
    path = Path(path)
    return path.with_name(path.name + ".json")
