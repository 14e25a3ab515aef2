"""
Base schemas and common utilities.
"""

from pydantic import BaseModel, ConfigDict
from typing import Optional


class FrozenModel(BaseModel):
    """Immutable record; safe to share read-only across workers."""

    model_config = ConfigDict(frozen=True)


class ErrorResponse(BaseModel):
    """Schema for error responses printed by the CLI"""

    success: bool = False
    error: str
    detail: Optional[str] = None
    exit_code: int
