"""
Image ingestion and output through Pillow.

Color inputs are converted to luminance on read; output is binary PGM (P5).
"""

import logging
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from app.errors import IngestionError

logger = logging.getLogger(__name__)


def read_grayscale(path: str | Path) -> np.ndarray:
    """
    Load an image as an 8-bit grayscale array of shape (height, width).

    Raises:
        IngestionError: If the file is missing or not a decodable image
    """
    try:
        with Image.open(path) as img:
            if img.mode != "L":
                logger.info("Converting %s image %s to luminance", img.mode, path)
                img = img.convert("L")
            return np.asarray(img, dtype=np.uint8).copy()
    except FileNotFoundError:
        raise IngestionError("missing_image", str(path)) from None
    except (UnidentifiedImageError, OSError) as exc:
        raise IngestionError("unreadable_image", f"{path}: {exc}") from None


def write_pgm(image: np.ndarray, path: str | Path) -> None:
    Image.fromarray(np.asarray(image, dtype=np.uint8), mode="L").save(path, format="PPM")
    logger.info("Wrote %dx%d image to %s", image.shape[1], image.shape[0], path)
