"""
Block DCT, quantization and zigzag ordering.
"""

import logging

import numpy as np
from scipy.fft import dctn, idctn

from app.errors import IngestionError, InputError
from app.schemas.codec import BlockSpectrum, CodecConfig

logger = logging.getLogger(__name__)

BLOCK = 8

# ITU-T T.81 Annex K.1 luminance quantization table
LUMINANCE_QUANT = np.array(
    [
        [16, 11, 10, 16, 24, 40, 51, 61],
        [12, 12, 14, 19, 26, 58, 60, 55],
        [14, 13, 16, 24, 40, 57, 69, 56],
        [14, 17, 22, 29, 51, 87, 80, 62],
        [18, 22, 37, 56, 68, 109, 103, 77],
        [24, 35, 55, 64, 81, 104, 113, 92],
        [49, 64, 78, 87, 103, 121, 120, 101],
        [72, 92, 95, 98, 112, 100, 103, 99],
    ],
    dtype=np.int64,
)


def _zigzag_order() -> np.ndarray:
    cells = sorted(
        ((r, c) for r in range(BLOCK) for c in range(BLOCK)),
        key=lambda rc: (rc[0] + rc[1], rc[1] if (rc[0] + rc[1]) % 2 == 0 else rc[0]),
    )
    return np.array([r * BLOCK + c for r, c in cells], dtype=np.int64)


# ZIGZAG[k] is the raster index of the k-th coefficient in zigzag order
ZIGZAG = _zigzag_order()


def quantization_matrix(quality: int) -> np.ndarray:
    """IJG quality scaling of the luminance table; quality 50 is the table itself."""
    if not 1 <= quality <= 100:
        raise InputError("bad_quality", f"quality must lie in [1, 100], got {quality}")
    scale = 5000 // quality if quality < 50 else 200 - 2 * quality
    return np.clip((LUMINANCE_QUANT * scale + 50) // 100, 1, 255)


def block_grid(height: int, width: int) -> tuple[int, int]:
    return -(-height // BLOCK), -(-width // BLOCK)


def _to_blocks(image: np.ndarray) -> np.ndarray:
    height, width = image.shape
    rows, cols = block_grid(height, width)
    padded = np.pad(image, ((0, rows * BLOCK - height), (0, cols * BLOCK - width)), mode="edge")
    return padded.reshape(rows, BLOCK, cols, BLOCK).swapaxes(1, 2).reshape(-1, BLOCK, BLOCK)


def quantize_blocks(image: np.ndarray, cfg: CodecConfig) -> np.ndarray:
    """
    Quantized DCT coefficients, shape (blocks, 64), zigzag order, raster block order.

    Raises:
        IngestionError: If the image is not a 2-D 8-bit array
    """
    image = np.asarray(image)
    if image.ndim != 2:
        raise IngestionError("not_grayscale", f"expected a 2-D grayscale image, got shape {image.shape}")
    if image.dtype != np.uint8:
        raise IngestionError("not_8bit", f"expected 8-bit samples, got {image.dtype}")
    if image.size == 0:
        raise InputError("empty_image", "image has no pixels")

    blocks = _to_blocks(image).astype(np.float64) - 128.0
    spectra = dctn(blocks, type=2, axes=(1, 2), norm="ortho")
    quant = quantization_matrix(cfg.quality).astype(np.float64)
    coeffs = np.rint(spectra / quant).astype(np.int64)
    return coeffs.reshape(-1, BLOCK * BLOCK)[:, ZIGZAG]


def forward_transform(image: np.ndarray, cfg: CodecConfig) -> list[BlockSpectrum]:
    """
    Per-block level shift, orthonormal 2-D DCT-II, quantization and zigzag scan.

    Args:
        image: 8-bit grayscale array; padded to multiples of 8 by edge replication
        cfg: Codec configuration (quality selects the quantizer)

    Returns:
        One BlockSpectrum per block, blocks in raster order
    """
    coeffs = quantize_blocks(image, cfg)
    logger.debug("Transformed %d blocks at quality %d", len(coeffs), cfg.quality)
    return spectra_from_coefficients(coeffs)


def spectra_from_coefficients(coeffs: np.ndarray) -> list[BlockSpectrum]:
    return [BlockSpectrum(dc=int(row[0]), ac=tuple(row[1:].tolist())) for row in coeffs]


def dequantize_blocks(coeffs: np.ndarray, height: int, width: int, quality: int) -> np.ndarray:
    """Inverse of ``quantize_blocks``: clamps to [0, 255] and crops the padding."""
    rows, cols = block_grid(height, width)
    raster = np.empty((len(coeffs), BLOCK * BLOCK), dtype=np.float64)
    raster[:, ZIGZAG] = np.asarray(coeffs, dtype=np.float64)
    spectra = raster.reshape(-1, BLOCK, BLOCK) * quantization_matrix(quality)
    pixels = idctn(spectra, type=2, axes=(1, 2), norm="ortho") + 128.0
    plane = pixels.reshape(rows, cols, BLOCK, BLOCK).swapaxes(1, 2).reshape(rows * BLOCK, cols * BLOCK)
    return np.clip(np.rint(plane), 0, 255).astype(np.uint8)[:height, :width]


def inverse_transform(blocks: list[BlockSpectrum], height: int, width: int, cfg: CodecConfig) -> np.ndarray:
    """Reconstruct an 8-bit image from block spectra."""
    rows, cols = block_grid(height, width)
    if len(blocks) != rows * cols:
        raise InputError("block_count_mismatch", f"{len(blocks)} blocks for a {height}x{width} image")
    coeffs = np.array([(b.dc, *b.ac) for b in blocks], dtype=np.int64).reshape(-1, BLOCK * BLOCK)
    return dequantize_blocks(coeffs, height, width, cfg.quality)
