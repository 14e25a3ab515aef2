"""
Simplified JPEG-style grayscale codec with a nucleotide entropy layer.
"""

from .categorize import categorize, category, decategorize, layout_to_blocks, value_from_index, value_index
from .codec import (
    EncodedImage,
    collect_statistics,
    decode_coefficients,
    decode_image,
    encode_image,
    observed_only,
)
from .header import decode_header, encode_header
from .transform import forward_transform, inverse_transform, quantization_matrix, quantize_blocks
from .value_coder import PAIRS, PairReader, encode_value, pairs_for_category

__all__ = [
    "EncodedImage",
    "PAIRS",
    "PairReader",
    "categorize",
    "category",
    "collect_statistics",
    "decategorize",
    "decode_coefficients",
    "decode_header",
    "decode_image",
    "encode_header",
    "encode_image",
    "encode_value",
    "forward_transform",
    "inverse_transform",
    "layout_to_blocks",
    "observed_only",
    "pairs_for_category",
    "quantization_matrix",
    "quantize_blocks",
    "value_from_index",
    "value_index",
]
