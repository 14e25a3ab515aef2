"""
Two-pass JPEG-DNA image codec.

Pass one quantizes every block and counts DC categories and AC run/category
symbols. Pass two builds the selected variable-length coder from those
per-image counts, transcodes both category streams to nucleotides and writes
the values with the fixed-length pair coder. The header carries everything
the decoder needs to rebuild the same trees.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from app.coders import Coder, get_coder
from app.errors import DesynchronizationError, InputError, StructuralError
from app.metrics import compression_ratio_bits_per_nt, psnr
from app.models.tree import codebook_from_tree
from app.schemas.codec import (
    AC_ALPHABET_SIZE,
    DC_ALPHABET_SIZE,
    CodecConfig,
    CodecHeader,
    JpegDnaBitstreamLayout,
    ac_label,
)
from app.schemas.symbols import FrequencyTable
from app.services.fasta import FastaRecord
from app.transcoders.homopolymer import max_homopolymer_run, max_piece_run
from app.transcoders.tables import INITIAL_NUCLEOTIDE

from .categorize import categorize, decategorize, value_from_index
from .header import decode_header, encode_header
from .transform import block_grid, dequantize_blocks, forward_transform, quantize_blocks, spectra_from_coefficients
from .value_coder import PairReader, encode_values

logger = logging.getLogger(__name__)

STREAM_NAMES = ("header", "dc", "ac", "values")


def _observed(counts: Counter) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(k), int(v)) for k, v in counts.items() if v > 0))


def compact_table(observed: tuple[tuple[int, int], ...], labels=str) -> tuple[FrequencyTable, dict[int, int]]:
    """Frequency table over the observed symbols only, plus the global-to-compact id map."""
    table = FrequencyTable.from_counts([c for _, c in observed], [labels(s) for s, _ in observed])
    return table, {symbol_id: i for i, (symbol_id, _) in enumerate(observed)}


@dataclass
class EncodedImage:
    header: CodecHeader
    header_bases: str
    dc_bases: str
    ac_bases: str
    value_bases: str
    layout: Optional[JpegDnaBitstreamLayout] = None
    reconstruction_psnr: Optional[float] = None
    dc_codeword_run: int = 0
    ac_codeword_run: int = 0

    @property
    def streams(self) -> dict[str, str]:
        return dict(zip(STREAM_NAMES, (self.header_bases, self.dc_bases, self.ac_bases, self.value_bases)))

    @property
    def total_nucleotides(self) -> int:
        return sum(len(s) for s in self.streams.values())

    @property
    def source_bits(self) -> int:
        return self.header.height * self.header.width * 8

    @property
    def bits_per_nt(self) -> float:
        return compression_ratio_bits_per_nt(self.source_bits, self.total_nucleotides)

    def to_records(self) -> list[FastaRecord]:
        return [
            FastaRecord(name=name, sequence=bases, meta={"stream": name, "nt": len(bases)})
            for name, bases in self.streams.items()
        ]

    @classmethod
    def from_records(cls, records: Iterable[FastaRecord]) -> "EncodedImage":
        """
        Reassemble the four streams from FASTA records.

        Raises:
            StructuralError: If a stream record is missing or repeated
        """
        by_name: dict[str, str] = {}
        for record in records:
            if record.name in by_name:
                raise StructuralError("duplicate_record", f"record {record.name!r} appears twice")
            by_name[record.name] = record.sequence
        missing = [n for n in STREAM_NAMES if n not in by_name]
        if missing:
            raise StructuralError("missing_record", f"missing stream records: {', '.join(missing)}")
        return cls(
            header=decode_header(by_name["header"]),
            header_bases=by_name["header"],
            dc_bases=by_name["dc"],
            ac_bases=by_name["ac"],
            value_bases=by_name["values"],
        )

    def manifest(self) -> dict:
        """Sidecar summary: config, stream sizes, rate and homopolymer figures."""
        return {
            "height": self.header.height,
            "width": self.header.width,
            "quality": self.header.quality,
            "vlc_kind": self.header.vlc_kind,
            "max_hl": self.header.max_hl,
            "streams": {
                name: {"nt": len(bases), "max_homopolymer_run": max_homopolymer_run(bases)}
                for name, bases in self.streams.items()
            },
            "max_codeword_run": {"dc": self.dc_codeword_run, "ac": self.ac_codeword_run},
            "total_nt": self.total_nucleotides,
            "bits_per_nt": self.bits_per_nt,
            "psnr_db": None if self.reconstruction_psnr is None else _json_psnr(self.reconstruction_psnr),
        }


def _json_psnr(value: float) -> float | str:
    return "inf" if np.isinf(value) else value


def _coder(cfg: CodecConfig) -> Coder:
    return get_coder(cfg.vlc_kind, cfg.max_hl)


def _vlc_stream(coder: Coder, observed, symbols, initial: str, labels=str) -> tuple[str, int]:
    table, to_compact = compact_table(observed, labels)
    book = codebook_from_tree(coder.tree(table))
    pieces = coder.pieces((book.codeword(to_compact[s]) for s in symbols), initial)
    return "".join(pieces), max_piece_run(pieces)


def encode_image(
    image: np.ndarray, cfg: CodecConfig, initial: str = INITIAL_NUCLEOTIDE
) -> EncodedImage:
    """
    Encode an 8-bit grayscale image to nucleotide streams.

    Args:
        image: 2-D uint8 array
        cfg: Quality, VLC kind and homopolymer limit
        initial: Nucleotide assumed before the first base of each stream

    Returns:
        EncodedImage holding the header and the DC, AC and value streams

    Raises:
        IngestionError: If the image is not 2-D 8-bit grayscale
        CategoryOverflowError: If a coefficient needs more than 11 bits
    """
    height, width = np.asarray(image).shape[:2]
    coeffs = quantize_blocks(image, cfg)
    blocks = spectra_from_coefficients(coeffs)
    layout = categorize(blocks)

    header = CodecHeader(
        height=height,
        width=width,
        quality=cfg.quality,
        vlc_kind=cfg.vlc_kind,
        max_hl=cfg.max_hl,
        initial_nucleotide=initial,
        dc_table=_observed(Counter(layout.dc_categories)),
        ac_table=_observed(Counter(layout.ac_symbols)),
    )
    coder = _coder(cfg)
    dc_bases, dc_run = _vlc_stream(coder, header.dc_table, layout.dc_categories, initial)
    ac_bases, ac_run = _vlc_stream(coder, header.ac_table, layout.ac_symbols, initial, ac_label)
    value_bases = encode_values(layout.value_categories, layout.value_indices)

    reconstruction = dequantize_blocks(coeffs, height, width, cfg.quality)
    encoded = EncodedImage(
        header=header,
        header_bases=encode_header(header),
        dc_bases=dc_bases,
        ac_bases=ac_bases,
        value_bases=value_bases,
        layout=layout,
        reconstruction_psnr=psnr(image, reconstruction),
        dc_codeword_run=dc_run,
        ac_codeword_run=ac_run,
    )
    logger.info(
        "Encoded %dx%d image (q=%d, %s): %d nt, %.4f bits/nt",
        width,
        height,
        cfg.quality,
        cfg.vlc_kind,
        encoded.total_nucleotides,
        encoded.bits_per_nt,
    )
    return encoded


def _decode_vlc(coder: Coder, observed, bases: str, initial: str) -> list[int]:
    if not observed:
        if bases:
            raise StructuralError("bad_header", "stream present but its frequency table is empty")
        return []
    table, to_compact = compact_table(observed)
    compact_ids = coder.decode(bases, coder.tree(table), initial)
    to_global = {i: s for s, i in to_compact.items()}
    return [to_global[i] for i in compact_ids]


def decode_coefficients(encoded: EncodedImage) -> np.ndarray:
    """
    Decode the entropy layer back to quantized coefficients, shape (blocks, 64), zigzag order.

    Raises:
        InputError: If the header describes an empty image
        CorruptionError: On desynchronization, leftover symbols or a bad header
    """
    header = encoded.header
    if header.height == 0 or header.width == 0:
        raise InputError("empty_image", f"header describes a {header.height}x{header.width} image")
    rows, cols = block_grid(header.height, header.width)
    coder = _coder(header.config)
    initial = header.initial_nucleotide

    dc_categories = _decode_vlc(coder, header.dc_table, encoded.dc_bases, initial)
    ac_symbols = _decode_vlc(coder, header.ac_table, encoded.ac_bases, initial)
    reader = PairReader(encoded.value_bases)
    blocks = decategorize(
        dc_categories,
        ac_symbols,
        lambda cat: value_from_index(reader.read_index(cat), cat),
        rows * cols,
    )
    if not reader.exhausted():
        raise DesynchronizationError("trailing_symbols", reader.offset, "values left after the last block")
    return np.array([(b.dc, *b.ac) for b in blocks], dtype=np.int64)


def decode_image(encoded: EncodedImage) -> np.ndarray:
    """
    Rebuild the image: entropy decode, dequantize, inverse DCT, level shift, clamp.

    Returns:
        uint8 array of the header's height and width
    """
    coeffs = decode_coefficients(encoded)
    header = encoded.header
    image = dequantize_blocks(coeffs, header.height, header.width, header.quality)
    logger.info("Decoded %dx%d image from %d nt", header.width, header.height, encoded.total_nucleotides)
    return image


def collect_statistics(images: Iterable[np.ndarray], quality: int) -> tuple[FrequencyTable, FrequencyTable]:
    """
    Statistics pass: DC category and AC run/category counts summed over images.

    Returns:
        (DC table over 12 categories, AC table over the full 178-symbol alphabet)
    """
    cfg = CodecConfig(quality=quality)
    dc_counts = np.zeros(DC_ALPHABET_SIZE, dtype=np.int64)
    ac_counts = np.zeros(AC_ALPHABET_SIZE, dtype=np.int64)
    for image in images:
        layout = categorize(forward_transform(image, cfg))
        dc_counts += np.bincount(np.asarray(layout.dc_categories, dtype=np.int64), minlength=DC_ALPHABET_SIZE)
        ac_counts += np.bincount(np.asarray(layout.ac_symbols, dtype=np.int64), minlength=AC_ALPHABET_SIZE)
    dc_table = FrequencyTable.from_counts(dc_counts.tolist())
    ac_table = FrequencyTable.from_counts(ac_counts.tolist(), [ac_label(i) for i in range(AC_ALPHABET_SIZE)])
    return dc_table, ac_table


def observed_only(table: FrequencyTable) -> FrequencyTable:
    """Drop zero-count symbols, keeping labels, ordered by decreasing count."""
    kept = sorted((e for e in table.entries if e.count > 0), key=lambda e: (-e.count, e.symbol.id))
    return FrequencyTable.from_counts([e.count for e in kept], [e.symbol.label for e in kept])
