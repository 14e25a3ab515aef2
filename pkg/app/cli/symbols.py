"""
encode / decode: general-purpose byte files to nucleotide FASTA and back.

The output holds a ``codebook`` record whose metadata carries the coder,
its settings and the codebook, followed by a ``payload`` record with the
nucleotides.
"""

import argparse
import logging
from collections import Counter
from pathlib import Path

from pydantic import ValidationError

from app.coders import NUCLEOTIDE_CODERS, get_coder
from app.errors import DesynchronizationError, IngestionError, StructuralError
from app.models.tree import codebook_from_tree, tree_from_codebook
from app.schemas.codebook import Codebook
from app.schemas.symbols import FrequencyTable
from app.services.fasta import FastaRecord, read_records, write_records
from app.transcoders.tables import INITIAL_NUCLEOTIDE
from app.utils import ensure_parent

from .common import add_max_hl, settings_from_args

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    encode = subparsers.add_parser("encode", help="encode a file of 8-bit symbols to nucleotides")
    encode.add_argument("input")
    encode.add_argument("output")
    encode.add_argument("--coder", default="sfc", choices=NUCLEOTIDE_CODERS)
    add_max_hl(encode)
    encode.set_defaults(handler=cmd_encode)

    decode = subparsers.add_parser("decode", help="decode a nucleotide file written by encode")
    decode.add_argument("input")
    decode.add_argument("output")
    add_max_hl(decode)
    decode.set_defaults(handler=cmd_decode)


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise IngestionError("unreadable_input", f"{path}: {exc.strerror}") from None


def encode_bytes(data: bytes, coder_name: str, max_hl: int) -> list[FastaRecord]:
    """Code ``data`` with a per-file code; symbols are the byte values that occur."""
    coder = get_coder(coder_name, max_hl)
    counts = Counter(data)
    alphabet = sorted(counts)
    meta = {
        "coder": coder_name,
        "max_hl": max_hl,
        "initial": INITIAL_NUCLEOTIDE,
        "symbols": len(data),
        "alphabet": alphabet,
        "codebook": None,
    }
    bases = ""
    if data:
        table = FrequencyTable.from_counts([counts[b] for b in alphabet], [str(b) for b in alphabet])
        book = codebook_from_tree(coder.tree(table))
        compact = {b: i for i, b in enumerate(alphabet)}
        bases = "".join(coder.pieces(book.codeword(compact[b]) for b in data))
        meta["codebook"] = book.to_json_dict()
    return [
        FastaRecord(name="codebook", sequence="", meta=meta),
        FastaRecord(name="payload", sequence=bases, meta={"nt": len(bases)}),
    ]


def decode_records(records: list[FastaRecord], max_hl_flag: int | None = None) -> bytes:
    """
    Invert ``encode_bytes``.

    The header's max_hl wins over ``max_hl_flag``; a disagreement is logged.

    Raises:
        StructuralError: If the records or embedded codebook are malformed
        DesynchronizationError: If the payload does not decode to the recorded length
    """
    by_name = {r.name: r for r in records}
    if "codebook" not in by_name or "payload" not in by_name:
        raise StructuralError("missing_record", "expected 'codebook' and 'payload' records")
    meta = by_name["codebook"].meta
    bases = by_name["payload"].sequence
    try:
        coder_name = meta["coder"]
        max_hl = int(meta["max_hl"])
        expected = int(meta["symbols"])
        alphabet = [int(b) for b in meta["alphabet"]]
        initial = meta.get("initial", INITIAL_NUCLEOTIDE)
        book = Codebook.model_validate(meta["codebook"]) if meta["codebook"] is not None else None
    except (KeyError, TypeError, ValueError, ValidationError) as exc:
        raise StructuralError("bad_codebook_header", str(exc)) from None
    if not (isinstance(initial, str) and len(initial) == 1 and initial in "ACGT"):
        raise StructuralError("bad_codebook_header", f"initial nucleotide {initial!r} is not one of A, C, G, T")

    if max_hl_flag is not None and max_hl_flag != max_hl:
        logger.warning("--max-hl %d ignored: header records max_hl %d", max_hl_flag, max_hl)
    if book is None:
        if bases or expected:
            raise StructuralError("bad_codebook_header", "payload present without a codebook")
        return b""

    coder = get_coder(coder_name, max_hl)
    symbols = coder.decode(bases, tree_from_codebook(book), initial)
    if len(symbols) != expected:
        raise DesynchronizationError(
            "length_mismatch", len(bases), f"decoded {len(symbols)} symbols, header records {expected}"
        )
    try:
        return bytes(alphabet[s] for s in symbols)
    except IndexError:
        raise StructuralError("bad_codebook_header", "codebook symbol outside the recorded alphabet") from None


def cmd_encode(args: argparse.Namespace) -> int:
    cfg = settings_from_args(args)
    data = _read_bytes(args.input)
    records = encode_bytes(data, args.coder, cfg.max_hl)
    write_records(records, ensure_parent(args.output), width=cfg.fasta_line_width)
    logger.info("Encoded %d bytes into %d nt", len(data), len(records[1].sequence))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    data = decode_records(read_records(args.input), args.max_hl)
    ensure_parent(args.output).write_bytes(data)
    logger.info("Decoded %d bytes to %s", len(data), args.output)
    return 0
