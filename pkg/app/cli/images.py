"""
Image codec commands: img-encode, img-decode, img-sweep and img-stats.
"""

import argparse
import csv
import logging
import math
from pathlib import Path

from app.jpegdna.codec import EncodedImage, collect_statistics, decode_image, encode_image, observed_only
from app.metrics import psnr
from app.schemas.codec import CodecConfig
from app.services.fasta import read_records, write_records
from app.services.images import read_grayscale, write_pgm
from app.services.tables import write_frequency_table
from app.utils import ensure_parent, parse_int_grid, sidecar_path

from .common import add_max_hl, dump_json, settings_from_args, validated

logger = logging.getLogger(__name__)

SWEEP_SCHEMA = "# schema=image-sweep/1"
VLC_KINDS = ("sfc", "goldman")


def register(subparsers: argparse._SubParsersAction) -> None:
    enc = subparsers.add_parser("img-encode", help="encode a grayscale image to nucleotide streams")
    enc.add_argument("input")
    enc.add_argument("output")
    enc.add_argument("--quality", type=int, default=None)
    enc.add_argument("--vlc", choices=VLC_KINDS, default="sfc")
    add_max_hl(enc)
    enc.set_defaults(handler=cmd_img_encode)

    dec = subparsers.add_parser("img-decode", help="decode nucleotide streams to a PGM image")
    dec.add_argument("input")
    dec.add_argument("output")
    dec.set_defaults(handler=cmd_img_decode)

    sweep = subparsers.add_parser("img-sweep", help="PSNR versus bits/nt over a quality grid")
    sweep.add_argument("images", nargs="+")
    sweep.add_argument("--qualities", default="20,40,60,80", help="list '20,40' or range '10:90:10'")
    sweep.add_argument("--vlc", default="sfc,goldman", help="comma-separated VLC kinds")
    sweep.add_argument("--output", default=None, help="CSV path (default <out-dir>/sweep.csv)")
    sweep.add_argument("--out-dir", default=None)
    add_max_hl(sweep)
    sweep.set_defaults(handler=cmd_img_sweep)

    stats = subparsers.add_parser("img-stats", help="AC run/category frequency table over images")
    stats.add_argument("images", nargs="+")
    stats.add_argument("--quality", type=int, default=None)
    stats.add_argument("--output", required=True, help="frequency table CSV")
    stats.add_argument("--all-symbols", action="store_true", help="keep unobserved symbols with count 0")
    stats.set_defaults(handler=cmd_img_stats)


def cmd_img_encode(args: argparse.Namespace) -> int:
    cfg = settings_from_args(args, quality=args.quality)
    codec = validated(CodecConfig, quality=cfg.quality, vlc_kind=args.vlc, max_hl=cfg.max_hl)
    encoded = encode_image(read_grayscale(args.input), codec, initial=cfg.initial_nucleotide)
    out = ensure_parent(args.output)
    write_records(encoded.to_records(), out, width=cfg.fasta_line_width)
    sidecar_path(out).write_bytes(dump_json({"input": str(args.input), **encoded.manifest()}))
    print(f"{encoded.total_nucleotides} nt  {encoded.bits_per_nt:.4f} bits/nt  PSNR {encoded.reconstruction_psnr:.2f} dB")
    return 0


def cmd_img_decode(args: argparse.Namespace) -> int:
    image = decode_image(EncodedImage.from_records(read_records(args.input)))
    write_pgm(image, ensure_parent(args.output))
    return 0


def _csv_float(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.6f}"


def cmd_img_sweep(args: argparse.Namespace) -> int:
    """One CSV row per image, VLC kind and quality."""
    cfg = settings_from_args(args)
    qualities = parse_int_grid(args.qualities)
    kinds = [k for k in args.vlc.split(",") if k]
    out = ensure_parent(args.output or Path(cfg.out_dir) / "sweep.csv")
    with open(out, "w", newline="", encoding="utf-8") as handle:
        handle.write(SWEEP_SCHEMA + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["image", "vlc", "quality", "total_nt", "value_nt", "bits_per_nt", "psnr_db"])
        for path in args.images:
            image = read_grayscale(path)
            for kind in kinds:
                for quality in qualities:
                    codec = validated(CodecConfig, quality=quality, vlc_kind=kind, max_hl=cfg.max_hl)
                    encoded = encode_image(image, codec, initial=cfg.initial_nucleotide)
                    # decode to measure the end-to-end reconstruction
                    quality_db = psnr(image, decode_image(encoded))
                    writer.writerow(
                        [
                            Path(path).name,
                            kind,
                            quality,
                            encoded.total_nucleotides,
                            len(encoded.value_bases),
                            f"{encoded.bits_per_nt:.6f}",
                            _csv_float(quality_db),
                        ]
                    )
    logger.info("Wrote sweep of %d images to %s", len(args.images), out)
    return 0


def cmd_img_stats(args: argparse.Namespace) -> int:
    cfg = settings_from_args(args, quality=args.quality)
    _, ac_table = collect_statistics((read_grayscale(p) for p in args.images), cfg.quality)
    table = ac_table if args.all_symbols else observed_only(ac_table)
    write_frequency_table(table, ensure_parent(args.output))
    return 0
