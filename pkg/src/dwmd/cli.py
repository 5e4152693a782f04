"""Command-line front end: corrupt, denoise, eval and bench subcommands.

Each subcommand is a thin composition of library calls; no filtering or
metric logic lives here. Data goes to files or stdout, diagnostics to
stderr. Numeric table cells are pinned to fixed precision (PSNR 2
decimals, fidelity 6, precision/recall 4, wall time 3) so repeated runs
are byte-identical apart from the timing column.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .detector import DEFAULT_THRESHOLD, DetectionParams, detect
from .filters import DEFAULT_STEP, FilterParams, dwmd_denoise, median3x3
from .metrics import detection_score, fidelity, psnr, quality_report
from .noise import NoiseSpec, inject_rvin, mask_from_image
from .pgm import PgmError, load_pgm, save_pgm

FILTERS = ("dwmd", "median3x3")
FORMATS = ("text", "csv", "markdown")


@dataclass
class RunConfig:
    """Resolved options for the corrupt and denoise subcommands."""

    input_path: str
    output_path: str
    mask_path: str | None = None
    level: float = 0.0
    seed: int = 0
    threshold: float = DEFAULT_THRESHOLD
    step: int = DEFAULT_STEP
    filter_name: str = "dwmd"
    report_format: str = "text"


def _fraction(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"noise level must be in [0, 1], got {value}")
    return value


def _fraction_list(text: str) -> list[float]:
    items = [piece for piece in text.split(",") if piece.strip()]
    if not items:
        raise argparse.ArgumentTypeError("levels list must not be empty")
    return [_fraction(piece.strip()) for piece in items]


def _format_psnr(value: float | None) -> str:
    return "identical" if value is None else f"{value:.2f}"


def _render_table(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join(" --- " for _ in header) + "|")
        lines.extend("| " + " | ".join(row) + " |" for row in rows)
        return "\n".join(lines) + "\n"
    widths = [max(len(header[c]), *(len(row[c]) for row in rows)) if rows else len(header[c])
              for c in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.extend("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
    return "\n".join(lines) + "\n"


def cmd_corrupt(config: RunConfig) -> int:
    """Write a corrupted copy of the input plus the ground-truth mask."""
    img = load_pgm(config.input_path)
    noisy, mask = inject_rvin(img, NoiseSpec(level=config.level, seed=config.seed))
    save_pgm(config.output_path, noisy)
    if config.mask_path:
        save_pgm(config.mask_path, mask.to_image())
    print(f"corrupted={mask.count}")
    return 0


def cmd_denoise(config: RunConfig) -> int:
    """Restore the input with the selected filter and write the result."""
    img = load_pgm(config.input_path)
    if config.filter_name == "median3x3":
        restored = median3x3(img)
        save_pgm(config.output_path, restored)
        return 0
    params = FilterParams(detection=DetectionParams(threshold=config.threshold), step=config.step)
    restored, detmap = dwmd_denoise(img, params)
    save_pgm(config.output_path, restored)
    print(f"flagged={detmap.flagged_count} restored={detmap.flagged_count}")
    return 0


def cmd_eval(reference_path: str, test_path: str, truth_mask_path: str | None = None,
             fmt: str = "text", threshold: float = DEFAULT_THRESHOLD) -> int:
    """Report quality metrics of a test image against a reference.

    With a ground-truth mask, additionally runs the impulse detector on
    the test image and reports its precision and recall.
    """
    reference = load_pgm(reference_path)
    test = load_pgm(test_path)
    report = quality_report(reference, test)
    header = ["mse", "psnr_db", "fidelity", "n_pixels"]
    row = [f"{report.mse:.6f}", _format_psnr(report.psnr_db), f"{report.fidelity:.6f}",
           str(report.n_pixels)]
    if truth_mask_path:
        truth = mask_from_image(load_pgm(truth_mask_path))
        score = detection_score(truth, detect(test, DetectionParams(threshold=threshold)))
        header += ["precision", "recall", "tp", "fp", "fn", "tn"]
        row += [f"{score.precision:.4f}", f"{score.recall:.4f}", str(score.true_positives),
                str(score.false_positives), str(score.false_negatives), str(score.true_negatives)]
    if fmt == "text":
        for key, cell in zip(header, row):
            print(f"{key}={cell}")
    else:
        print(_render_table(header, [row], fmt), end="")
    return 0


def cmd_bench(image_path: str, levels: list[float], seed: int = 0, fmt: str = "text",
              threshold: float = DEFAULT_THRESHOLD, step: int = DEFAULT_STEP) -> int:
    """Corrupt the image at each level and tabulate both filters.

    The per-level seed is the base seed plus the level's position in the
    list, so a single seed flag reproduces the whole table.
    """
    if not levels:
        raise ValueError("levels list must not be empty")
    clean = load_pgm(image_path)
    params = FilterParams(detection=DetectionParams(threshold=threshold), step=step)
    header = ["level", "noisy_psnr_db", "median_psnr_db", "dwmd_psnr_db",
              "dwmd_fidelity", "precision", "recall", "time_s"]
    rows = []
    for index, level in enumerate(levels):
        noisy, mask = inject_rvin(clean, NoiseSpec(level=level, seed=seed + index))
        started = time.perf_counter()
        restored, detmap = dwmd_denoise(noisy, params)
        elapsed = time.perf_counter() - started
        median = median3x3(noisy)
        score = detection_score(mask, detmap)
        rows.append([
            f"{level:.2f}",
            _format_psnr(psnr(clean, noisy)),
            _format_psnr(psnr(clean, median)),
            _format_psnr(psnr(clean, restored)),
            f"{fidelity(clean, restored):.6f}",
            f"{score.precision:.4f}",
            f"{score.recall:.4f}",
            f"{elapsed:.3f}",
        ])
    print(_render_table(header, rows, fmt), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dwmd",
        description="Directional weighted minimum-deviation impulse noise removal for PGM images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    corrupt = sub.add_parser("corrupt", help="inject random-valued impulse noise")
    corrupt.add_argument("--in", dest="input_path", required=True, metavar="PGM")
    corrupt.add_argument("--out", dest="output_path", required=True, metavar="PGM")
    corrupt.add_argument("--mask", dest="mask_path", metavar="PGM",
                         help="where to write the ground-truth mask (0=clean, 255=corrupted)")
    corrupt.add_argument("--level", type=_fraction, required=True,
                         help="fraction of pixels to corrupt, in [0, 1]")
    corrupt.add_argument("--seed", type=int, default=0)

    denoise = sub.add_parser("denoise", help="restore a corrupted image")
    denoise.add_argument("--in", dest="input_path", required=True, metavar="PGM")
    denoise.add_argument("--out", dest="output_path", required=True, metavar="PGM")
    denoise.add_argument("--filter", dest="filter_name", choices=FILTERS, default="dwmd")
    denoise.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    denoise.add_argument("--step", type=int, default=DEFAULT_STEP)

    evaluate = sub.add_parser("eval", help="quality metrics of a test image vs a reference")
    evaluate.add_argument("--ref", dest="reference_path", required=True, metavar="PGM")
    evaluate.add_argument("--test", dest="test_path", required=True, metavar="PGM")
    evaluate.add_argument("--truth-mask", dest="truth_mask_path", metavar="PGM",
                          help="ground-truth mask; also scores the detector on the test image")
    evaluate.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    evaluate.add_argument("--format", dest="report_format", choices=FORMATS, default="text")

    bench = sub.add_parser("bench", help="noise/denoise comparison table over several levels")
    bench.add_argument("--image", dest="image_path", required=True, metavar="PGM")
    bench.add_argument("--levels", type=_fraction_list, required=True,
                       help="comma-separated noise levels, each in [0, 1]")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    bench.add_argument("--step", type=int, default=DEFAULT_STEP)
    bench.add_argument("--format", dest="report_format", choices=FORMATS, default="text")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corrupt":
            return cmd_corrupt(RunConfig(input_path=args.input_path, output_path=args.output_path,
                                         mask_path=args.mask_path, level=args.level, seed=args.seed))
        if args.command == "denoise":
            return cmd_denoise(RunConfig(input_path=args.input_path, output_path=args.output_path,
                                         threshold=args.threshold, step=args.step,
                                         filter_name=args.filter_name))
        if args.command == "eval":
            return cmd_eval(args.reference_path, args.test_path, args.truth_mask_path,
                            args.report_format, args.threshold)
        return cmd_bench(args.image_path, args.levels, args.seed, args.report_format,
                         args.threshold, args.step)
    except (PgmError, ValueError, OSError) as exc:
        print(f"dwmd: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
