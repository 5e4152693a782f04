"""Directional weighted minimum-deviation (DWMD) impulse noise removal.

A toolkit for grayscale images corrupted by random-valued impulse noise:
a two-phase switching filter (directional impulse detector plus
minimum-deviation restoration), a seeded noise injector with ground-truth
masks, a 3x3 median baseline, PSNR/fidelity metrics and bit-exact PGM I/O.
"""

from .detector import (
    DEFAULT_THRESHOLD,
    DetectionMap,
    DetectionParams,
    detect,
    detection_statistic,
    direction_index,
    statistic_histogram,
    statistic_map,
)
from .directions import DIRECTIONS, DirectionSet, Offset, direction_members, weight
from .filters import (
    DEFAULT_STEP,
    DirectionalSample,
    FilterParams,
    best_direction,
    directional_sample,
    directional_sd,
    dwmd_denoise,
    median3x3,
    minimize_center,
    restore_pixel,
    snap_to_set,
)
from .image import GrayImage, get_reflected, make_image, reflect_index
from .metrics import (
    DetectionScore,
    QualityReport,
    detection_score,
    fidelity,
    mse,
    psnr,
    quality_report,
)
from .noise import NoiseMask, NoiseSpec, inject_rvin, mask_from_image, noise_density
from .pgm import PgmError, load_pgm, read_pgm, save_pgm, write_pgm

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_STEP",
    "DEFAULT_THRESHOLD",
    "DIRECTIONS",
    "DetectionMap",
    "DetectionParams",
    "DetectionScore",
    "DirectionSet",
    "DirectionalSample",
    "FilterParams",
    "GrayImage",
    "NoiseMask",
    "NoiseSpec",
    "Offset",
    "PgmError",
    "QualityReport",
    "best_direction",
    "detect",
    "detection_score",
    "detection_statistic",
    "direction_index",
    "direction_members",
    "directional_sample",
    "directional_sd",
    "dwmd_denoise",
    "fidelity",
    "get_reflected",
    "inject_rvin",
    "load_pgm",
    "make_image",
    "mask_from_image",
    "median3x3",
    "minimize_center",
    "mse",
    "noise_density",
    "psnr",
    "quality_report",
    "read_pgm",
    "reflect_index",
    "restore_pixel",
    "save_pgm",
    "snap_to_set",
    "statistic_histogram",
    "statistic_map",
    "weight",
    "write_pgm",
]
