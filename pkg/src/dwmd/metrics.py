"""Restoration quality metrics and detector scoring.

PSNR uses the 8-bit peak: 10 * log10(255^2 / MSE), reported in dB.
Identical images have MSE 0; that case is an explicit None sentinel
rather than a floating infinity so reports stay portable. Image fidelity
is 1 - (total squared error / total squared reference energy), 1.0 for a
perfect restoration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .detector import DetectionMap
from .image import GrayImage
from .noise import NoiseMask

PEAK_SQUARED = 255 * 255


def _check_same_size(a, b) -> None:
    if a.width != b.width or a.height != b.height:
        raise ValueError(f"size mismatch: {a.width}x{a.height} vs {b.width}x{b.height}")


def _squared_error_sum(reference: GrayImage, test: GrayImage) -> int:
    diff = reference.pixels.astype(np.int64) - test.pixels.astype(np.int64)
    return int((diff * diff).sum())


def mse(reference: GrayImage, test: GrayImage) -> float:
    """Mean squared error; squared differences are accumulated exactly in
    integers and divided once."""
    _check_same_size(reference, test)
    return _squared_error_sum(reference, test) / reference.n_pixels


def psnr(reference: GrayImage, test: GrayImage) -> float | None:
    """Peak signal-to-noise ratio in dB, or None for identical images."""
    err = mse(reference, test)
    if err == 0.0:
        return None
    return 10.0 * math.log10(PEAK_SQUARED / err)


def fidelity(reference: GrayImage, test: GrayImage) -> float:
    """Image fidelity: 1 - sum((ref - test)^2) / sum(ref^2).

    Undefined (raises) for an all-zero reference.
    """
    _check_same_size(reference, test)
    ref = reference.pixels.astype(np.int64)
    energy = int((ref * ref).sum())
    if energy == 0:
        raise ValueError("fidelity is undefined for an all-zero reference image")
    return 1.0 - _squared_error_sum(reference, test) / energy


@dataclass(frozen=True)
class QualityReport:
    """Quality of one restoration run; psnr_db is None when test == reference."""

    mse: float
    psnr_db: float | None
    fidelity: float
    n_pixels: int

    def to_text(self) -> str:
        """Flat key=value record, one field per line."""
        psnr_cell = "identical" if self.psnr_db is None else f"{self.psnr_db:.2f}"
        return (
            f"mse={self.mse:.6f}\n"
            f"psnr_db={psnr_cell}\n"
            f"fidelity={self.fidelity:.6f}\n"
            f"n_pixels={self.n_pixels}\n"
        )


def quality_report(reference: GrayImage, test: GrayImage) -> QualityReport:
    """MSE, PSNR and fidelity of a test image against its reference."""
    return QualityReport(
        mse=mse(reference, test),
        psnr_db=psnr(reference, test),
        fidelity=fidelity(reference, test),
        n_pixels=reference.n_pixels,
    )


@dataclass(frozen=True)
class DetectionScore:
    """Confusion counts of a detection map against a ground-truth mask."""

    true_positives: int
    false_positives: int
    false_negatives: int
    true_negatives: int

    @property
    def precision(self) -> float:
        denom = self.true_positives + self.false_positives
        return self.true_positives / denom if denom else 1.0

    @property
    def recall(self) -> float:
        denom = self.true_positives + self.false_negatives
        return self.true_positives / denom if denom else 1.0


def detection_score(truth: NoiseMask, predicted: DetectionMap) -> DetectionScore:
    """Score predicted noisy flags against the injected ground truth.

    The degenerate 0/0 cases of precision and recall count as 1.
    """
    _check_same_size(truth, predicted)
    t = truth.flags
    p = predicted.noisy
    return DetectionScore(
        true_positives=int((t & p).sum()),
        false_positives=int((~t & p).sum()),
        false_negatives=int((t & ~p).sum()),
        true_negatives=int((~t & ~p).sum()),
    )
