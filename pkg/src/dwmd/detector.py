"""Impulse detection from weighted directional absolute differences.

For each pixel, the detector sums weighted absolute gray-level differences
against the four neighbors along each of the four principal directions of
a 5x5 window. The minimum of the four direction indexes is the detection
statistic r: flat regions and pixels on edges or thin lines keep at least
one small index, while impulses drive all four up. A pixel is flagged
noisy exactly when r strictly exceeds the threshold (r equal to the
threshold counts as noise-free).

All detector arithmetic is integer: the statistic never exceeds
6 * 255 = 1530, and identical inputs give identical maps on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .directions import DIRECTIONS, direction_set
from .image import GrayImage, get_reflected

STATISTIC_MAX = 6 * 255

DEFAULT_THRESHOLD = 256


@dataclass(frozen=True)
class DetectionParams:
    """Detector tuning: the decision threshold and the inner-ring weight."""

    threshold: float = DEFAULT_THRESHOLD
    inner_weight: int = 2

    def __post_init__(self):
        if self.threshold < 0:
            raise ValueError(f"threshold must be nonnegative, got {self.threshold}")
        if self.inner_weight < 1:
            raise ValueError(f"inner weight must be at least 1, got {self.inner_weight}")


@dataclass(frozen=True)
class DetectionMap:
    """Per-pixel detection statistic and noisy/noise-free verdicts."""

    statistic: np.ndarray  # int32, shape (height, width)
    noisy: np.ndarray      # bool, shape (height, width)
    threshold: float       # the threshold the verdicts were taken at

    def __post_init__(self):
        for name in ("statistic", "noisy"):
            arr = getattr(self, name)
            arr = arr.copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def width(self) -> int:
        return self.statistic.shape[1]

    @property
    def height(self) -> int:
        return self.statistic.shape[0]

    @property
    def flagged_count(self) -> int:
        return int(self.noisy.sum())

    def to_mask_image(self) -> GrayImage:
        """Render the verdicts as a 0/255 image (255 = flagged noisy)."""
        return GrayImage(np.where(self.noisy, 255, 0).astype(np.uint8))


def _offset_weight(s: int, t: int, inner_weight: int) -> int:
    return inner_weight if max(abs(s), abs(t)) <= 1 else 1


def direction_index(img: GrayImage, i: int, j: int, k: int, inner_weight: int = 2) -> int:
    """Weighted sum of absolute differences along direction k at pixel (i, j).

    Neighbor reads past the border are mirror-reflected. The value is a
    plain integer in [0, 6 * 255] for the default weights.
    """
    dset = direction_set(k)
    center = img.pixel(i, j)
    total = 0
    for s, t in dset.members:
        total += _offset_weight(s, t, inner_weight) * abs(get_reflected(img, i + s, j + t) - center)
    return total


def detection_statistic(img: GrayImage, i: int, j: int, inner_weight: int = 2) -> int:
    """Minimum of the four direction indexes at pixel (i, j)."""
    return min(direction_index(img, i, j, k, inner_weight) for k in (1, 2, 3, 4))


def statistic_map(img: GrayImage, inner_weight: int = 2) -> np.ndarray:
    """Whole-image detection statistic as an int32 array (vectorized)."""
    h, w = img.height, img.width
    padded = np.pad(img.pixels, 2, mode="reflect").astype(np.int32)
    center = padded[2 : 2 + h, 2 : 2 + w]
    best: np.ndarray | None = None
    for dset in DIRECTIONS:
        total = np.zeros((h, w), dtype=np.int32)
        for s, t in dset.members:
            shifted = padded[2 + s : 2 + s + h, 2 + t : 2 + t + w]
            total += _offset_weight(s, t, inner_weight) * np.abs(shifted - center)
        best = total if best is None else np.minimum(best, total)
    return best


def detect(img: GrayImage, params: DetectionParams | None = None) -> DetectionMap:
    """Classify every pixel of an image as noisy or noise-free.

    Border pixels are detected like interior ones through mirrored reads.
    Requires an image of at least 5x5 (the window size).
    """
    if params is None:
        params = DetectionParams()
    if img.width < 5 or img.height < 5:
        raise ValueError(f"detection needs an image of at least 5x5, got {img.width}x{img.height}")
    statistic = statistic_map(img, params.inner_weight)
    return DetectionMap(statistic=statistic, noisy=statistic > params.threshold, threshold=params.threshold)


def statistic_histogram(detmap: DetectionMap, bin_width: int = 64) -> str:
    """Plain-text histogram of the statistic values, one bin per line."""
    if bin_width < 1:
        raise ValueError(f"bin width must be at least 1, got {bin_width}")
    values = detmap.statistic.reshape(-1)
    top = int(values.max()) if values.size else 0
    lines = []
    for lo in range(0, top + 1, bin_width):
        hi = lo + bin_width - 1
        count = int(((values >= lo) & (values <= hi)).sum())
        lines.append(f"{lo:>5}..{hi:<5} {count}")
    return "\n".join(lines) + "\n"
