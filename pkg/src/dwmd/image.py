"""Immutable 8-bit grayscale image container with mirrored border access.

Pixels are stored row-major as a read-only numpy uint8 array of shape
(height, width); coordinates are (i, j) = (row, column). Windowed
operations reach up to 2 pixels past the border; those reads are resolved
by mirror reflection about the border without repeating the edge row or
column (index -1 maps to 1, -2 to 2, height to height-2 and so on), which
is exactly numpy's ``pad(..., mode="reflect")``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


class GrayImage:
    """Rectangular grid of gray levels in [0, 255]. Immutable."""

    __slots__ = ("_pixels",)

    def __init__(self, pixels: np.ndarray | Sequence[Sequence[int]]):
        arr = np.asarray(pixels)
        if arr.ndim != 2:
            raise ValueError(f"image data must be 2-D, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be at least 1x1, got {arr.shape}")
        if arr.dtype.kind not in "iu":
            raise ValueError(f"gray levels must be integers, got dtype {arr.dtype}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("gray levels out of range [0, 255]")
        arr = arr.astype(np.uint8, copy=True)
        arr.flags.writeable = False
        self._pixels = arr

    @property
    def pixels(self) -> np.ndarray:
        """Read-only (height, width) uint8 array, row-major."""
        return self._pixels

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    @property
    def n_pixels(self) -> int:
        return self._pixels.size

    def pixel(self, i: int, j: int) -> int:
        """Gray level at row i, column j (bounds-checked, no wrap-around)."""
        if not (0 <= i < self.height and 0 <= j < self.width):
            raise IndexError(f"pixel ({i}, {j}) outside {self.height}x{self.width} image")
        return int(self._pixels[i, j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self._pixels.shape == other._pixels.shape and bool(
            np.array_equal(self._pixels, other._pixels)
        )

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


def make_image(width: int, height: int, data: Sequence[int]) -> GrayImage:
    """Build an image from a flat row-major sequence of gray levels.

    Pixel (i, j) of the result is data[i * width + j].
    """
    if width < 1 or height < 1:
        raise ValueError(f"image dimensions must be at least 1x1, got {width}x{height}")
    arr = np.asarray(data)
    if arr.ndim != 1 or arr.size != width * height:
        raise ValueError(
            f"data length {arr.size} does not match {width}x{height} = {width * height} pixels"
        )
    return GrayImage(arr.reshape(height, width))


def reflect_index(x: int, n: int) -> int:
    """Mirror an axis index about the borders of [0, n) without repeating
    the edge element. Valid for -2 <= x <= n + 1 with n >= 3."""
    if x < 0:
        return -x
    if x >= n:
        return 2 * n - 2 - x
    return x


def get_reflected(img: GrayImage, i: int, j: int) -> int:
    """Gray level at (i, j) with up to 2 pixels of mirrored border reach.

    In-range coordinates return the stored pixel. The image must be at
    least 3x3 so that every reflected index lands inside the grid.
    """
    h, w = img.height, img.width
    if h < 3 or w < 3:
        raise ValueError(f"reflected access needs an image of at least 3x3, got {w}x{h}")
    if not (-2 <= i <= h + 1 and -2 <= j <= w + 1):
        raise IndexError(f"index ({i}, {j}) beyond the 2-pixel reflected reach")
    return int(img.pixels[reflect_index(i, h), reflect_index(j, w)])
