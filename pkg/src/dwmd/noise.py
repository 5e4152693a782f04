"""Seeded random-valued impulse noise injection with ground-truth masks.

The corruption model replaces an exact count of distinct pixel positions,
round(level * width * height), with values drawn uniformly from [0, 255];
a drawn value equal to the original pixel is re-drawn, so every masked
pixel really is corrupted. Randomness comes from numpy's RandomState
(Mersenne Twister MT19937), whose output streams are frozen across numpy
releases, so a fixed seed reproduces positions and values bit-for-bit on
any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayImage


@dataclass(frozen=True)
class NoiseSpec:
    """Fraction of pixels to corrupt and the 64-bit seed that fixes the run."""

    level: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.level <= 1.0:
            raise ValueError(f"noise level must be in [0, 1], got {self.level}")


@dataclass(frozen=True)
class NoiseMask:
    """Row-major boolean grid of injected impulse positions (True = corrupted)."""

    flags: np.ndarray

    def __post_init__(self):
        flags = np.asarray(self.flags, dtype=bool)
        if flags.ndim != 2:
            raise ValueError(f"mask must be 2-D, got shape {flags.shape}")
        flags = flags.copy()
        flags.flags.writeable = False
        object.__setattr__(self, "flags", flags)

    @property
    def width(self) -> int:
        return self.flags.shape[1]

    @property
    def height(self) -> int:
        return self.flags.shape[0]

    @property
    def count(self) -> int:
        return int(self.flags.sum())

    def to_image(self) -> GrayImage:
        """Render the mask as a 0/255 image (255 = corrupted) for PGM export."""
        return GrayImage(np.where(self.flags, 255, 0).astype(np.uint8))


def mask_from_image(img: GrayImage) -> NoiseMask:
    """Inverse of NoiseMask.to_image; pixels must be exactly 0 or 255."""
    arr = img.pixels
    if not np.all((arr == 0) | (arr == 255)):
        raise ValueError("mask image must contain only 0 and 255")
    return NoiseMask(arr == 255)


def _seeded_rng(seed: int) -> np.random.RandomState:
    # RandomState seeds are 32-bit words; split the 64-bit seed into two
    u = seed % (1 << 64)
    return np.random.RandomState(np.array([u & 0xFFFFFFFF, u >> 32], dtype=np.uint32))


def inject_rvin(img: GrayImage, spec: NoiseSpec) -> tuple[GrayImage, NoiseMask]:
    """Corrupt an exact, seeded random subset of pixels with uniform impulses.

    Returns the corrupted image and the ground-truth mask. Identical
    (img, spec) inputs yield bit-identical outputs.
    """
    total = img.n_pixels
    n = int(np.floor(spec.level * total + 0.5))  # round half up
    rng = _seeded_rng(spec.seed)
    out = img.pixels.copy()
    flags = np.zeros(total, dtype=bool)
    if n > 0:
        positions = rng.choice(total, size=n, replace=False)
        flags[positions] = True
        flat = out.reshape(-1)
        original = flat[positions].copy()
        values = rng.randint(0, 256, size=n).astype(np.uint8)
        while True:
            collisions = values == original
            if not collisions.any():
                break
            values[collisions] = rng.randint(0, 256, size=int(collisions.sum())).astype(np.uint8)
        flat[positions] = values
    return GrayImage(out), NoiseMask(flags.reshape(img.height, img.width))


def noise_density(mask: NoiseMask) -> float:
    """Fraction of corrupted pixels in the mask."""
    return mask.count / (mask.width * mask.height)
