"""
Images, mirrored borders, and PGM round trips
=============================================

The toolkit works on immutable 8-bit grayscale images. Windowed
operations read up to two pixels past the border; those reads are
resolved by mirror reflection without repeating the edge row or column.
"""

import numpy as np

from dwmd import get_reflected, make_image, read_pgm, write_pgm

# A tiny 3x3 image, built from a flat row-major list.
img = make_image(3, 3, [1, 2, 3, 4, 5, 6, 7, 8, 9])
print("pixels:\n", img.pixels)

# In-range reads are plain lookups; out-of-range reads reflect about the
# border, so row -1 is row 1 and row -2 is row 2.
print("pixel (1, 1):          ", get_reflected(img, 1, 1))
print("reflected (-1, 0):     ", get_reflected(img, -1, 0))
print("reflected (-2, -2):    ", get_reflected(img, -2, -2))

# Binary PGM (P5) is the interchange format: a three-line header followed
# by the raw pixel bytes. write/read is a bit-exact round trip.
blob = write_pgm(img)
print("\nP5 bytes:", blob)
assert read_pgm(blob) == img

# The ASCII variant (P2) keeps one image row per line.
print("\nP2 form:\n" + write_pgm(img, ascii=True).decode())

# Round trips hold for arbitrary images.
rng = np.random.RandomState(0)
from dwmd import GrayImage

random_img = GrayImage(rng.randint(0, 256, size=(16, 16)).astype(np.uint8))
assert read_pgm(write_pgm(random_img, ascii=True)) == random_img
print("16x16 random round trip: ok")
