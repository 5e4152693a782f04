"""
Restoring one pixel, step by step
=================================

Restoration picks the direction whose four neighbors cluster tightest
(smallest standard deviation), walks a candidate center value from the
five-value mean toward the spread minimum in steps of 5, and finally
snaps the candidate to the nearest of the four neighbor values.
"""

import statistics

import numpy as np

from dwmd import (
    GrayImage,
    best_direction,
    directional_sample,
    directional_sd,
    dwmd_denoise,
    minimize_center,
    restore_pixel,
    snap_to_set,
)

# An impulse of 200 sitting in a flat background of 10.
a = np.full((9, 9), 10, dtype=np.uint8)
a[4, 4] = 200
img = GrayImage(a)

print("directional spreads:", [round(directional_sd(img, 4, 4, k), 3) for k in (1, 2, 3, 4)])
k = best_direction(img, 4, 4)
print("chosen direction:", k)

sample = directional_sample(img, 4, 4, k)
print("neighbors:", sample.neighbors, " center:", sample.center)
print("five-value set:", sample.full_set, " mean:", sum(sample.full_set) / 5)

# Watch the spread fall as the candidate walks from the mean (48) toward
# the neighbors: 48, 43, ..., 8. The next step to 3 would increase it.
for x in range(48, 2, -5):
    spread = statistics.pstdev([10, 10, x, 10, 10])
    print(f"  candidate {x:3d}: spread {spread:5.2f}")

x = minimize_center(sample, step=5)
print("walk result:", x)
print("snapped to neighbor value:", snap_to_set(x, sample))
print("restore_pixel:", restore_pixel(img, 4, 4))

# Snapping to actual neighbor values is what preserves thin structures:
# an impulse ON a one-pixel-wide line comes back as the line value, not
# as a blend with the background. The impulse also spoils the aligned
# index of its two line-mates, so they get flagged and snapped to the
# background; on a noise-free line nothing is flagged at all.
line = np.full((11, 11), 80, dtype=np.uint8)
idx = np.arange(11)
line[idx, idx] = 255
line[5, 5] = 0  # impulse punched into the line
restored, detmap = dwmd_denoise(GrayImage(line))
print("\nimpulse on a diagonal line:")
for i, j in zip(*np.nonzero(detmap.noisy)):
    print(f"  flagged ({i},{j}): {GrayImage(line).pixel(i, j):3d} -> {restored.pixel(i, j):3d}")
