import math
import statistics
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from dwmd import (
    DetectionParams,
    DirectionalSample,
    FilterParams,
    GrayImage,
    NoiseSpec,
    best_direction,
    detect,
    directional_sample,
    directional_sd,
    dwmd_denoise,
    get_reflected,
    inject_rvin,
    median3x3,
    minimize_center,
    restore_pixel,
    snap_to_set,
)
from dwmd.directions import direction_set
from synth import random_image

GRAY = st.integers(0, 255)


def image_with_neighbors(k, values, center=100, bg=100, size=9):
    """Place the four direction-k neighbor values around the center pixel."""
    a = np.full((size, size), bg, dtype=np.uint8)
    m = size // 2
    a[m, m] = center
    for (s, t), v in zip(direction_set(k).members, values):
        a[m + s, m + t] = v
    return GrayImage(a), m


# --- directional standard deviation and direction choice ---

def test_sd_constant_neighbors_zero():
    img, m = image_with_neighbors(1, [10, 10, 10, 10])
    assert directional_sd(img, m, m, 1) == 0.0


def test_sd_two_level_neighbors():
    img, m = image_with_neighbors(2, [0, 0, 255, 255])
    assert directional_sd(img, m, m, 2) == 127.5


def test_sd_small_spread():
    img, m = image_with_neighbors(3, [8, 10, 10, 12])
    assert abs(directional_sd(img, m, m, 3) - math.sqrt(2)) < 1e-12


def test_sd_matches_literal_definition(rng):
    img = random_image(rng, 9, 9)
    for k in (1, 2, 3, 4):
        for i, j in [(0, 0), (4, 4), (8, 3)]:
            values = [get_reflected(img, i + s, j + t) for s, t in direction_set(k).members]
            assert directional_sd(img, i, j, k) == pytest.approx(statistics.pstdev(values), abs=1e-9)


def test_sd_rejects_bad_direction():
    img, m = image_with_neighbors(1, [1, 2, 3, 4])
    with pytest.raises(ValueError, match="1..4"):
        directional_sd(img, m, m, 0)


def test_best_direction_constant_ties_to_one():
    img = GrayImage(np.full((9, 9), 50, dtype=np.uint8))
    assert best_direction(img, 4, 4) == 1


def test_best_direction_vertical_step():
    a = np.zeros((10, 10), dtype=np.uint8)
    a[:, 5:] = 255
    assert best_direction(GrayImage(a), 4, 5) == 4


def test_best_direction_constant_row():
    # vertical gradient except one constant row: only the horizontal set is flat
    a = (np.arange(9)[:, None] * np.ones(9, dtype=int) * 10).astype(np.uint8)
    a[4, :] = 100
    assert best_direction(GrayImage(a), 4, 4) == 2


# --- candidate walk ---

def test_minimize_walks_down_to_neighbors():
    sample = DirectionalSample(neighbors=(10, 10, 10, 10), center=200)
    # mean 48, spread 0.4*|x-10|: 48 -> 43 -> ... -> 8, then 3 would increase
    assert minimize_center(sample, step=5) == 8.0


def test_minimize_stays_at_mean():
    sample = DirectionalSample(neighbors=(10, 10, 10, 10), center=12)
    assert minimize_center(sample, step=5) == 10.4


def test_minimize_constant_fixed_point():
    sample = DirectionalSample(neighbors=(77, 77, 77, 77), center=77)
    assert minimize_center(sample, step=5) == 77.0


def test_minimize_step_one_long_walk():
    # 51 accepted moves from the start at 51.0 down to the vertex at 0
    sample = DirectionalSample(neighbors=(0, 0, 0, 0), center=255)
    assert minimize_center(sample, step=1) == 0.0


def test_minimize_validates_step():
    with pytest.raises(ValueError, match="at least 1"):
        minimize_center(DirectionalSample(neighbors=(1, 2, 3, 4), center=5), step=0)


def exact_walk(neighbors, center, step):
    """Independent oracle: the literal walk on the population SD of the
    five-value set, in exact rational arithmetic. Returns (x, ambiguous);
    ambiguous marks an exact tie at some comparison, where a float
    implementation may legitimately stop one step away."""
    a, b, d, e = neighbors

    def variance(x):
        data = [Fraction(a), Fraction(b), x, Fraction(d), Fraction(e)]
        mean = sum(data) / 5
        return sum((v - mean) ** 2 for v in data) / 5

    def clamp(v):
        return min(max(v, Fraction(0)), Fraction(255))

    m = Fraction(a + b + center + d + e, 5)
    fx = variance(m)
    f_up = variance(clamp(m + step))
    f_down = variance(clamp(m - step))
    ambiguous = fx in (f_up, f_down)
    if fx <= f_up and fx <= f_down:
        return m, ambiguous
    move = Fraction(step) if f_up < fx else Fraction(-step)
    x = m
    while True:
        cand = clamp(x + move)
        fc = variance(cand)
        if fc == fx:
            ambiguous = True
        if fc < fx and cand != x:
            x, fx = cand, fc
        else:
            return x, ambiguous


@given(st.tuples(GRAY, GRAY, GRAY, GRAY), GRAY, st.integers(1, 16))
@settings(max_examples=300, deadline=None)
def test_minimize_matches_exact_rational_walk(neighbors, center, step):
    expected, ambiguous = exact_walk(neighbors, center, step)
    assume(not ambiguous)
    got = minimize_center(DirectionalSample(neighbors=neighbors, center=center), step)
    assert abs(got - float(expected)) < 1e-9


@given(st.tuples(GRAY, GRAY, GRAY, GRAY), GRAY, st.integers(1, 16))
@settings(max_examples=300, deadline=None)
def test_minimize_result_properties(neighbors, center, step):
    sample = DirectionalSample(neighbors=neighbors, center=center)
    x = minimize_center(sample, step)
    assert 0.0 <= x <= 255.0
    # the spread of the five-value set is a parabola in the candidate with
    # vertex at the neighbor mean, so any downhill walk ends within half a
    # step of it and never above its starting spread
    vertex = sum(neighbors) / 4.0
    assert abs(x - vertex) <= step / 2.0 + 1e-9
    a, b, d, e = neighbors
    m = (a + b + center + d + e) / 5.0
    f_x = statistics.pstdev([a, b, x, d, e])
    f_m = statistics.pstdev([a, b, m, d, e])
    assert f_x <= f_m + 1e-9


# --- snap ---

def test_snap_unique_nearest():
    sample = DirectionalSample(neighbors=(10, 10, 10, 10), center=200)
    assert snap_to_set(8.0, sample) == 10


def test_snap_exact_membership():
    sample = DirectionalSample(neighbors=(10, 20, 30, 40), center=0)
    assert snap_to_set(10.0, sample) == 10


def test_snap_tie_breaks_to_smaller():
    sample = DirectionalSample(neighbors=(20, 30, 90, 200), center=0)
    assert snap_to_set(25.0, sample) == 20


@given(st.tuples(GRAY, GRAY, GRAY, GRAY), st.floats(-5, 260, allow_nan=False))
@settings(max_examples=200, deadline=None)
def test_snap_returns_nearest_member(neighbors, x):
    sample = DirectionalSample(neighbors=neighbors, center=0)
    got = snap_to_set(x, sample)
    assert got in neighbors
    best = min(abs(x - v) for v in neighbors)
    assert abs(x - got) == best
    assert got == min(v for v in neighbors if abs(x - v) == best)


# --- restoration ---

def test_restore_impulse_on_constant():
    a = np.full((9, 9), 10, dtype=np.uint8)
    a[4, 4] = 200
    assert restore_pixel(GrayImage(a), 4, 4) == 10


def test_restore_preserves_thin_diagonal_line():
    a = np.full((11, 11), 80, dtype=np.uint8)
    idx = np.arange(11)
    a[idx, idx] = 255
    a[5, 5] = 0  # impulse on the line
    assert restore_pixel(GrayImage(a), 5, 5) == 255


def test_restore_constant_fixed_point():
    img = GrayImage(np.full((9, 9), 123, dtype=np.uint8))
    assert restore_pixel(img, 4, 4) == 123


def test_denoise_noise_free_constant():
    img = GrayImage(np.full((8, 8), 99, dtype=np.uint8))
    out, detmap = dwmd_denoise(img)
    assert out == img
    assert detmap.flagged_count == 0


def test_denoise_single_impulse():
    a = np.full((9, 9), 10, dtype=np.uint8)
    a[4, 4] = 200
    out, detmap = dwmd_denoise(GrayImage(a))
    assert detmap.flagged_count == 1
    assert out.pixel(4, 4) == 10
    expect = a.copy()
    expect[4, 4] = 10
    assert np.array_equal(out.pixels, expect)


@pytest.mark.parametrize("amplitude", [43, 60, 128, 255])
def test_denoise_restores_detectable_impulses_exactly(amplitude):
    clean = np.zeros((9, 9), dtype=np.uint8)
    noisy = clean.copy()
    noisy[4, 4] = amplitude
    out, _ = dwmd_denoise(GrayImage(noisy))
    assert np.array_equal(out.pixels, clean)


def test_denoise_leaves_small_impulses():
    a = np.zeros((9, 9), dtype=np.uint8)
    a[4, 4] = 42  # statistic 252 <= 256
    out, detmap = dwmd_denoise(GrayImage(a))
    assert detmap.flagged_count == 0
    assert out.pixel(4, 4) == 42


def test_denoise_touches_only_flagged_pixels(rng):
    for _ in range(10):
        img = random_image(rng, 20, 15)
        noisy, _ = inject_rvin(img, NoiseSpec(level=0.3, seed=int(rng.randint(1 << 30))))
        out, detmap = dwmd_denoise(noisy)
        unflagged = ~detmap.noisy
        assert np.array_equal(out.pixels[unflagged], noisy.pixels[unflagged])


def test_denoise_matches_per_pixel_restoration(rng):
    # the vectorized whole-image path must agree exactly with the scalar ops
    params = FilterParams(detection=DetectionParams(threshold=200), step=5)
    for _ in range(5):
        img = random_image(rng, 14, 12)
        out, detmap = dwmd_denoise(img, params)
        for i, j in zip(*np.nonzero(detmap.noisy)):
            assert out.pixel(i, j) == restore_pixel(img, i, j, params)


def test_denoise_restored_values_come_from_best_direction(rng):
    img = random_image(rng, 16, 16)
    out, detmap = dwmd_denoise(img)
    for i, j in zip(*np.nonzero(detmap.noisy)):
        sample = directional_sample(img, i, j, best_direction(img, i, j))
        assert out.pixel(i, j) in sample.neighbors


def test_denoise_requires_5x5():
    with pytest.raises(ValueError, match="5x5"):
        dwmd_denoise(GrayImage(np.zeros((4, 4), dtype=np.uint8)))


def test_filter_params_validation():
    with pytest.raises(ValueError, match="at least 1"):
        FilterParams(step=0)


def test_directional_sample_full_set_order():
    sample = DirectionalSample(neighbors=(1, 2, 3, 4), center=9)
    assert sample.full_set == (1, 2, 9, 3, 4)


# --- median baseline ---

def test_median_constant_identity():
    img = GrayImage(np.full((6, 6), 42, dtype=np.uint8))
    assert median3x3(img) == img


def test_median_center_of_0_to_8():
    img = GrayImage(np.arange(9, dtype=np.uint8).reshape(3, 3))
    assert median3x3(img).pixel(1, 1) == 4


def test_median_removes_single_impulse():
    a = np.zeros((7, 7), dtype=np.uint8)
    a[3, 3] = 255
    assert median3x3(GrayImage(a)).pixel(3, 3) == 0


def test_median_matches_literal_oracle(rng):
    img = random_image(rng, 9, 7)
    got = median3x3(img)
    for i in range(img.height):
        for j in range(img.width):
            window = [get_reflected(img, i + s, j + t) for s in (-1, 0, 1) for t in (-1, 0, 1)]
            assert got.pixel(i, j) == statistics.median(window)


def test_median_requires_3x3():
    with pytest.raises(ValueError, match="3x3"):
        median3x3(GrayImage(np.zeros((2, 5), dtype=np.uint8)))
