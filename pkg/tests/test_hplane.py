import math
import random

import pytest
from hypothesis import given, strategies as st

from groupgeom.hplane import (
    THINNESS_BOUND,
    HPoint,
    euclid_fat_witness,
    h_dist,
    h_geodesic_point,
    h_triangle_thinness,
    point_at,
    point_to_side,
    random_triangles,
    verify_thinness_bound,
)

# quantized so that "distinct" points differ by more than acosh granularity
coords = st.floats(-20.0, 20.0).map(lambda v: round(v, 4))
heights = st.floats(0.05, 50.0).map(lambda v: round(v, 4))
points = st.builds(HPoint, coords, heights)


def test_point_validation():
    with pytest.raises(ValueError):
        HPoint(0.0, 0.0)
    with pytest.raises(ValueError):
        HPoint(1.0, -2.0)


def test_dist_examples():
    assert abs(h_dist(HPoint(0, 1), HPoint(0, math.e)) - 1.0) < 1e-12
    assert abs(h_dist(HPoint(0, 1), HPoint(1, 1)) - math.acosh(1.5)) < 1e-12
    p = HPoint(0.3, 2.0)
    assert h_dist(p, p) == 0.0


@given(points, points)
def test_dist_symmetric_positive(p, q):
    d = h_dist(p, q)
    assert d == h_dist(q, p)
    assert d >= 0.0
    if p != q:
        assert d > 0.0


@given(points, points, points)
def test_dist_triangle_inequality(p, q, r):
    assert h_dist(p, r) <= h_dist(p, q) + h_dist(q, r) + 1e-9


@given(points, points, st.floats(-30.0, 30.0), st.floats(0.05, 20.0))
def test_dist_invariant_under_translation_and_scaling(p, q, shift, scale):
    d = h_dist(p, q)
    p2 = HPoint(p.x + shift, p.y)
    q2 = HPoint(q.x + shift, q.y)
    assert abs(h_dist(p2, q2) - d) < 1e-9
    p3 = HPoint(p.x * scale, p.y * scale)
    q3 = HPoint(q.x * scale, q.y * scale)
    assert abs(h_dist(p3, q3) - d) < 1e-9


def test_geodesic_point_examples():
    mid = h_geodesic_point(HPoint(0, 1), HPoint(0, math.e**2), 0.5)
    assert abs(mid.x) < 1e-12 and abs(mid.y - math.e) < 1e-9
    apex = h_geodesic_point(HPoint(-1, 1), HPoint(1, 1), 0.5)
    assert abs(apex.x) < 1e-9 and abs(apex.y - math.sqrt(2)) < 1e-9
    p, q = HPoint(0.4, 0.8), HPoint(-2.0, 3.0)
    assert h_dist(h_geodesic_point(p, q, 0.0), p) < 1e-9
    assert h_dist(h_geodesic_point(p, q, 1.0), q) < 1e-9
    with pytest.raises(ValueError):
        h_geodesic_point(p, p, 0.5)


@given(points, points, st.floats(0.0, 1.0))
def test_geodesic_additivity(p, q, t):
    if p == q:
        return
    g = h_geodesic_point(p, q, t)
    total = h_dist(p, q)
    assert abs(h_dist(p, g) - t * total) < 1e-9
    assert abs(h_dist(p, g) + h_dist(g, q) - total) < 1e-9


@given(points, points, points, st.floats(0.0, 1.0))
def test_point_to_side_is_a_lower_envelope(p, a, b, t):
    # exact segment distance is never above the distance to any sampled point
    if a == b:
        return
    d = point_to_side(p, a, b)
    sample = h_geodesic_point(a, b, t)
    assert d <= h_dist(p, sample) + 1e-7
    assert d <= min(h_dist(p, a), h_dist(p, b)) + 1e-7


def test_point_to_side_foot_cases():
    # apex of the unit semicircle seen from straight above
    d = point_to_side(HPoint(0, 3), HPoint(-1, 1e-6 + 1), HPoint(1, 1 + 1e-6))
    assert d > 0
    # vertical side: closest point is the clamped foot
    d2 = point_to_side(HPoint(1, 1), HPoint(0, 0.5), HPoint(0, 2.0))
    assert abs(d2 - math.asinh(1.0)) < 1e-9  # foot at sqrt(2) is inside [0.5, 2]
    d3 = point_to_side(HPoint(1, 1), HPoint(0, 0.1), HPoint(0, 0.2))
    assert abs(d3 - h_dist(HPoint(1, 1), HPoint(0, 0.2))) < 1e-12


def test_tiny_triangle_nearly_euclidean():
    report = h_triangle_thinness(
        HPoint(0, 1), HPoint(1e-3, 1), HPoint(0, 1.0005), samples_per_side=32
    )
    assert report.thinness < 1e-3


def test_collinear_triangle_is_zero_thin():
    report = h_triangle_thinness(HPoint(0, 1), HPoint(0, 2), HPoint(0, 4), 32)
    assert report.thinness < 1e-12


def test_degenerate_repeated_vertex():
    report = h_triangle_thinness(HPoint(0, 1), HPoint(0, 1), HPoint(1, 1), 16)
    assert report.thinness < 1e-6


def test_big_equilateral_approaches_the_bound():
    side = 20.0
    rho = math.asinh(math.sqrt((math.cosh(side) - 1.0) / 1.5))
    base = HPoint(0.0, 1.0)
    a, b, c = (point_at(base, 2 * math.pi * k / 3 + 0.4, rho) for k in range(3))
    for u, v in ((a, b), (b, c), (a, c)):
        assert abs(h_dist(u, v) - side) < 1e-6
    report = h_triangle_thinness(a, b, c, samples_per_side=64)
    assert 0.83 <= report.thinness < THINNESS_BOUND + 1e-6


def test_euclid_fat_witness():
    assert abs(euclid_fat_witness(1.0) - 2 * math.sqrt(3)) < 1e-12
    assert abs(euclid_fat_witness(0.5) - math.sqrt(3)) < 1e-12
    assert abs(euclid_fat_witness(2.0) - 2 * euclid_fat_witness(1.0)) < 1e-12
    with pytest.raises(ValueError):
        euclid_fat_witness(0.0)


def test_point_at_distances():
    base = HPoint(0.0, 1.0)
    rng = random.Random(9)
    for _ in range(50):
        d = rng.uniform(0.0, 12.0)
        theta = rng.uniform(0.0, 2 * math.pi)
        q = point_at(base, theta, d)
        assert abs(h_dist(base, q) - d) < 1e-8


def test_random_triangles_respect_diameter():
    for tri in random_triangles(100, seed=3, diameter=10.0):
        a, b, c = tri
        assert h_dist(a, b) <= 10.0 + 1e-9
        assert h_dist(a, c) <= 10.0 + 1e-9
        assert h_dist(b, c) <= 10.0 + 1e-9


def test_survey_is_deterministic_and_bounded():
    s1 = verify_thinness_bound(60, seed=21, diameter=12.0)
    s2 = verify_thinness_bound(60, seed=21, diameter=12.0)
    assert s1.max_thinness == s2.max_thinness
    assert s1.passed
    assert 0.0 < s1.max_thinness < THINNESS_BOUND + 1e-6


def test_survey_ladder_monotone():
    values = [
        verify_thinness_bound(60, seed=13, diameter=float(d)).max_thinness
        for d in (1, 2, 4, 8, 16)
    ]
    assert values == sorted(values)
