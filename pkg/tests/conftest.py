"""Shared fixtures: brute-force counting oracles and random generators.

The brute counters decide membership point by point with half-plane
tests over the bounding box, deliberately sharing no code with the
column-scan counters they check.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pipgeom.exact import IntMat2, Vec2, rat_ceil, rat_floor
from pipgeom.polygon import DegenerateHullError, RationalPolygon, hull


def brute_counts(P: RationalPolygon, t: int = 1) -> tuple[int, int, int]:
    """(total, boundary, interior) of t*P by exhaustive membership tests."""
    edges = P.edges()
    xmin, xmax, ymin, ymax = P.bounding_box()
    total = boundary = 0
    for x in range(rat_ceil(t * xmin), rat_floor(t * xmax) + 1):
        for y in range(rat_ceil(t * ymin), rat_floor(t * ymax) + 1):
            p = Vec2(x, y)
            vals = [(e.normal.dot(p), t * e.offset) for e in edges]
            if all(v <= c for v, c in vals):
                total += 1
                if any(v == c for v, c in vals):
                    boundary += 1
    return total, boundary, total - boundary


def brute_segment_points(a: Vec2, b: Vec2) -> int:
    """Lattice points on [a, b] by scanning the bounding box."""
    count = 0
    for x in range(rat_ceil(min(a.x, b.x)), rat_floor(max(a.x, b.x)) + 1):
        for y in range(rat_ceil(min(a.y, b.y)), rat_floor(max(a.y, b.y)) + 1):
            p = Vec2(x, y)
            cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
            within = min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)
            if cross == 0 and within:
                count += 1
    return count


def random_polygon(rng: random.Random, span: int = 6, max_den: int = 3) -> RationalPolygon:
    while True:
        pts = [
            Vec2(
                Fraction(rng.randint(-span, span), rng.randint(1, max_den)),
                Fraction(rng.randint(-span, span), rng.randint(1, max_den)),
            )
            for _ in range(rng.randint(3, 7))
        ]
        try:
            return hull(pts)
        except DegenerateHullError:
            continue


def random_triangle(rng: random.Random, span: int = 6, max_den: int = 3) -> RationalPolygon:
    while True:
        pts = [
            Vec2(
                Fraction(rng.randint(-span, span), rng.randint(1, max_den)),
                Fraction(rng.randint(-span, span), rng.randint(1, max_den)),
            )
            for _ in range(3)
        ]
        try:
            T = hull(pts)
        except DegenerateHullError:
            continue
        if len(T.vertices) == 3:
            return T


def random_unimodular(rng: random.Random) -> IntMat2:
    m = IntMat2.identity()
    for _ in range(rng.randint(1, 4)):
        k = rng.randint(-3, 3)
        kind = rng.randrange(3)
        if kind == 0:
            m = m @ IntMat2(1, k, 0, 1)
        elif kind == 1:
            m = m @ IntMat2(1, 0, k, 1)
        else:
            m = m @ IntMat2(0, -1, 1, 0)
    if rng.random() < 0.5:
        m = m @ IntMat2(0, 1, 1, 0)
    return m


@pytest.fixture
def rng() -> random.Random:
    return random.Random(987654321)
