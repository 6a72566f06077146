"""Generators for every polygon family the package certifies.

Each generator returns a canonical :class:`RationalPolygon` and makes
no claim beyond its construction: the advertised (interior, boundary)
profile of every instance is established downstream by certification,
never assumed.

Families
--------
reflexive-catalog   the 16 integral polygons whose only interior
                    lattice point is the origin and whose dual is
                    integral, one representative per lattice-
                    equivalence class
example-b1 / -b2    rational triangles with i interior points and just
                    1 or 2 boundary points (unattainable integrally)
t-xyz               one-interior-point triangles built from a solution
                    of b = (x+y+z)^2/(xyz) with x | y and x | z
fibonacci           the t-xyz instances at (1, F_{2j-1}^2, F_{2j+1}^2),
                    written directly in terms of Fibonacci numbers
scott-grid          integral polygons realizing every (i, b) allowed
                    for integral polygons (b <= 2i+6, plus b <= 9 when
                    i = 1); this package's own explicit family
p3 / p4 / p10       denominator-3/4/10 polygons realizing (i, b) up to
                    b <= 3i+5, 4i+4, 5i+4 respectively
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Vec2, rat_ceil, rat_floor
from .polygon import RationalPolygon, hull
from .vieta import VietaSolution


class NotConstructibleError(ValueError):
    """Raised when a solution lacks the divisibility a construction needs."""


def fibonacci(k: int) -> int:
    """k-th Fibonacci number with F_1 = F_2 = 1."""
    if k < 1:
        raise ValueError("index must be >= 1")
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


# --- reflexive catalog -----------------------------------------------------

# Vertex lists transcribed from the standard picture of the 16 classes;
# normalization below re-centers each polygon on its unique interior
# lattice point, so the raw anchors need not be that point.
_REFLEXIVE_RAW: tuple[tuple[tuple[int, int], ...], ...] = (
    ((-1, -1), (2, -1), (-1, 2)),
    ((-1, -1), (2, -1), (0, 1), (-1, 0)),
    ((-1, -1), (2, -1), (1, 1)),
    ((-1, -1), (1, -1), (1, 0), (0, 1)),
    ((-1, 0), (0, -1), (1, 0), (0, 1)),
    ((-1, 0), (0, -1), (1, -1), (1, 0), (0, 1), (-1, 1)),
    ((-1, 0), (0, -1), (1, -1), (1, 0), (0, 1)),
    ((-1, -1), (0, -1), (1, 0), (1, 1), (-1, 1)),
    ((-1, -1), (1, -1), (1, 1), (0, 1)),
    ((-1, -1), (1, -1), (1, 0), (0, 1), (-1, 0)),
    ((-1, -1), (1, -1), (1, 1), (-1, 1)),
    ((-1, -1), (1, 0), (0, 1)),
    ((-1, 1), (1, 1), (0, -1)),
    ((-1, 0), (0, -1), (1, -1), (0, 1)),
    ((-1, -1), (2, -1), (0, 1), (-1, 1)),
    ((-2, 1), (2, 1), (0, -1)),
)


def _interior_lattice_points(P: RationalPolygon) -> list[Vec2]:
    xmin, xmax, ymin, ymax = P.bounding_box()
    pts = []
    for x in range(rat_ceil(xmin), rat_floor(xmax) + 1):
        for y in range(rat_ceil(ymin), rat_floor(ymax) + 1):
            p = Vec2(x, y)
            if P.strictly_contains(p):
                pts.append(p)
    return pts


def reflexive_catalog() -> list[RationalPolygon]:
    """The 16 integral polygons with a unique interior lattice point at 0."""
    out = []
    for raw in _REFLEXIVE_RAW:
        P = hull([Vec2(x, y) for x, y in raw])
        inner = _interior_lattice_points(P)
        if len(inner) != 1:
            raise AssertionError(f"catalog entry {raw} has {len(inner)} interior points")
        out.append(P.translate(-inner[0]))
    return out


# --- triangles with 1 or 2 boundary points ---------------------------------


def example_pip_b1(i: int) -> RationalPolygon:
    """Triangle with i interior lattice points and a single boundary point."""
    if i < 1:
        raise ValueError("i must be >= 1")
    d = 2 * i + 1
    return hull(
        [
            Vec2(i, 0),
            Vec2(Fraction(-2 * i, d), Fraction(2 * i - 1, d)),
            Vec2(Fraction(-1, d), Fraction(-(2 * i - 1), d)),
        ]
    )


def example_pip_b2(i: int) -> RationalPolygon:
    """Triangle with i interior lattice points and two boundary points."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return hull(
        [
            Vec2(i, 0),
            Vec2(-1, Fraction(i, i + 1)),
            Vec2(-1, Fraction(-i, i + 1)),
        ]
    )


# --- solution triangles -----------------------------------------------------


def t_xyz(s: VietaSolution) -> RationalPolygon:
    """Triangle cut out by <u_k, a> <= 1 for the normals of a solution.

    The normals are (y, (y+z)/x), (-x, -1), (0, -1), which needs
    x | y and x | z; the recursively generated families satisfy this
    but not every solution does, e.g. (4, 5, 81) at b = 5.
    Vertices come out as (-(x+y+z)/(xz), (x+y)/z), (0, -1),
    ((x+y+z)/(xy), -1).
    """
    x, y, z = s.triple()
    if y % x or z % x:
        raise NotConstructibleError(
            f"({x},{y},{z}) violates the divisibility x | y, x | z"
        )
    total = x + y + z
    return hull(
        [
            Vec2(Fraction(-total, x * z), Fraction(x + y, z)),
            Vec2(0, -1),
            Vec2(Fraction(total, x * y), -1),
        ]
    )


def fibonacci_triangle(j: int) -> RationalPolygon:
    """One-interior-point triangle with 9 boundary points and growing denominator.

    Equals t_xyz at the solution (1, F_{2j-1}^2, F_{2j+1}^2); the
    vertices below are the same triangle written with Fibonacci ratios.
    """
    if j < 1:
        raise ValueError("index must be >= 1")
    fm, fp = fibonacci(2 * j - 1), fibonacci(2 * j + 1)
    r = Fraction(3 * fm, fp)
    return hull(
        [
            Vec2(-r, r - 1),
            Vec2(0, -1),
            Vec2(Fraction(3 * fp, fm), -1),
        ]
    )


# --- integral polygons for the full (i, b) range ----------------------------


def scott_admissible(i: int, b: int) -> bool:
    """Whether some integral polygon has i interior and b boundary points."""
    if i < 1 or b < 3:
        return False
    return b <= 9 if i == 1 else b <= 2 * i + 6


def scott_grid_polygon(i: int, b: int) -> RationalPolygon:
    """An integral polygon with profile (i, b), for any admissible pair.

    The family: a long primitive edge from (0,0) to (a, 1) closed off
    through (1, -1), optionally with a horizontal top edge of lattice
    length c = conv{(0,0), (1,-1), (a+c,1), (a,1)}, covers
    3 <= b <= 2i+4; the rectangle [0, i+1] x [0, 2] gives b = 2i+6, a
    clipped-corner pentagon gives b = 2i+5, and (1, 9) is the triangle
    conv{(-1,-1), (2,-1), (-1,2)}.  Every case is certified in tests.
    """
    if not scott_admissible(i, b):
        raise ValueError(
            f"no integral polygon has profile ({i}, {b}): "
            "require i >= 1 and 3 <= b <= (9 if i == 1 else 2*i + 6)"
        )
    if i == 1 and b == 9:
        return hull([Vec2(-1, -1), Vec2(2, -1), Vec2(-1, 2)])
    if b == 2 * i + 6:
        return hull([Vec2(0, 0), Vec2(i + 1, 0), Vec2(i + 1, 2), Vec2(0, 2)])
    if b == 2 * i + 5:
        return hull([Vec2(0, 0), Vec2(i + 1, 0), Vec2(i + 1, 1), Vec2(i, 2), Vec2(0, 2)])
    if b <= 2 * i + 2:
        a, c = 2 * i - b + 3, b - 3
    else:  # b in {2i+3, 2i+4}
        a, c = 2 * i - b + 5, b - 4
    return hull([Vec2(0, 0), Vec2(1, -1), Vec2(a + c, 1), Vec2(a, 1)])


# --- fixed-denominator constructions ----------------------------------------

_PIP_RANGES = {3: (3, 5), 4: (4, 4), 10: (5, 4)}  # d -> (slope, intercept) of max b


def construct_pip(d: int, i: int, b: int) -> RationalPolygon:
    """Denominator-d polygon with profile (i, b), for d in {3, 4, 10}.

    The allowed range is 2 <= b <= slope*i + intercept with slope,
    intercept = (3, 5), (4, 4), (5, 4) for d = 3, 4, 10.  The full
    point list is handed to hull; in the i = 1 and extremal-b cases
    some listed points fall on edges and are absorbed.
    """
    if d not in _PIP_RANGES:
        raise ValueError("denominator must be 3, 4, or 10")
    if i < 1:
        raise ValueError("i >= 1 violated")
    slope, intercept = _PIP_RANGES[d]
    if not 2 <= b <= slope * i + intercept:
        raise ValueError(f"2 <= b <= {slope}*i + {intercept} violated for (i={i}, b={b})")
    if d == 3:
        pts = [
            Vec2(i, 0),
            Vec2(0, Fraction(1, 3)),
            Vec2(-2, -1),
            Vec2(b - 4, -1),
            Vec2(i + Fraction(2 * (b - 5), 3), Fraction(-2, 3)),
        ]
    elif d == 4:
        pts = [
            Vec2(i, 0),
            Vec2(0, Fraction(1, 4)),
            Vec2(-1, Fraction(-1, 2)),
            Vec2(-1, -1),
            Vec2(b - 3, -1),
            Vec2(i + Fraction(3 * (b - 4), 4), Fraction(-3, 4)),
        ]
    else:
        pts = [
            Vec2(i, 0),
            Vec2(0, Fraction(1, 5)),
            Vec2(Fraction(-3, 2), -1),
            Vec2(b - 3, -1),
            Vec2(i + Fraction(4 * (b - 4), 5), Fraction(-4, 5)),
        ]
    return hull(pts)


# --- boundary-behaviour counterexamples --------------------------------------


def fourgon_distance_two() -> RationalPolygon:
    """Quadrilateral {|2x| + |3y| <= 2}: origin is its only interior
    lattice point, yet every edge sits at lattice distance 2 from it.
    Not pseudointegral."""
    third = Fraction(2, 3)
    return hull([Vec2(1, 0), Vec2(0, third), Vec2(-1, 0), Vec2(0, -third)])


def octagon_empty_boundary() -> RationalPolygon:
    """Octagon {|x| + 2|y| <= 1, 2|x| + |y| <= 1}: integral dual, all
    edges at lattice distance 1, but no lattice point on the boundary,
    so it cannot be pseudointegral."""
    h, t = Fraction(1, 2), Fraction(1, 3)
    return hull(
        [
            Vec2(h, 0), Vec2(t, t), Vec2(0, h), Vec2(-t, t),
            Vec2(-h, 0), Vec2(-t, -t), Vec2(0, -h), Vec2(t, -t),
        ]
    )


# --- CLI dispatch -------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionSpec:
    """Family tag plus integer parameters, as accepted by the CLI."""

    family: str
    params: tuple[int, ...]


_PARAM_COUNTS = {
    "reflexive": 1,
    "example-b1": 1,
    "example-b2": 1,
    "t-xyz": 3,
    "fibonacci": 1,
    "scott-grid": 2,
    "p3": 2,
    "p4": 2,
    "p10": 2,
}


def build(spec: ConstructionSpec) -> RationalPolygon:
    """Construct the polygon a :class:`ConstructionSpec` names."""
    family, params = spec.family, spec.params
    if family not in _PARAM_COUNTS:
        raise ValueError(f"unknown family {family!r}; known: {sorted(_PARAM_COUNTS)}")
    if len(params) != _PARAM_COUNTS[family]:
        raise ValueError(
            f"family {family!r} takes {_PARAM_COUNTS[family]} parameter(s), got {len(params)}"
        )
    if family == "reflexive":
        idx = params[0]
        catalog = reflexive_catalog()
        if not 0 <= idx < len(catalog):
            raise ValueError(f"catalog index must be in 0..{len(catalog) - 1}")
        return catalog[idx]
    if family == "example-b1":
        return example_pip_b1(params[0])
    if family == "example-b2":
        return example_pip_b2(params[0])
    if family == "t-xyz":
        return t_xyz(VietaSolution.from_triple(*params))
    if family == "fibonacci":
        return fibonacci_triangle(params[0])
    if family == "scott-grid":
        return scott_grid_polygon(*params)
    return construct_pip(int(family[1:]), *params)
