"""Named verification suites behind the `verify` CLI command.

Each suite re-derives a batch of certified facts from scratch and
reports one pass/fail check per fact.  All randomized suites run on a
fixed seed so reports are byte-deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import constructions, counting, ehrhart, polygon, vieta
from .exact import AffineMap, IntMat2, Vec2
from .polygon import (
    RationalPolygon,
    edge_lattice_length_from_normals,
    edge_vector_from_normals,
    hull,
    triangle_edge_lattice_length,
    triangle_invariant,
)
from .vieta import VietaSolution

DEFAULT_WIDTH_CAP = 10**6


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append((label, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self) -> list[str]:
        out = []
        for label, ok, detail in self.checks:
            status = "ok" if ok else "FAIL"
            out.append(f"{status:4s} {label}" + (f"  [{detail}]" if detail else ""))
        return out

    def to_json_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": [
                {"label": label, "ok": ok, **({"detail": detail} if detail else {})}
                for label, ok, detail in self.checks
            ],
        }


REDUCED_TABLE = frozenset(
    {
        (1, 5, 20, 25), (1, 6, 12, 18), (1, 8, 8, 16), (1, 9, 9, 9),
        (2, 3, 6, 9), (2, 4, 4, 8),
        (3, 2, 4, 6), (3, 3, 3, 3),
        (4, 2, 2, 4), (5, 1, 4, 5), (6, 1, 2, 3), (8, 1, 1, 2), (9, 1, 1, 1),
    }
)


def _brute_reduced() -> set[tuple[int, int, int, int]]:
    """Reduced solutions by raw scan: x <= 16, y bounded, z in [y, x+y].

    The positive root of the per-cell quadratic is at most
    |B|/(b*x - 4) + (x + w)/sqrt(b*x - 4) <= 256 + 32, so y <= 600 is a
    safe cover.
    """
    out = set()
    for x in range(1, 17):
        for y in range(x, 601):
            for z in range(y, x + y + 1):
                s = x + y + z
                if (s * s) % (x * y * z) == 0:
                    out.add(((s * s) // (x * y * z), x, y, z))
    return out


def suite_reduced_table() -> SuiteResult:
    res = SuiteResult("reduced-table")
    got = {(s.b, s.x, s.y, s.z) for b in range(1, 10) for s in vieta.enumerate_reduced(b)}
    res.add("13 reduced solutions", len(got) == 13, f"found {len(got)}")
    res.add("solution set matches the known table", got == REDUCED_TABLE)
    res.add("independent brute force agrees", _brute_reduced() == got)
    res.add("b = 7 has no solutions", not vieta.enumerate_reduced(7))
    return res


def suite_b_sweep(bound: int = 300) -> SuiteResult:
    res = SuiteResult("b-sweep")
    witnesses = vieta.solution_b_sweep(bound)
    allowed = {1, 2, 3, 4, 5, 6, 8, 9}
    res.add(
        f"all b-values over entries <= {bound} lie in {{1..6, 8, 9}}",
        set(witnesses) <= allowed,
        f"values: {sorted(witnesses)}",
    )
    missing = allowed - set(witnesses)
    res.add("every allowed b-value is witnessed", not missing, f"missing: {sorted(missing)}")
    return res


def suite_nvar(cases: tuple[tuple[int, int, int], ...] = ((2, 50, 4), (3, 200, 9), (4, 40, 16))) -> SuiteResult:
    res = SuiteResult("nvar-bound")
    for n, bound, expected_max in cases:
        report = vieta.verify_general_bound(n, bound)
        res.add(
            f"n={n}, entries <= {bound}: max b = {expected_max} <= n^2",
            report.max_b == expected_max and report.max_b <= n * n,
            f"max_b={report.max_b}, {len(report.solutions)} solutions",
        )
        res.add(f"n={n}: every solution reduces", report.all_reduce)
        if n == 2:
            diagonal = all(t.values[0] == t.values[1] and t.b == 4 for t in report.solutions)
            res.add("n=2: solutions are exactly the diagonal pairs", diagonal)
        if n == 3:
            res.add(
                "n=3: b-values within {1..6, 8, 9}",
                report.b_values <= {1, 2, 3, 4, 5, 6, 8, 9},
            )
    return res


def _dilate_width_columns(P: RationalPolygon, t: int) -> int:
    xmin, xmax, _, _ = P.bounding_box()
    return int((xmax - xmin) * t) + 1


def suite_family_grid(depth: int = 4, width_cap: int = DEFAULT_WIDTH_CAP) -> SuiteResult:
    """Certify the solution triangle of every family state up to `depth`.

    Instances whose widest certification dilate exceeds `width_cap`
    columns are skipped and logged; at depth 4 none trigger.
    """
    res = SuiteResult("family-grid")
    for seed in vieta.all_reduced_solutions():
        for state in vieta.family(seed, depth):
            sol = state.solution()
            T = constructions.t_xyz(sol)
            widest = _dilate_width_columns(T, 4 * T.denominator)
            label = f"seed {seed.triple()} b={seed.b} j={state.j}: triangle of {sol.triple()}"
            if widest > width_cap:
                res.add(label + " [skipped]", True, f"width {widest} columns exceeds cap")
                continue
            cert = ehrhart.is_pseudointegral(T)
            res.add(
                label,
                cert.is_pip and cert.interior == 1 and cert.boundary == seed.b,
                f"profile ({cert.interior}, {cert.boundary})",
            )
    return res


def suite_fibonacci(depth: int = 5) -> SuiteResult:
    res = SuiteResult("fibonacci")
    # family recursion against a direct Fibonacci iteration
    fam = vieta.family(VietaSolution(1, 1, 1, 9), depth)
    fa, fb = 1, 1  # F_1, F_2
    squares = []
    for _ in range(depth + 1):
        squares.append(fa * fa)
        fa, fb = fa + fb, fa + 2 * fb  # advance by two: (F_{k+2}, F_{k+3})
    res.add(
        "family z-values are squares of odd-index Fibonacci numbers",
        [st.z for st in fam] == squares[: depth + 1],
        f"z = {[st.z for st in fam]}",
    )
    dens = []
    for j in range(1, depth + 2):
        T = constructions.fibonacci_triangle(j)
        dens.append(T.denominator)
        if j <= depth:
            cert = ehrhart.is_pseudointegral(T)
            res.add(
                f"triangle j={j} certifies (1, 9)",
                cert.is_pip and (cert.interior, cert.boundary) == (1, 9),
                f"denominator {T.denominator}",
            )
            same = T == constructions.t_xyz(fam[j].solution())
            res.add(f"triangle j={j} equals the solution-triangle form", same)
    res.add(
        f"denominators strictly increase over j = 1..{depth + 1}",
        all(a < b for a, b in zip(dens, dens[1:])),
        f"denominators {dens}",
    )
    return res


def suite_denominator_grid(i_max: int = 6) -> SuiteResult:
    res = SuiteResult("denominator-grid")
    for d, (slope, intercept) in ((3, (3, 5)), (4, (4, 4)), (10, (5, 4))):
        all_ok, count, first_bad = True, 0, ""
        for i in range(1, i_max + 1):
            for b in range(2, slope * i + intercept + 1):
                P = constructions.construct_pip(d, i, b)
                cert = ehrhart.is_pseudointegral(P)
                ok = (
                    cert.is_pip
                    and (cert.interior, cert.boundary) == (i, b)
                    and P.denominator == d
                )
                count += 1
                if not ok and all_ok:
                    all_ok, first_bad = False, f"first failure at (i={i}, b={b})"
        res.add(
            f"denominator-{d} grid: profile and denominator for i <= {i_max}, 2 <= b <= {slope}i+{intercept}",
            all_ok,
            first_bad or f"{count} polygons",
        )
    return res


def suite_counterexamples() -> SuiteResult:
    res = SuiteResult("counterexamples")
    origin = Vec2(0, 0)

    Q = constructions.fourgon_distance_two()
    cert = ehrhart.is_pseudointegral(Q)
    res.add("4-gon is not pseudointegral", not cert.is_pip)
    res.add("4-gon has exactly one interior lattice point", counting.count_interior(Q, 1) == 1)
    res.add(
        "4-gon has an edge at lattice distance 2 from the origin",
        any(e.lattice_distance(origin) == 2 for e in Q.edges()),
    )

    O = constructions.octagon_empty_boundary()
    cert = ehrhart.is_pseudointegral(O)
    res.add("8-gon is not pseudointegral", not cert.is_pip)
    res.add("8-gon has no boundary lattice points", counting.count_boundary(O, 1) == 0)
    res.add("8-gon has exactly one interior lattice point", counting.count_interior(O, 1) == 1)
    res.add("8-gon dual is integral", O.dual().is_integral)
    res.add(
        "8-gon edges all at lattice distance 1",
        all(e.lattice_distance(origin) == 1 for e in O.edges()),
    )
    return res


def suite_reflexive() -> SuiteResult:
    res = SuiteResult("reflexive")
    catalog = constructions.reflexive_catalog()
    res.add("catalog has 16 entries", len(catalog) == 16)
    b_values = []
    for k, P in enumerate(catalog):
        i, b = counting.profile(P)
        b_values.append(b)
        pick = P.area == i + Fraction(b, 2) - 1
        ok = (
            P.is_integral
            and i == 1
            and P.strictly_contains(Vec2(0, 0))
            and P.dual().is_integral
            and 3 <= b <= 9
            and pick
        )
        res.add(f"entry {k}: integral, i=1, integral dual, 3 <= b <= 9, Pick", ok, f"b={b}")
    res.add("boundary count 9 occurs (the large triangle)", 9 in b_values)
    return res


def suite_small_boundary(i_max: int = 5) -> SuiteResult:
    res = SuiteResult("small-boundary")
    for i in range(1, i_max + 1):
        c1 = ehrhart.is_pseudointegral(constructions.example_pip_b1(i))
        res.add(
            f"one-boundary-point triangle certifies ({i}, 1)",
            c1.is_pip and (c1.interior, c1.boundary) == (i, 1),
        )
        c2 = ehrhart.is_pseudointegral(constructions.example_pip_b2(i))
        res.add(
            f"two-boundary-point triangle certifies ({i}, 2)",
            c2.is_pip and (c2.interior, c2.boundary) == (i, 2),
        )
    res.add(
        "integral polygons never admit b in {1, 2}",
        all(
            not constructions.scott_admissible(i, b)
            for i in range(1, i_max + 1)
            for b in (1, 2)
        ),
    )
    return res


# --- randomized property batteries ------------------------------------------


def _random_unimodular(rng: random.Random) -> IntMat2:
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
        m = m @ IntMat2(0, 1, 1, 0)  # det -1 representative
    return m


def _random_polygon(rng: random.Random, span: int = 6, max_den: int = 3) -> RationalPolygon:
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
        except polygon.DegenerateHullError:
            continue


def _random_triangle(rng: random.Random, span: int = 6, max_den: int = 3) -> RationalPolygon:
    while True:
        P = _random_polygon(rng, span, max_den)
        if len(P.vertices) >= 3:
            tri = P.vertices[:3]
            try:
                return hull(tri)
            except polygon.DegenerateHullError:
                continue


def suite_properties(count: int = 100, seed: int = 20250810) -> SuiteResult:
    """Randomized invariant batteries, `count` instances per property."""
    res = SuiteResult("properties")
    rng = random.Random(seed)

    ok = True
    for _ in range(count):
        P = _random_polygon(rng, span=4, max_den=2)
        ok &= ehrhart.check_reciprocity(P, 2 * P.denominator)
    res.add(f"reciprocity at negated arguments, {count} random polygons", ok)

    ok = True
    for _ in range(count):
        P = _random_polygon(rng, span=4, max_den=2)
        m = AffineMap(_random_unimodular(rng), Vec2(rng.randint(-3, 3), rng.randint(-3, 3)))
        Q = P.apply_map(m)
        ok &= all(counting.count_total(P, t) == counting.count_total(Q, t) for t in (1, 2, 3))
        ok &= all(counting.count_boundary(P, t) == counting.count_boundary(Q, t) for t in (1, 2, 3))
        ok &= ehrhart.is_pseudointegral(P).is_pip == ehrhart.is_pseudointegral(Q).is_pip
    res.add(f"counts and verdicts invariant under unimodular maps, {count} polygons", ok)

    ok = True
    for _ in range(count):
        T = _random_triangle(rng)
        m = AffineMap(_random_unimodular(rng), Vec2(rng.randint(-3, 3), rng.randint(-3, 3)))
        ok &= triangle_invariant(T) == triangle_invariant(T.apply_map(m))
    res.add(f"triangle invariant unchanged by unimodular maps, {count} triangles", ok)

    ok = True
    for _ in range(count):
        P = _random_polygon(rng)
        edges = P.edges()
        normals = [e.normal for e in edges]
        offsets = [e.offset for e in edges]
        for k, e in enumerate(edges):
            ok &= edge_vector_from_normals(normals, offsets, k) == e.end - e.start
            ok &= edge_lattice_length_from_normals(normals, offsets, k) == e.lattice_length()
        if len(edges) == 3:
            for k in range(3):
                ok &= triangle_edge_lattice_length(normals, offsets, k) == edges[k].lattice_length()
    res.add(f"facet-data formulas match direct geometry, {count} polygons", ok)

    ok = True
    pips = 0
    for _ in range(count):
        P = _random_polygon(rng, span=4, max_den=2)
        cert = ehrhart.is_pseudointegral(P)
        if cert.is_pip:
            pips += 1
            ok &= all(e.offset.denominator == 1 for e in P.edges())
            ok &= all(
                counting.count_boundary(P, t) == t * cert.boundary
                for t in range(1, 3 * P.denominator + 1)
            )
    res.add(
        f"certified polygons have reticular edges and linear boundary counts ({pips} hits)",
        ok and pips > 0,
    )

    ok = True
    nodes = [s for b in (1, 2, 3, 5, 9) for s in vieta.jump_forest(b, 2000)]
    sample = rng.sample(nodes, min(count, len(nodes)))
    table = set(vieta.all_reduced_solutions())
    for s in sample:
        for pos in range(3):
            ok &= vieta_double_jump_is_identity(s, pos)
        ok &= vieta.vieta_reduce(s) in table
    res.add(f"jump involution and reduction to the table, {len(sample)} forest nodes", ok)

    return res


def vieta_double_jump_is_identity(s: VietaSolution, pos: int) -> bool:
    once = vieta.vieta_jump(s, pos)
    # the jumped entry may land elsewhere after sorting; jumping back means
    # jumping the entry that is NOT one of the two kept ones
    kept = list(s.triple())
    kept.pop(pos)
    back_pos = next(
        k for k in range(3) if sorted(once.triple()[:k] + once.triple()[k + 1 :]) == sorted(kept)
    )
    return vieta.vieta_jump(once, back_pos) == s


SUITES = {
    "reduced-table": suite_reduced_table,
    "b-sweep": suite_b_sweep,
    "nvar-bound": suite_nvar,
    "family-grid": suite_family_grid,
    "fibonacci": suite_fibonacci,
    "denominator-grid": suite_denominator_grid,
    "counterexamples": suite_counterexamples,
    "reflexive": suite_reflexive,
    "properties": suite_properties,
    "small-boundary": suite_small_boundary,
}
