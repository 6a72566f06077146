"""Positive solutions of b = (x+y+z)^2 / (xyz) and their jump structure.

Solutions are stored sorted increasing; jumping replaces one entry by
the conjugate root of the quadratic it satisfies, which walks a forest
whose roots are the Vieta-reduced solutions (x <= y <= z <= x+y).
The module also provides the recursively generated one-parameter
families used to build triangle fixtures, and the n-variable
generalization of the bound b <= n^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable


class BoundViolationError(RuntimeError):
    """An enumerated solution broke a proven bound; must never fire."""


def is_solution(x: int, y: int, z: int) -> int | None:
    """The integer b = (x+y+z)^2/(xyz), or None when xyz does not divide."""
    if min(x, y, z) < 1:
        raise ValueError("entries must be positive")
    s = x + y + z
    p = x * y * z
    if (s * s) % p:
        return None
    return (s * s) // p


@dataclass(frozen=True, order=True)
class VietaSolution:
    """Sorted positive triple with its b-value; (x+y+z)^2 = b*x*y*z."""

    x: int
    y: int
    z: int
    b: int

    def __post_init__(self) -> None:
        if not (1 <= self.x <= self.y <= self.z):
            raise ValueError("solution entries must be positive and sorted")
        if (self.x + self.y + self.z) ** 2 != self.b * self.x * self.y * self.z:
            raise ValueError(f"({self.x},{self.y},{self.z}) is not a solution for b={self.b}")

    @classmethod
    def from_triple(cls, x: int, y: int, z: int) -> "VietaSolution":
        b = is_solution(x, y, z)
        if b is None:
            raise ValueError(f"({x},{y},{z}) does not solve the equation for any integer b")
        x, y, z = sorted((x, y, z))
        return cls(x, y, z, b)

    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def is_vieta_reduced(s: VietaSolution) -> bool:
    return s.z <= s.x + s.y


def vieta_jump(s: VietaSolution, position: int) -> VietaSolution:
    """Replace the entry at sorted slot `position` by its conjugate root.

    With the other two entries p, q fixed, the replaced entry e and its
    image e' are the two roots of t^2 - (b*p*q - 2(p+q))*t + (p+q)^2,
    so e' = b*p*q - 2(p+q) - e = (p+q)^2/e > 0 and the result is again
    a solution.  Jumping the same slot twice is the identity.
    """
    entries = list(s.triple())
    e = entries.pop(position)
    p, q = entries
    e_new = s.b * p * q - 2 * (p + q) - e
    if e_new <= 0:
        raise ValueError("jump produced a nonpositive entry")  # impossible: e*e' = (p+q)^2
    x, y, z = sorted((p, q, e_new))
    return VietaSolution(x, y, z, s.b)


def vieta_reduce(s: VietaSolution) -> VietaSolution:
    """Jump the largest entry down until z <= x + y; terminates since z drops."""
    while not is_vieta_reduced(s):
        nxt = vieta_jump(s, 2)
        assert nxt.z < s.z
        s = nxt
    return s


def enumerate_reduced(b: int) -> frozenset[VietaSolution]:
    """All Vieta-reduced solutions for one b in 1..9.

    Reducedness forces x <= 16/b and w := z - y in 0..x, leaving a
    quadratic in y per (x, w) cell:
    (b*x - 4) y^2 + (b*x*w - 4(x+w)) y - (x+w)^2 = 0.
    Cells with b*x <= 4 have no positive root (the root product is
    negative or the linear case forces y < 0).  The perfect-square test
    uses exact integer square roots; a near-square is never accepted.
    """
    if not 1 <= b <= 9:
        raise ValueError("b must be in 1..9")
    found = set()
    for x in range(1, 16 // b + 1):
        for w in range(0, x + 1):
            A = b * x - 4
            if A <= 0:
                continue
            B = b * x * w - 4 * (x + w)
            C = -((x + w) ** 2)
            disc = B * B - 4 * A * C
            root = math.isqrt(disc)
            if root * root != disc:
                continue
            for num in (-B + root, -B - root):
                if num > 0 and num % (2 * A) == 0:
                    y = num // (2 * A)
                    z = y + w
                    if x <= y and is_solution(x, y, z) == b:
                        found.add(VietaSolution(x, y, z, b))
    return frozenset(found)


def all_reduced_solutions() -> tuple[VietaSolution, ...]:
    """The complete table of reduced solutions over b = 1..9, sorted."""
    out = []
    for b in range(1, 10):
        out.extend(enumerate_reduced(b))
    return tuple(sorted(out, key=lambda s: (s.b, s.x, s.y, s.z)))


def jump_forest(b: int, max_z: int) -> dict[VietaSolution, tuple[VietaSolution, ...]]:
    """Sorted-solution graph with single jumps as edges, entries <= max_z.

    Every node is reachable from a reduced root because reduction paths
    have strictly decreasing maxima.  The unsorted solution graph is a
    3-regular rooted forest with one tree per reordering of each
    reduced solution (51 trees over all b); what is exposed here is its
    quotient modulo reordering, one component per reduced solution, so
    jumps that land on the same sorted triple are dropped.
    """
    if not 1 <= b <= 9:
        raise ValueError("b must be in 1..9")
    roots = [s for s in enumerate_reduced(b) if s.z <= max_z]
    adjacency: dict[VietaSolution, set[VietaSolution]] = {}
    frontier = list(roots)
    for s in frontier:
        adjacency[s] = set()
    while frontier:
        s = frontier.pop()
        for pos in range(3):
            nb = vieta_jump(s, pos)
            if nb == s or nb.z > max_z:
                continue
            adjacency[s].add(nb)
            if nb not in adjacency:
                adjacency[nb] = set()
                frontier.append(nb)
            adjacency[nb].add(s)
    return {s: tuple(sorted(adjacency[s])) for s in sorted(adjacency)}


@dataclass(frozen=True)
class FamilyState:
    """State s_j = (x, y_j, z_j) of the recursively generated family."""

    seed: VietaSolution
    j: int
    x: int
    y: int
    z: int

    def solution(self) -> VietaSolution:
        return VietaSolution(*sorted((self.x, self.y, self.z)), self.seed.b)


def family(seed: VietaSolution, j_max: int) -> list[FamilyState]:
    """States s_0..s_j_max grown from a reduced seed by jumping the middle entry.

    The recursion y_{j+1} = z_j, z_{j+1} = b*x*y_{j+1} - 2(x + y_{j+1}) - y_j
    keeps x fixed; every state is a solution, z grows strictly, and x
    divides both y_j and z_j, which downstream triangle construction
    relies on.
    """
    if not is_vieta_reduced(seed):
        raise ValueError("family seeds must be Vieta-reduced")
    b = seed.b
    x, y, z = seed.triple()
    states = [FamilyState(seed, 0, x, y, z)]
    for j in range(1, j_max + 1):
        y, z = z, b * x * z - 2 * (x + z) - y
        st = FamilyState(seed, j, x, y, z)
        prev = states[-1]
        if st.z <= prev.z or y % x or z % x or is_solution(x, y, z) != b:
            raise AssertionError(f"family recursion invariant broken at j={j}")
        states.append(st)
    return states


def solution_b_sweep(bound: int) -> dict[int, tuple[int, int, int]]:
    """Map each attained b-value to its first witness triple.

    Scans all 1 <= x <= y <= z <= bound with xyz | (x+y+z)^2.  Written
    as a bare triple loop because the sweep bound in the acceptance
    suite makes this the hottest pure-Python search in the package.
    """
    witnesses: dict[int, tuple[int, int, int]] = {}
    for x in range(1, bound + 1):
        for y in range(x, bound + 1):
            xy = x * y
            sxy = x + y
            for z in range(y, bound + 1):
                s = sxy + z
                if (s * s) % (xy * z) == 0:
                    witnesses.setdefault((s * s) // (xy * z), (x, y, z))
    return witnesses


# --- n-variable generalization -------------------------------------------


@dataclass(frozen=True)
class NTuple:
    """Sorted positive n-tuple with (sum)^2 = b * product."""

    values: tuple[int, ...]
    b: int

    def __post_init__(self) -> None:
        if len(self.values) < 2 or list(self.values) != sorted(self.values) or self.values[0] < 1:
            raise ValueError("values must be a sorted positive tuple with n >= 2")
        s = sum(self.values)
        if s * s != self.b * math.prod(self.values):
            raise ValueError(f"{self.values} is not a solution for b={self.b}")


def tuple_b_value(values: Iterable[int]) -> int | None:
    vals = tuple(values)
    if min(vals) < 1:
        raise ValueError("entries must be positive")
    s = sum(vals)
    p = math.prod(vals)
    return (s * s) // p if (s * s) % p == 0 else None


def reduce_tuple(t: NTuple) -> NTuple:
    """n-variable reduction: jump the largest entry until it is <= the rest."""
    values, b = t.values, t.b
    while values[-1] > sum(values[:-1]):
        rest = values[:-1]
        s_rest = sum(rest)
        new_last = b * math.prod(rest) - 2 * s_rest - values[-1]
        assert new_last >= 1  # product of the two roots is (sum rest)^2 > 0
        values = tuple(sorted(rest + (new_last,)))
    return NTuple(values, b)


@dataclass(frozen=True)
class GeneralBoundReport:
    n: int
    search_bound: int
    solutions: tuple[NTuple, ...]
    max_b: int
    b_values: frozenset[int]
    all_reduce: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "search_bound": self.search_bound,
            "solutions": [[*t.values, t.b] for t in self.solutions],
            "max_b": self.max_b,
            "b_values": sorted(self.b_values),
            "all_reduce": self.all_reduce,
        }


def verify_general_bound(n: int, search_bound: int) -> GeneralBoundReport:
    """Exhaust sorted n-tuples up to search_bound and check b <= n^2.

    Also reduces every solution found and confirms the reduced form has
    its largest entry bounded by the sum of the others.  The search is
    complete only up to the given bound; no completeness of the b-value
    list is claimed beyond it.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    solutions = []
    for combo in combinations_with_replacement(range(1, search_bound + 1), n):
        b = tuple_b_value(combo)
        if b is None:
            continue
        if b > n * n:
            raise BoundViolationError(f"{combo} gives b={b} > n^2={n * n}")
        solutions.append(NTuple(combo, b))
    all_reduce = True
    for t in solutions:
        r = reduce_tuple(t)
        if r.values[-1] > sum(r.values[:-1]):
            all_reduce = False
    b_values = frozenset(t.b for t in solutions)
    return GeneralBoundReport(
        n=n,
        search_bound=search_bound,
        solutions=tuple(solutions),
        max_b=max(b_values) if b_values else 0,
        b_values=b_values,
        all_reduce=all_reduce,
    )
