"""Triangular-grid coordinates, graph metric, balls and matchstick regions.

Points are integer pairs ``(m, n)`` meaning ``m*a1 + n*a2`` with
``a1 = (1, 0)`` and ``a2 = (-1/2, sqrt(3)/2)``.  The six unit steps are
``+-(1, 0)``, ``+-(0, 1)`` and ``+-(1, 1)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class LatticePoint(NamedTuple):
    m: int
    n: int

    def __add__(self, other):  # type: ignore[override]
        return LatticePoint(self.m + other[0], self.n + other[1])

    def __sub__(self, other):
        return LatticePoint(self.m - other[0], self.n - other[1])

    def cartesian(self) -> tuple[float, float]:
        return (self.m - 0.5 * self.n, self.n * 3 ** 0.5 / 2)

    def to_json(self) -> list[int]:
        return [self.m, self.n]


ORIGIN = LatticePoint(0, 0)

STEPS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1),
)


def neighbors(p: tuple[int, int]) -> set[LatticePoint]:
    m, n = p
    return {LatticePoint(m + dm, n + dn) for dm, dn in STEPS}


def offset_distance(dm: int, dn: int) -> int:
    """Graph distance from the origin to ``(dm, dn)``."""
    if dm * dn >= 0:
        return max(abs(dm), abs(dn))
    return abs(dm) + abs(dn)


def graph_distance(u: tuple[int, int], v: tuple[int, int]) -> int:
    return offset_distance(v[0] - u[0], v[1] - u[1])


def bfs_distances(source: tuple[int, int], radius: int) -> dict[LatticePoint, int]:
    """Breadth-first distances from ``source`` out to ``radius`` steps.

    This is the oracle the closed-form metric is checked against; it uses
    nothing but the neighbor relation.
    """
    source = LatticePoint(*source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        p = queue.popleft()
        d = dist[p]
        if d == radius:
            continue
        for q in neighbors(p):
            if q not in dist:
                dist[q] = d + 1
                queue.append(q)
    return dist


def check_metric_against_bfs(radius: int = 10, distance=None) -> list[tuple[int, int, int, int]]:
    """Compare a distance function with BFS on every offset with |m|, |n| <= radius.

    Returns ``(m, n, expected, got)`` for each mismatch.
    """
    distance = distance or graph_distance
    # every offset in the box lies within 2*radius steps
    bfs = bfs_distances(ORIGIN, 2 * radius)
    bad = []
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            got = distance(ORIGIN, (m, n))
            if got != bfs[(m, n)]:
                bad.append((m, n, bfs[(m, n)], got))
    return bad


@lru_cache(maxsize=None)
def ball_offsets(t: int) -> tuple[tuple[int, int, int], ...]:
    """Offsets ``(dm, dn, d)`` at graph distance ``d <= t - 1`` from the origin."""
    if t < 1:
        raise ValueError("t must be >= 1")
    R = t - 1
    out = []
    for dn in range(-R, R + 1):
        for dm in range(-R, R + 1):
            d = offset_distance(dm, dn)
            if d <= R:
                out.append((dm, dn, d))
    return tuple(out)


def ball(v: tuple[int, int], t: int) -> set[LatticePoint]:
    """The broadcast neighborhood ``{u : d(u, v) < t}``."""
    m, n = v
    return {LatticePoint(m + dm, n + dn) for dm, dn, _ in ball_offsets(t)}


def ball_size(t: int) -> int:
    return 3 * t * t - 3 * t + 1


def reach_area(t: int) -> int:
    """Number of unit triangles in the hexagonal reach of a strength-``t`` tower."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return 6 * (t - 1) ** 2


def unit_triangles(points: Iterable[tuple[int, int]]) -> int:
    """Count unit triangles with all three corners in ``points``.

    Up triangles are ``{p, p+(1,0), p+(1,1)}``, down triangles
    ``{p, p+(0,1), p+(1,1)}``.
    """
    pts = set(points)
    count = 0
    for m, n in pts:
        if (m + 1, n + 1) in pts:
            count += ((m + 1, n) in pts) + ((m, n + 1) in pts)
    return count


def unit_edges(points: Iterable[tuple[int, int]]) -> int:
    pts = set(points)
    return sum(
        ((m + 1, n) in pts) + ((m, n + 1) in pts) + ((m + 1, n + 1) in pts)
        for m, n in pts
    )


def triangular(k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return k * (k + 1) // 2


def interior_edge_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return 3 * triangular(n - 1)


@dataclass(frozen=True)
class MatchstickRegion:
    """Vertex set of T_n, normalized to ``{(m, k) : 0 <= m <= k <= n}``.

    Row ``k`` holds ``k + 1`` vertices; the apex is the origin and the
    side of length ``n`` runs along ``a1`` at row ``k = n``.
    """

    n: int
    points: frozenset = field(repr=False, compare=False)

    def __contains__(self, p) -> bool:
        return 0 <= p[0] <= p[1] <= self.n

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self.sorted_points())

    def sorted_points(self) -> list[LatticePoint]:
        return [LatticePoint(m, k) for k in range(self.n + 1) for m in range(k + 1)]

    def boundary_edge_count(self) -> int:
        return 3 * self.n

    def clamp(self, p: tuple[int, int]) -> LatticePoint:
        """Nearest region vertex by graph distance (ties: lowest row, then lowest m)."""
        if p in self:
            return LatticePoint(*p)
        return min(self.sorted_points(), key=lambda u: (graph_distance(p, u), u[1], u[0]))


@lru_cache(maxsize=64)
def matchstick(n: int) -> MatchstickRegion:
    if n < 0:
        raise ValueError("n must be >= 0")
    pts = frozenset(LatticePoint(m, k) for k in range(n + 1) for m in range(k + 1))
    return MatchstickRegion(n, pts)


@dataclass(frozen=True)
class Window:
    """Finite stand-in for the infinite grid: a core box plus a margin shell."""

    half_width: int
    margin: int = 0
    center: tuple[int, int] = (0, 0)

    def __post_init__(self):
        if self.half_width < 0 or self.margin < 0:
            raise ValueError("half_width and margin must be nonnegative")

    def core(self) -> list[LatticePoint]:
        return self._box(self.half_width)

    def expanded(self) -> list[LatticePoint]:
        return self._box(self.half_width + self.margin)

    def in_core(self, p) -> bool:
        return self._inside(p, self.half_width)

    def in_expanded(self, p) -> bool:
        return self._inside(p, self.half_width + self.margin)

    def _inside(self, p, R: int) -> bool:
        return abs(p[0] - self.center[0]) <= R and abs(p[1] - self.center[1]) <= R

    def _box(self, R: int) -> list[LatticePoint]:
        cm, cn = self.center
        return [
            LatticePoint(cm + dm, cn + dn)
            for dn in range(-R, R + 1)
            for dm in range(-R, R + 1)
        ]


# Point group of the triangular lattice in (m, n) coordinates.
_ROT60 = ((1, -1), (1, 0))  # (m, n) -> (m - n, m)
_SWAP = ((0, 1), (1, 0))


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _apply(mat, p):
    return (mat[0][0] * p[0] + mat[0][1] * p[1], mat[1][0] * p[0] + mat[1][1] * p[1])


@lru_cache(maxsize=None)
def point_group() -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
    """The 12 linear isometries of the triangular lattice."""
    rots = [((1, 0), (0, 1))]
    for _ in range(5):
        rots.append(_matmul(_ROT60, rots[-1]))
    return tuple(rots + [_matmul(r, _SWAP) for r in rots])


@lru_cache(maxsize=64)
def region_symmetries(n: int) -> tuple[dict, ...]:
    """Lattice isometries mapping T_n onto itself, as point -> point dicts."""
    region = matchstick(n)
    pts = region.sorted_points()
    out = []
    for g in point_group():
        img = [_apply(g, p) for p in pts]
        sm = min(q[0] for q in img)
        sn = min(q[1] for q in img)
        mapping = {p: LatticePoint(q[0] - sm, q[1] - sn) for p, q in zip(pts, img)}
        if all(q in region for q in mapping.values()):
            out.append(mapping)
    return tuple(out)
