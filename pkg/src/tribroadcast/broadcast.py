"""Reception, domination and efficiency checks for tower sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .lattice import LatticePoint, Window, ball_offsets, graph_distance


@dataclass(frozen=True, order=True)
class Params:
    """Transmission strength ``t`` and required reception ``r``."""

    t: int
    r: int

    def __post_init__(self):
        if not (isinstance(self.t, int) and isinstance(self.r, int)):
            raise TypeError("t and r must be integers")
        if self.r < 1:
            raise ValueError("r must be ≥ 1")
        if self.t < self.r:
            raise ValueError("t must be ≥ r")

    @property
    def near_radius(self) -> int:
        """Vertices closer than this to a tower are served by that tower alone."""
        return self.t - self.r


def towers_of(points: Iterable) -> frozenset[LatticePoint]:
    """Normalize any iterable of pairs into a duplicate-free tower set."""
    return frozenset(LatticePoint(int(p[0]), int(p[1])) for p in points)


def sorted_points(points: Iterable) -> list[LatticePoint]:
    """Points ordered by ``(n, m)``, the order used in every JSON payload."""
    return sorted((LatticePoint(*p) for p in points), key=lambda p: (p[1], p[0]))


def reception(u, towers: Iterable, t: int) -> int:
    if t < 1:
        raise ValueError("t must be ≥ 1")
    return sum(max(0, t - graph_distance(u, v)) for v in towers)


@dataclass
class ReceptionField:
    t: int
    values: dict = field(default_factory=dict)
    r: int | None = None

    def __getitem__(self, p) -> int:
        return self.values[LatticePoint(*p)]

    def minimum(self) -> int:
        return min(self.values.values()) if self.values else 0

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "r": self.r,
            "values": [[p.m, p.n, self.values[p]] for p in sorted_points(self.values)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ReceptionField":
        values = {LatticePoint(m, n): v for m, n, v in data["values"]}
        return cls(t=data["t"], values=values, r=data.get("r"))


def _box_fields(points, towers, t: int, near_radius: int = 0):
    """Run the accumulate kernel on the bounding box of ``points``.

    Returns ``(lookup, rec, near, near_d)`` where ``lookup(p)`` gives the
    flat index of ``p``.
    """
    pts = list(points)
    m0 = min(p[0] for p in pts)
    n0 = min(p[1] for p in pts)
    width = max(p[0] for p in pts) - m0 + 1
    height = max(p[1] for p in pts) - n0 + 1
    R = t - 1
    # towers farther than t-1 from the box contribute nothing
    tw = [
        p for p in towers
        if m0 - R <= p[0] < m0 + width + R and n0 - R <= p[1] < n0 + height + R
    ]
    offs = ball_offsets(t)
    rec, near, near_d = kernels.accumulate(
        m0, n0, width, height,
        [p[0] for p in tw], [p[1] for p in tw],
        [o[0] for o in offs], [o[1] for o in offs], [o[2] for o in offs],
        t, near_radius,
    )

    def lookup(p):
        return (p[1] - n0) * width + (p[0] - m0)

    return lookup, rec, near, near_d


def reception_field(region: Iterable, towers: Iterable, t: int, r: int | None = None) -> ReceptionField:
    pts = [LatticePoint(*p) for p in region]
    if not pts:
        return ReceptionField(t=t, r=r)
    lookup, rec, _, _ = _box_fields(pts, list(towers), t)
    return ReceptionField(t=t, r=r, values={p: rec[lookup(p)] for p in pts})


def dominates(region: Iterable, towers: Iterable, params: Params) -> bool:
    """True iff every vertex of ``region`` receives at least ``params.r``."""
    pts = list(region)
    if not pts:
        return True
    towers = list(towers)
    if not towers:
        return False
    lookup, rec, _, _ = _box_fields(pts, towers, params.t)
    return all(rec[lookup(p)] >= params.r for p in pts)


@dataclass(frozen=True)
class Violation:
    """A vertex where the efficiency conditions fail.

    ``clause`` is ``"a"`` (far vertex not at exactly r) or ``"b"`` (near
    vertex with a second near tower, or reception other than t - d).
    """

    point: LatticePoint
    clause: str
    reception: int
    detail: str


def efficiency_violations(towers: Iterable, params: Params, window: Window,
                          limit: int | None = 1) -> list[Violation]:
    """Check the efficient-broadcast conditions on every core vertex.

    ``towers`` must hold every tower within distance ``t`` of the core;
    ``window.margin >= t`` is required so callers that enumerate over the
    expanded window meet that.
    """
    t, r = params.t, params.r
    if window.margin < t:
        raise ValueError(f"window margin {window.margin} is below t={t}")
    core = window.core()
    lookup, rec, near, near_d = _box_fields(core, list(towers), t, params.near_radius)
    out: list[Violation] = []
    for p in core:
        i = lookup(p)
        got = rec[i]
        if near[i] == 0:
            if got != r:
                out.append(Violation(p, "a", got, f"far vertex receives {got}, expected exactly {r}"))
        elif near[i] > 1:
            out.append(Violation(p, "b", got, f"{near[i]} towers within distance {t - r}"))
        elif got != t - near_d[i]:
            out.append(Violation(
                p, "b", got,
                f"near vertex at distance {near_d[i]} receives {got}, expected {t - near_d[i]}",
            ))
        if limit is not None and len(out) >= limit:
            break
    return out


def is_efficient_window(towers: Iterable, params: Params, window: Window) -> bool:
    return not efficiency_violations(towers, params, window, limit=1)


@dataclass
class WasteProfile:
    """Excess reception ``max(0, rec - r)`` split by origin.

    ``innate`` holds vertices closer than ``t - r`` to some tower, where
    excess signal cannot be avoided; ``waste`` holds everything else.
    """

    waste: dict
    innate: dict

    def total(self) -> int:
        return sum(self.waste.values())


def waste_profile(region: Iterable, towers: Iterable, params: Params) -> WasteProfile:
    pts = [LatticePoint(*p) for p in region]
    waste: dict = {}
    innate: dict = {}
    if not pts:
        return WasteProfile(waste, innate)
    lookup, rec, near, _ = _box_fields(pts, list(towers), params.t, params.near_radius)
    for p in pts:
        i = lookup(p)
        excess = max(0, rec[i] - params.r)
        (innate if near[i] else waste)[p] = excess
    return WasteProfile(waste, innate)
