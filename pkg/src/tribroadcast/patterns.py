"""Efficient broadcast patterns on the infinite triangular grid.

A pattern is the sublattice spanned by two integer vectors.  For
``t >= r >= 1`` the tower lattice has basis ``(2t-r, t)`` and
``(t-r, 2t-r)``; its mirror image swaps the two coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .broadcast import Params
from .lattice import LatticePoint, Window


@dataclass(frozen=True)
class PatternLattice:
    v1: tuple[int, int]
    v2: tuple[int, int]
    params: Params
    mirrored: bool = False

    def __post_init__(self):
        if self.det == 0:
            raise ValueError("basis vectors are linearly dependent")

    @property
    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.v1, self.v2)

    @property
    def det(self) -> int:
        return self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]

    def point(self, x: int, y: int) -> LatticePoint:
        return LatticePoint(x * self.v1[0] + y * self.v2[0], x * self.v1[1] + y * self.v2[1])

    def coefficients(self, p) -> tuple[int, int] | None:
        """Integer ``(x, y)`` with ``x*v1 + y*v2 == p``, or None off the lattice."""
        D = self.det
        xn = p[0] * self.v2[1] - p[1] * self.v2[0]
        yn = self.v1[0] * p[1] - self.v1[1] * p[0]
        if xn % D or yn % D:
            return None
        return xn // D, yn // D

    def __contains__(self, p) -> bool:
        return self.coefficients(p) is not None

    def towers_in_box(self, m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> frozenset[LatticePoint]:
        """Every lattice point with ``m_lo <= m <= m_hi`` and ``n_lo <= n <= n_hi``."""
        D = self.det
        # the coefficient map is linear, so its extremes over the box sit at corners
        xs, ys = [], []
        for m in (m_lo, m_hi):
            for n in (n_lo, n_hi):
                xs.append((m * self.v2[1] - n * self.v2[0]) / D)
                ys.append((self.v1[0] * n - self.v1[1] * m) / D)
        out = set()
        for x in range(math.floor(min(xs)), math.ceil(max(xs)) + 1):
            for y in range(math.floor(min(ys)), math.ceil(max(ys)) + 1):
                p = self.point(x, y)
                if m_lo <= p.m <= m_hi and n_lo <= p.n <= n_hi:
                    out.add(p)
        return frozenset(out)

    def to_json(self) -> list[list[int]]:
        return [list(self.v1), list(self.v2)]


def _check(params: Params | tuple[int, int]) -> Params:
    if isinstance(params, Params):
        return params
    return Params(*params)


def pattern(params) -> PatternLattice:
    p = _check(params)
    t, r = p.t, p.r
    return PatternLattice((2 * t - r, t), (t - r, 2 * t - r), p)


def mirror_pattern(params) -> PatternLattice:
    """Reflection of :func:`pattern` across the line through 0 and (1, 1)."""
    p = _check(params)
    t, r = p.t, p.r
    return PatternLattice((t, 2 * t - r), (2 * t - r, t - r), p, mirrored=True)


def enumerate_towers(pl: PatternLattice, window: Window) -> frozenset[LatticePoint]:
    """All pattern towers inside the window core grown by its margin."""
    R = window.half_width + window.margin
    cm, cn = window.center
    return pl.towers_in_box(cm - R, cm + R, cn - R, cn + R)


def vertices_per_tower(params) -> int:
    p = _check(params)
    return 3 * p.t * p.t - 3 * p.t * p.r + p.r * p.r


def axis_period(params) -> int:
    """Smallest ``m > 0`` with ``(m, 0)`` a tower of :func:`pattern`."""
    pl = pattern(params)
    for m in range(1, abs(pl.det) + 1):
        if (m, 0) in pl:
            return m
    raise AssertionError("the determinant is always a period")  # pragma: no cover


def density_ratio(pl: PatternLattice, half_width: int) -> float:
    """Core vertices per core tower on the box ``|m|, |n| <= half_width``."""
    L = half_width
    count = len(pl.towers_in_box(-L, L, -L, L))
    return (2 * L + 1) ** 2 / count


def proof_regions(params) -> list[tuple[LatticePoint, dict[str, int]]]:
    """Vertex families from the efficiency argument with their expected per-tower signals.

    Towers are ``A = 0``, ``B = (t, r - t)`` and ``C = (2t - r, t)``.  The
    parallelogram family gets ``r-1-i`` from A and ``i+1`` from C; the
    triangle family gets ``r-2-i`` from A, ``1+i-j`` from B and ``1+j``
    from C.  Every other tower contributes nothing.
    """
    p = _check(params)
    t, r = p.t, p.r
    out = []
    for i in range(r - 1):
        for j in range(t - r + 1):
            pt = LatticePoint(t - r + 1 + i, 1 + i + j)
            out.append((pt, {"A": r - 1 - i, "C": i + 1}))
    for i in range(r - 2):
        for j in range(i + 1):
            pt = LatticePoint(t - r + 2 + i, 1 + j)
            out.append((pt, {"A": r - 2 - i, "B": 1 + i - j, "C": 1 + j}))
    return out


def named_towers(params) -> dict[str, LatticePoint]:
    """The origin tower and its six lattice neighbors, labelled A..G."""
    pl = pattern(params)
    return {
        "A": pl.point(0, 0),
        "B": pl.point(1, -1),
        "C": pl.point(1, 0),
        "D": pl.point(0, 1),
        "E": pl.point(-1, 1),
        "F": pl.point(-1, 0),
        "G": pl.point(0, -1),
    }
