"""Exact minimum (t,r) broadcast domination of matchstick graphs T_n.

The problem is a set multicover: every vertex needs ``r`` units of
signal and a tower at distance ``d < t`` supplies ``t - d``.  Optimize
mode runs feasibility searches for ``k = lower bound, lower bound + 1,
...`` until one succeeds or ``k`` reaches the greedy incumbent.
"""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import kernels
from .broadcast import Params, dominates, sorted_points, towers_of
from .lattice import LatticePoint, ball_offsets, graph_distance, matchstick, region_symmetries

log = logging.getLogger(__name__)

OPTIMAL = "optimal"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SolveInstance:
    """``k=None`` asks for the optimum; an integer ``k`` asks for any set of size <= k."""

    n: int
    params: Params
    k: int | None = None
    budget: int | None = None
    hint: frozenset | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be ≥ 0")
        if self.k is not None and self.k < 0:
            raise ValueError("feasibility target k must be ≥ 0")

    @property
    def mode(self) -> str:
        return "optimize" if self.k is None else "feasibility"


@dataclass
class SolveResult:
    status: str
    value: int | None
    witness: frozenset
    lower_bound: int
    nodes: int = 0
    elapsed: float = 0.0
    backend: str = kernels.BACKEND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "witness": [list(p) for p in sorted_points(self.witness)],
            "lower_bound": self.lower_bound,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
        }


@dataclass
class _Model:
    """Index-based view of T_n for the kernels."""

    n: int
    params: Params
    points: list
    index: dict
    cov_ptr: list
    cov_idx: list
    cov_val: list
    cand_ptr: list
    cand_idx: list
    cand_val: list
    allowed: list
    cap: int
    perms: list = field(default_factory=list)


@lru_cache(maxsize=32)
def _model(n: int, params: Params) -> _Model:
    region = matchstick(n)
    pts = region.sorted_points()
    index = {p: i for i, p in enumerate(pts)}
    t, r = params.t, params.r
    cov: list[list[tuple[int, int]]] = []
    for s in pts:
        row = []
        for dm, dn, d in ball_offsets(t):
            q = (s[0] + dm, s[1] + dn)
            if q in region:
                row.append((index[q], t - d))
        row.sort()
        cov.append(row)

    cov_ptr, cov_idx, cov_val = [0], [], []
    cand: list[list[tuple[int, int]]] = [[] for _ in pts]
    for s, row in enumerate(cov):
        for v, c in row:
            cov_idx.append(v)
            cov_val.append(c)
            cand[v].append((s, c))
        cov_ptr.append(len(cov_idx))
    cand_ptr, cand_idx, cand_val = [0], [], []
    for row in cand:
        for s, c in row:
            cand_idx.append(s)
            cand_val.append(c)
        cand_ptr.append(len(cand_idx))

    allowed = _undominated(cov, r) if r == 1 else [1] * len(pts)
    cap = max(sum(min(c, r) for _, c in row) for row in cov)
    perms = []
    for g in region_symmetries(n):
        perms.extend(index[g[p]] for p in pts)
    return _Model(n, params, pts, index, cov_ptr, cov_idx, cov_val,
                  cand_ptr, cand_idx, cand_val, allowed, cap, perms)


def _undominated(cov, r: int) -> list[int]:
    """Flag towers whose capped coverage is not strictly dominated by another's.

    Only sound for ``r == 1``: then a dominated tower can always be swapped
    for its dominator.  Strict dominance keeps the flag set invariant under
    the symmetries of T_n.
    """
    vecs = [{v: min(c, r) for v, c in row} for row in cov]
    # a dominator must reach s itself, so only towers covering s are candidates
    covering: list[list[int]] = [[] for _ in cov]
    for s2, row in enumerate(cov):
        for v, _ in row:
            covering[v].append(s2)
    keep = [1] * len(cov)
    for s, a in enumerate(vecs):
        for s2 in covering[s]:
            b = vecs[s2]
            if s2 == s or len(b) < len(a):
                continue
            if all(b.get(v, 0) >= c for v, c in a.items()) and (
                len(b) > len(a) or any(b[v] > c for v, c in a.items())
            ):
                keep[s] = 0
                break
    return keep


def _deficits(model: _Model, partial: Iterable) -> list[int]:
    r = model.params.r
    deficit = [r] * len(model.points)
    for s in partial:
        i = model.index[LatticePoint(*s)]
        for j in range(model.cov_ptr[i], model.cov_ptr[i + 1]):
            v = model.cov_idx[j]
            deficit[v] = max(0, deficit[v] - model.cov_val[j])
    return deficit


def deficit_lower_bound(partial: Iterable, n: int, params: Params) -> int:
    """Admissible bound on how many more towers ``partial`` needs.

    Residual deficits never exceed ``r``, so one extra tower removes at most
    ``max_s sum_v min(t - d(s, v), r)`` of them.
    """
    model = _model(n, params)
    residual = sum(_deficits(model, partial))
    return -(-residual // model.cap)


def _prune_redundant(model: _Model, chosen: list[int]) -> list[int]:
    """Drop towers whose removal keeps every deficit at zero, last placed first."""
    r = model.params.r
    rec = [0] * len(model.points)
    for s in chosen:
        for j in range(model.cov_ptr[s], model.cov_ptr[s + 1]):
            rec[model.cov_idx[j]] += model.cov_val[j]
    kept = list(chosen)
    for s in reversed(chosen):
        span = range(model.cov_ptr[s], model.cov_ptr[s + 1])
        if all(rec[model.cov_idx[j]] - model.cov_val[j] >= r for j in span):
            for j in span:
                rec[model.cov_idx[j]] -= model.cov_val[j]
            kept.remove(s)
    return kept


def _greedy(model: _Model) -> list[int]:
    deficit = [model.params.r] * len(model.points)
    total = sum(deficit)
    chosen: list[int] = []
    used = [False] * len(model.points)
    while total > 0:
        best, best_gain = -1, 0
        for s in range(len(model.points)):
            if used[s]:
                continue
            gain = 0
            for j in range(model.cov_ptr[s], model.cov_ptr[s + 1]):
                c = model.cov_val[j]
                d = deficit[model.cov_idx[j]]
                gain += c if c < d else d
            if gain > best_gain:
                best, best_gain = s, gain
        used[best] = True
        chosen.append(best)
        for j in range(model.cov_ptr[best], model.cov_ptr[best + 1]):
            v = model.cov_idx[j]
            g = min(model.cov_val[j], deficit[v])
            deficit[v] -= g
            total -= g
    return _prune_redundant(model, chosen)


def greedy_incumbent(n: int, params: Params) -> frozenset[LatticePoint]:
    """Dominating set built by repeatedly taking the largest deficit reduction."""
    model = _model(n, params)
    return frozenset(model.points[s] for s in _greedy(model))


def _certify(n: int, params: Params, witness) -> frozenset:
    witness = towers_of(witness)
    region = matchstick(n)
    if not all(p in region for p in witness) or not dominates(region.points, witness, params):
        raise RuntimeError(f"solver produced an invalid witness for n={n}, {params}")
    return witness


def _run(model: _Model, k: int, budget: int, use_symmetry: bool):
    return kernels.search(
        len(model.points), len(model.points), model.cov_ptr, model.cov_idx, model.cov_val,
        model.cand_ptr, model.cand_idx, model.cand_val,
        model.allowed, [model.params.r] * len(model.points), k, model.cap,
        budget, model.perms if use_symmetry else [],
    )


def solve(inst: SolveInstance, use_symmetry: bool = True) -> SolveResult:
    start = time.perf_counter()
    params = inst.params
    model = _model(inst.n, params)
    lower = max(1, deficit_lower_bound((), inst.n, params))

    incumbent = [model.index[p] for p in sorted_points(_greedy_set(model))]
    if inst.hint is not None:
        hint = _certify(inst.n, params, inst.hint)
        if len(hint) < len(incumbent):
            incumbent = [model.index[p] for p in sorted_points(hint)]
    budget_left = inst.budget if inst.budget else 0
    nodes = 0

    def result(status, value, chosen, lb):
        witness = _certify(inst.n, params, [model.points[s] for s in chosen])
        return SolveResult(status, value, witness, lb, nodes, time.perf_counter() - start)

    if inst.k is not None:
        if len(incumbent) <= inst.k:
            return result(FEASIBLE, len(incumbent), incumbent, lower)
        if inst.k < lower:
            return SolveResult(INFEASIBLE, None, frozenset(), lower, 0,
                               time.perf_counter() - start)
        status, chosen, nodes = _run(model, inst.k, budget_left, use_symmetry)
        if status == kernels.FOUND:
            return result(FEASIBLE, len(chosen), chosen, lower)
        if status == kernels.EXHAUSTED:
            return SolveResult(INFEASIBLE, None, frozenset(), inst.k + 1, nodes,
                               time.perf_counter() - start)
        return result(BUDGET_EXHAUSTED, len(incumbent), incumbent, lower)

    k = lower
    while k < len(incumbent):
        if inst.budget and budget_left <= 0:
            return result(BUDGET_EXHAUSTED, len(incumbent), incumbent, k)
        status, chosen, used = _run(model, k, budget_left, use_symmetry)
        nodes += used
        if inst.budget:
            budget_left -= used
        if status == kernels.FOUND:
            return result(OPTIMAL, len(chosen), chosen, len(chosen))
        if status == kernels.ABORTED:
            return result(BUDGET_EXHAUSTED, len(incumbent), incumbent, k)
        log.debug("n=%d %s: no set of size %d (%d nodes)", inst.n, params, k, used)
        k += 1
    return result(OPTIMAL, len(incumbent), incumbent, len(incumbent))


def _greedy_set(model: _Model) -> list[LatticePoint]:
    return [model.points[s] for s in _greedy(model)]


def domination_number(n: int, t: int, r: int, budget: int | None = None) -> int:
    res = solve(SolveInstance(n, Params(t, r), budget=budget))
    if res.status != OPTIMAL:
        raise RuntimeError(f"budget exhausted before γ_{t},{r}(T_{n}) was proven")
    return res.value


def local_improve(n: int, params: Params, towers: Iterable, target: int,
                  radius: int | None = None, budget: int = 200_000,
                  max_rounds: int = 50, kicks: int = 0, seed: int = 0) -> frozenset[LatticePoint]:
    """Shrink a dominating set of T_n toward ``target`` by exact local re-solves.

    Each step frees the towers within ``radius`` of one tower, keeps the rest
    fixed and asks the search kernel to re-cover the resulting hole with one
    tower fewer.  When no neighborhood improves, up to ``kicks`` sideways
    moves re-cover a random tower's neighborhood at the same size without
    that tower, then descent resumes.
    """
    model = _model(n, params)
    radius = radius if radius is not None else 2 * params.t
    current = sorted(model.index[LatticePoint(*p)] for p in _certify(n, params, towers))
    points = model.points
    rng = random.Random(seed)

    def hole(center):
        c = points[center]
        freed = [s for s in current if graph_distance(points[s], c) <= radius]
        return freed, [s for s in current if s not in freed]

    for kick in range(kicks + 1):
        for _ in range(max_rounds):
            if len(current) <= target:
                break
            for center in list(current):
                freed, kept = hole(center)
                chosen = _recover(model, kept, len(freed) - 1, budget)
                if chosen is not None:
                    current = sorted(kept + chosen)
                    break
            else:
                break
        if len(current) <= target or kick == kicks:
            break
        center = rng.choice(current)
        freed, kept = hole(center)
        chosen = _recover(model, kept, len(freed), budget, exclude=center)
        if chosen is not None:
            current = sorted(kept + chosen)
    return _certify(n, params, [points[s] for s in current])


def _recover(model: _Model, kept: list[int], k: int, budget: int,
             exclude: int | None = None) -> list[int] | None:
    """Cover what ``kept`` leaves uncovered with at most ``k`` new towers.

    Builds a compact instance over the deficient vertices only, so the
    kernel never sees the rest of T_n.
    """
    deficit = _deficits(model, [model.points[s] for s in kept])
    holes = [v for v, d in enumerate(deficit) if d > 0]
    if not holes:
        return []
    local = {v: i for i, v in enumerate(holes)}
    taken = set(kept)
    if exclude is not None:
        taken.add(exclude)
    towers = sorted({
        model.cand_idx[j]
        for v in holes
        for j in range(model.cand_ptr[v], model.cand_ptr[v + 1])
        if model.allowed[model.cand_idx[j]] and model.cand_idx[j] not in taken
    })
    cov_ptr, cov_idx, cov_val = [0], [], []
    cand: list[list[tuple[int, int]]] = [[] for _ in holes]
    for ti, s in enumerate(towers):
        for j in range(model.cov_ptr[s], model.cov_ptr[s + 1]):
            v = model.cov_idx[j]
            if v in local:
                cov_idx.append(local[v])
                cov_val.append(model.cov_val[j])
                cand[local[v]].append((ti, model.cov_val[j]))
        cov_ptr.append(len(cov_idx))
    cand_ptr, cand_idx, cand_val = [0], [], []
    for row in cand:
        for ti, c in row:
            cand_idx.append(ti)
            cand_val.append(c)
        cand_ptr.append(len(cand_idx))
    status, chosen, _ = kernels.search(
        len(holes), len(towers), cov_ptr, cov_idx, cov_val,
        cand_ptr, cand_idx, cand_val, [1] * len(towers),
        [deficit[v] for v in holes], k, model.cap, budget, [],
    )
    if status != kernels.FOUND:
        return None
    return [towers[i] for i in chosen]
