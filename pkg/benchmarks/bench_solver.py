"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_solver.py [--repeat N]

Each row runs one search or accumulate call on both backends, checks the
outputs agree, and prints the best wall time of ``--repeat`` runs.
"""
import argparse
import time

from tribroadcast import kernels
from tribroadcast.broadcast import Params
from tribroadcast.lattice import ball_offsets
from tribroadcast.patterns import enumerate_towers, pattern
from tribroadcast.lattice import Window
from tribroadcast.solver import _model

SEARCHES = [
    # (n, t, r, k): k at the optimum finds a set, k below it proves none exists
    (9, 3, 1, 5),
    (9, 3, 1, 4),
    (8, 3, 2, 6),
    (9, 2, 1, 9),
    (11, 3, 1, 5),
]


def search_args(n, t, r, k):
    m = _model(n, Params(t, r))
    nv = len(m.points)
    return (nv, nv, m.cov_ptr, m.cov_idx, m.cov_val, m.cand_ptr, m.cand_idx, m.cand_val,
            m.allowed, [r] * nv, k, m.cap, 0, m.perms)


def accumulate_args(t, r, L):
    window = Window(L, t)
    towers = sorted(enumerate_towers(pattern(Params(t, r)), window))
    offs = ball_offsets(t)
    R = L + t
    return (-R, -R, 2 * R + 1, 2 * R + 1,
            [s.m for s in towers], [s.n for s in towers],
            [o[0] for o in offs], [o[1] for o in offs], [o[2] for o in offs], t, t - r)


def best_time(fn, args, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = kernels.load("python")
    try:
        cy = kernels.load("cython")
    except ImportError:
        raise SystemExit("compiled kernels are not built; reinstall with Cython available")

    print(f"{'case':<28}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    cases = [(f"search n={n} t={t} r={r} k={k}", "search", search_args(n, t, r, k))
             for n, t, r, k in SEARCHES]
    cases += [(f"accumulate t={t} r={r} L={L}", "accumulate", accumulate_args(t, r, L))
              for t, r, L in ((3, 1, 60), (5, 2, 120))]
    for label, fn, fargs in cases:
        tp, out_p = best_time(getattr(py, fn), fargs, args.repeat)
        tc, out_c = best_time(getattr(cy, fn), fargs, args.repeat)
        if out_p != out_c:
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:<28}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
