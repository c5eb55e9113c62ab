import pytest

from tribroadcast import kernels
from tribroadcast.broadcast import Params
from tribroadcast.lattice import Window, ball_offsets
from tribroadcast.patterns import enumerate_towers, pattern
from tribroadcast.solver import _model

PY = kernels.load("python")
try:
    CY = kernels.load("cython")
except ImportError:  # pragma: no cover
    CY = None

needs_ext = pytest.mark.skipif(CY is None, reason="compiled kernels not built")


def test_backend_name():
    assert kernels.BACKEND in {"python", "cython"}


def search_args(n, t, r, k, symmetry=True, budget=0):
    m = _model(n, Params(t, r))
    nv = len(m.points)
    return (nv, nv, m.cov_ptr, m.cov_idx, m.cov_val, m.cand_ptr, m.cand_idx, m.cand_val,
            m.allowed, [r] * nv, k, m.cap, budget, m.perms if symmetry else [])


@needs_ext
@pytest.mark.parametrize("n, t, r, k", [
    (9, 3, 1, 5), (9, 3, 1, 4), (6, 2, 2, 9), (6, 2, 2, 10), (7, 3, 2, 4), (5, 4, 4, 4), (8, 2, 1, 9),
])
@pytest.mark.parametrize("symmetry", [True, False])
def test_search_parity(n, t, r, k, symmetry):
    args = search_args(n, t, r, k, symmetry)
    assert PY.search(*args) == CY.search(*args)


@needs_ext
def test_search_budget_parity():
    args = search_args(8, 2, 1, 8, budget=50)
    a, b = PY.search(*args), CY.search(*args)
    assert a == b and a[0] == kernels.ABORTED


@needs_ext
@pytest.mark.parametrize("t, r, L", [(1, 1, 4), (3, 1, 12), (4, 3, 15), (5, 5, 10)])
def test_accumulate_parity(t, r, L):
    towers = sorted(enumerate_towers(pattern(Params(t, r)), Window(L, t)))
    offs = ball_offsets(t)
    args = (-L, -L + 2, 2 * L + 1, 2 * L - 3, [s.m for s in towers], [s.n for s in towers],
            [o[0] for o in offs], [o[1] for o in offs], [o[2] for o in offs], t, t - r)
    assert PY.accumulate(*args) == CY.accumulate(*args)


def test_pure_fallback_selected_by_env(monkeypatch):
    monkeypatch.setenv("TRIBROADCAST_PURE", "1")
    assert kernels.load() is PY


def test_search_empty_deficit_is_found():
    args = list(search_args(3, 3, 1, 1))
    args[9] = [0] * args[0]
    assert PY.search(*args)[0] == kernels.FOUND
