import json

import pytest

from tribroadcast import cli
from tribroadcast.broadcast import Params, dominates
from tribroadcast.lattice import matchstick


def run(capsys, *argv):
    try:
        status = cli.main(list(argv))
    except SystemExit as exc:
        status = exc.code
    out, err = capsys.readouterr()
    return status, out, err


def test_verify_pattern_passes(capsys):
    status, out, _ = run(capsys, "verify", "--t", "3", "--r", "2", "--window", "18")
    assert status == 0 and json.loads(out)["efficient"] is True


def test_verify_fails_on_broken_towers(capsys, tmp_path):
    _, out, _ = run(capsys, "pattern", "--t", "3", "--r", "1", "--window", "12")
    doc = json.loads(out)
    doc["towers"] = [s for s in doc["towers"] if s != [0, 0]]
    path = tmp_path / "towers.json"
    path.write_text(json.dumps(doc))
    status, out, _ = run(capsys, "verify", "--t", "3", "--r", "1", "--window", "9", "--towers", str(path))
    report = json.loads(out)
    assert status == 1 and not report["efficient"] and report["violations"]


def test_solve_json(capsys):
    status, out, _ = run(capsys, "solve", "--n", "3", "--t", "3", "--r", "1")
    doc = json.loads(out)
    assert status == 0 and doc["value"] == 1 and doc["status"] == "optimal"
    assert {"witness", "nodes", "lower_bound"} <= set(doc)


def test_solve_feasibility(capsys):
    _, out, _ = run(capsys, "solve", "--n", "9", "--t", "3", "--r", "1", "--k", "4")
    assert json.loads(out)["status"] == "infeasible"


def test_t_below_r_is_usage_error(capsys):
    status, _, err = run(capsys, "pattern", "--t", "9", "--r", "10")
    assert status == 2 and "t must be ≥ r" in err and "--t" in err


@pytest.mark.parametrize("argv, flag", [
    (["solve", "--n", "3", "--t", "3", "--r", "1", "--format", "svg"], "--format"),
    (["solve", "--n", "x", "--t", "3", "--r", "1"], "--n"),
    (["bounds", "--t", "3", "--r", "0", "--n", "4"], "--r"),
    (["verify", "--t", "3", "--r", "1", "--margin", "2"], "--margin"),
    (["render", "--t", "3", "--r", "1"], "--n"),
    (["render", "--t", "3", "--r", "1", "--n", "3", "--window", "4"], "--window"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    status, out, err = run(capsys, *argv)
    assert status == 2 and flag in err and out == ""


def test_pattern_json_schema(capsys):
    _, out, _ = run(capsys, "pattern", "--t", "2", "--r", "1", "--window", "3")
    doc = json.loads(out)
    assert doc["basis"] == [[3, 2], [1, 3]]
    keys = [(n, m) for m, n in doc["towers"]]
    assert keys == sorted(keys) and [0, 0] in doc["towers"]
    _, out, _ = run(capsys, "pattern", "--t", "2", "--r", "1", "--window", "3", "--mirror")
    assert json.loads(out)["basis"] == [[2, 3], [3, 1]]


def test_pattern_svg_and_ascii(capsys):
    _, svg, _ = run(capsys, "pattern", "--t", "3", "--r", "1", "--window", "6", "--format", "svg")
    assert svg.startswith("<?xml") and "<svg" in svg
    _, text, _ = run(capsys, "pattern", "--t", "3", "--r", "1", "--window", "6", "--format", "ascii")
    assert "@" in text


def test_bounds_json(capsys):
    _, out, _ = run(capsys, "bounds", "--t", "2", "--r", "1", "--n", "7")
    doc = json.loads(out)
    assert doc["upper"] <= 9 and doc["exact"] is None
    assert dominates(matchstick(7), [tuple(p) for p in doc["witness"]], Params(2, 1))


def test_render_to_file(capsys, tmp_path):
    path = tmp_path / "t5.svg"
    status, out, _ = run(capsys, "render", "--t", "3", "--r", "1", "--n", "5", "--reach",
                         "--boundary", "--reception", "--out", str(path))
    assert status == 0 and out == ""
    assert path.read_text().startswith("<?xml")


def test_render_window_ascii(capsys):
    status, out, _ = run(capsys, "render", "--t", "2", "--r", "2", "--window", "4", "--format", "ascii",
                         "--reception")
    assert status == 0
    # efficient (t,t) pattern: every core vertex receives exactly t; "o" marks margin towers
    assert set(out.replace("*", "").split()) - {"o"} == {"2"}


def test_selftest_passes(capsys):
    status, out, _ = run(capsys, "selftest")
    assert status == 0 and json.loads(out)["ok"]


def test_selftest_catches_corrupted_metric():
    def corrupted(u, v):
        return max(abs(v[0] - u[0]), abs(v[1] - u[1]))

    report = cli.selftest(distance=corrupted, max_t=2)
    failed = [c for c in report["checks"] if not c["ok"]]
    assert not report["ok"]
    assert [c["check"] for c in failed] == ["distance formula vs BFS, |m|,|n| <= 10"]


def test_selftest_sweep_includes_tt():
    report = cli.selftest(max_t=3)
    assert report["checks"][2]["check"] == "pattern efficiency r <= t <= 3" and report["ok"]
