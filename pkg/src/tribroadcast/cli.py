"""Command-line entry point: ``tribroadcast <verb> [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, solver
from .broadcast import Params, efficiency_violations, sorted_points, towers_of
from .lattice import Window, ball, bfs_distances, check_metric_against_bfs, ball_size, matchstick
from .patterns import enumerate_towers, mirror_pattern, pattern
from .render import RenderSpec, render_ascii, render_svg

FORMATS = {
    "pattern": ("json", "svg", "ascii"),
    "verify": ("json",),
    "solve": ("json",),
    "bounds": ("json",),
    "render": ("svg", "ascii"),
    "selftest": ("json",),
}


class UsageError(Exception):
    pass


def _positive(flag: str):
    def conv(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} must be an integer, got {text!r}")
        if value < 1:
            raise argparse.ArgumentTypeError(f"{flag} must be ≥ 1")
        return value
    return conv


def _nonneg(flag: str):
    def conv(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} must be an integer, got {text!r}")
        if value < 0:
            raise argparse.ArgumentTypeError(f"{flag} must be ≥ 0")
        return value
    return conv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribroadcast",
        description="(t,r) broadcast domination on the triangular grid",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    def params(p):
        p.add_argument("--t", type=_positive("--t"), required=True, help="transmission strength")
        p.add_argument("--r", type=_positive("--r"), required=True, help="required reception")

    p = sub.add_parser("pattern", help="towers of the efficient pattern in a window")
    params(p)
    p.add_argument("--window", type=_nonneg("--window"), help="core half-width L (default 6t)")
    p.add_argument("--mirror", action="store_true", help="use the mirrored pattern")
    common(p, FORMATS["pattern"], "json")

    p = sub.add_parser("verify", help="check efficiency on a window; exit 1 on a violation")
    params(p)
    p.add_argument("--window", type=_nonneg("--window"), help="core half-width L (default 6t)")
    p.add_argument("--margin", type=_nonneg("--margin"), help="margin around the core (default t)")
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--towers", metavar="FILE", help="JSON tower list to check instead of the pattern")
    common(p, FORMATS["verify"], "json")

    p = sub.add_parser("solve", help="exact γ_{t,r}(T_n), or feasibility at size k")
    p.add_argument("--n", type=_positive("--n"), required=True)
    params(p)
    p.add_argument("--k", type=_nonneg("--k"), help="only decide whether k towers suffice")
    p.add_argument("--budget", type=_positive("--budget"), help="search node budget")
    common(p, FORMATS["solve"], "json")

    p = sub.add_parser("bounds", help="lower and upper bounds with a witness")
    p.add_argument("--n", type=_positive("--n"), required=True)
    params(p)
    common(p, FORMATS["bounds"], "json")

    p = sub.add_parser("render", help="draw T_n or a pattern window")
    params(p)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--n", type=_nonneg("--n"), help="draw T_n")
    where.add_argument("--window", type=_nonneg("--window"), help="draw a pattern window of half-width L")
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--towers", metavar="FILE", help="JSON tower list to draw")
    p.add_argument("--reception", action="store_true", help="show reception values")
    p.add_argument("--reach", action="store_true", help="outline each tower's reach")
    p.add_argument("--boundary", action="store_true", help="outline the region")
    common(p, FORMATS["render"], "svg")

    p = sub.add_parser("selftest", help="metric, ball-size and pattern checks")
    common(p, FORMATS["selftest"], "json")
    return parser


def _params(args) -> Params:
    try:
        return Params(args.t, args.r)
    except ValueError as exc:
        flag = "--r" if "r must" in str(exc) else "--t"
        raise UsageError(f"{flag}: {exc}") from None


def _load_towers(path: str) -> frozenset:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"--towers: cannot read {path}: {exc}") from None
    if isinstance(data, dict):
        data = data.get("towers", data.get("witness"))
    try:
        return towers_of(data)
    except (TypeError, ValueError, IndexError):
        raise UsageError(f"--towers: {path} does not hold a list of [m, n] pairs") from None


def _pattern_of(p: Params, mirror: bool):
    return mirror_pattern(p) if mirror else pattern(p)


def cmd_pattern(args) -> tuple[str, int]:
    p = _params(args)
    L = args.window if args.window is not None else 6 * p.t
    pl = _pattern_of(p, args.mirror)
    towers = enumerate_towers(pl, Window(L))
    if args.format == "json":
        doc = {
            "t": p.t,
            "r": p.r,
            "basis": pl.to_json(),
            "towers": [list(s) for s in sorted_points(towers)],
        }
        return json.dumps(doc) + "\n", 0
    spec = RenderSpec.build(Window(L), towers, p)
    return (render_svg(spec) if args.format == "svg" else render_ascii(spec)), 0


def cmd_verify(args) -> tuple[str, int]:
    p = _params(args)
    L = args.window if args.window is not None else 6 * p.t
    margin = args.margin if args.margin is not None else p.t
    if margin < p.t:
        raise UsageError(f"--margin: must be ≥ t={p.t}")
    window = Window(L, margin)
    if args.towers:
        towers = _load_towers(args.towers)
    else:
        towers = enumerate_towers(_pattern_of(p, args.mirror), window)
    bad = efficiency_violations(towers, p, window, limit=None)
    doc = {
        "t": p.t,
        "r": p.r,
        "window": L,
        "margin": margin,
        "efficient": not bad,
        "violations": [
            {"point": list(v.point), "clause": v.clause, "reception": v.reception, "detail": v.detail}
            for v in bad
        ],
    }
    return json.dumps(doc) + "\n", 0 if not bad else 1


def cmd_solve(args) -> tuple[str, int]:
    p = _params(args)
    res = solver.solve(solver.SolveInstance(args.n, p, k=args.k, budget=args.budget))
    doc = {"n": args.n, "t": p.t, "r": p.r, "k": args.k, **res.to_json()}
    return json.dumps(doc) + "\n", 0


def cmd_bounds(args) -> tuple[str, int]:
    p = _params(args)
    return json.dumps(bounds.report(p, args.n)) + "\n", 0


def cmd_render(args) -> tuple[str, int]:
    p = _params(args)
    if args.n is not None:
        region = matchstick(args.n)
        if args.towers:
            towers = _load_towers(args.towers)
        elif bounds.is_supported(p):
            towers = bounds.witness(p, args.n).towers
        else:
            towers = solver.greedy_incumbent(args.n, p)
    else:
        region = Window(args.window, p.t)
        if args.towers:
            towers = _load_towers(args.towers)
        else:
            towers = enumerate_towers(_pattern_of(p, args.mirror), region)
    spec = RenderSpec.build(region, towers, p, reception_values=args.reception,
                            reach_hexagons=args.reach, boundary=args.boundary)
    return (render_svg(spec) if args.format == "svg" else render_ascii(spec)), 0


def selftest(distance=None, max_t: int = 5) -> dict:
    """Distance oracle, ball sizes and the pattern sweep for r <= t <= ``max_t``."""
    checks = []
    bad = check_metric_against_bfs(10, distance)
    checks.append({
        "check": "distance formula vs BFS, |m|,|n| <= 10",
        "ok": not bad,
        "failures": [f"({m},{n}): BFS {e}, formula {g}" for m, n, e, g in bad[:10]],
    })
    failures = []
    for t in range(1, 9):
        seen = bfs_distances((0, 0), t - 1)
        if not (len(seen) == len(ball((0, 0), t)) == ball_size(t)):
            failures.append(f"t={t}: BFS {len(seen)}, ball {len(ball((0, 0), t))}, formula {ball_size(t)}")
    checks.append({"check": "ball sizes 1 <= t <= 8", "ok": not failures, "failures": failures})
    failures = []
    for t in range(1, max_t + 1):
        for r in range(1, t + 1):
            p = Params(t, r)
            window = Window(6 * t, t)
            for pl in (pattern(p), mirror_pattern(p)):
                found = efficiency_violations(enumerate_towers(pl, window), p, window)
                if found:
                    v = found[0]
                    kind = "mirror" if pl.mirrored else "pattern"
                    failures.append(f"{kind} ({t},{r}) at {tuple(v.point)}: {v.detail}")
    checks.append({"check": f"pattern efficiency r <= t <= {max_t}", "ok": not failures, "failures": failures})
    return {"ok": all(c["ok"] for c in checks), "checks": checks}


def cmd_selftest(args) -> tuple[str, int]:
    doc = selftest()
    return json.dumps(doc, indent=2) + "\n", 0 if doc["ok"] else 1


COMMANDS = {
    "pattern": cmd_pattern,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "bounds": cmd_bounds,
    "render": cmd_render,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = COMMANDS[args.verb](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
