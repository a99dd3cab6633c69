"""Command-line front end.

Exit codes: 0 success, 1 a checked assertion failed, 2 usage or config error.
Heavy modules are imported inside the handlers so ``tile`` starts fast.
"""
import argparse
import json
import os
import sys

from .errors import InvalidArgument

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

NORM_SHORTHANDS = {
    "euclidean": "norm.kind = euclidean\n",
    "l1": "norm.kind = crystalline\nnorm.directions = 1,0; 0,1\n",
    "linf": "norm.kind = crystalline\nnorm.directions = 1,1,0.5; 1,-1,0.5\n",
}


class UsageError(Exception):
    pass


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def load_config(path):
    from .config import parse_config

    return parse_config(read_text(path))


def resolve_norm(value):
    """``--norm`` takes a config file, a shorthand name, or ``pnorm:<p>``."""
    from .config import parse_config

    if value in NORM_SHORTHANDS:
        return parse_config(NORM_SHORTHANDS[value]).norm
    if value.startswith("pnorm:"):
        return parse_config(f"norm.kind = pnorm\nnorm.p = {value[6:]}\n").norm
    if not os.path.exists(value):
        raise UsageError(f"--norm: no such file and not a shorthand "
                         f"({', '.join(NORM_SHORTHANDS)}, pnorm:<p>): {value}")
    return load_config(value).norm


# ------------------------------------------------------------------- commands

def cmd_tile(args):
    from .config import norm_to_dict
    from .tiling import best_fundamental_polygon, render_tiling, search_to_dict

    phi = resolve_norm(args.norm)
    search = best_fundamental_polygon(phi, bound=args.bound, seed=0)
    record = search_to_dict(search, norm_to_dict(phi))
    write_text(args.out, dumps(record))
    if args.svg:
        write_text(args.svg, render_tiling(search.best))
    return EXIT_OK if search.cutoff_ok else EXIT_FAIL


def _square_energy(n, window, cfg):
    from .torus import PixelDomainMap, periodic_frac_perimeter

    return periodic_frac_perimeter(PixelDomainMap.constant(n, window), cfg)


def cmd_frac_optimize(args):
    from dataclasses import replace

    from .config import RunConfig
    from .optimizer import init_rng, lambda_minimality_check, local_search
    from .schedule import AnnealSchedule
    from .torus import PixelDomainMap, read_map, write_map

    rc = load_config(args.config) if args.config else RunConfig(command="frac-optimize")
    frac = rc.frac if args.s is None else replace(rc.frac, s=args.s)
    grid = rc.grid if args.grid is None else args.grid
    window = rc.window if args.window is None else args.window
    sched = AnnealSchedule(
        t0=rc.anneal.t0,
        decay=rc.anneal.decay,
        sweeps=rc.anneal.sweeps if args.steps is None else args.steps,
        seed=rc.anneal.seed if args.seed is None else args.seed,
        restarts=rc.anneal.restarts if args.restarts is None else args.restarts,
    )
    if grid < 1:
        raise InvalidArgument(f"--grid must be >= 1, got {grid}")
    if window < 0:
        raise InvalidArgument(f"--window must be >= 0, got {window}")
    if args.init:
        try:
            init = read_map(args.init)
        except OSError as exc:
            raise UsageError(f"cannot read {args.init}: {exc.strerror}") from exc
    else:
        init = PixelDomainMap.random(grid, window, init_rng(sched.seed))
    out_map, report = local_search(init, frac, sched)
    record = report.to_dict()
    record["map"] = out_map.to_dict()
    square = _square_energy(out_map.n, out_map.window, frac)
    record["square_energy"] = square.to_dict()
    drift_tol = 1e-9 * max(1.0, abs(square.value))
    checks = {
        "not_worse_than_start": report.energy.value <= report.extra["initial_energy"]["value"] + drift_tol,
        "bookkeeping": abs(report.extra["bookkeeping_drift"]) <= drift_tol,
        "not_worse_than_square": report.energy.value <= square.value + report.energy.radius + square.radius,
    }
    if args.lambda_trials:
        lam = lambda_minimality_check(out_map, frac, r=args.lambda_radius, trials=args.lambda_trials,
                                      seed=sched.seed)
        record["lambda_check"] = lam
        checks["lambda_minimal"] = lam["hard_violations"] == 0
    record["checks"] = checks
    record["passed"] = all(checks.values())
    write_text(args.out, dumps(record))
    if args.map_out:
        write_map(args.map_out, out_map)
    if args.svg:
        write_text(args.svg, render_map(out_map, title=f"energy {report.energy.value:.10f}"))
    # the square comparison is informative only: a short run may stop above it
    hard = ("not_worse_than_start", "bookkeeping", "lambda_minimal")
    return EXIT_OK if all(checks[k] for k in hard if k in checks) else EXIT_FAIL


def cmd_verify(args):
    from .verify import run_verify

    try:
        ok, report = run_verify(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    text = dumps(report)
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)
    if args.verbose or not ok:
        for name, checks in report["suites"].items():
            for c in checks:
                if args.verbose or not c["passed"]:
                    flag = "PASS" if c["passed"] else "FAIL"
                    print(f"{flag} {name}.{c['name']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def render_map(dmap, title="", reps=3):
    """SVG of the lifted domain and its translates over a reps x reps block of unit cells."""
    from .svg import pixels_svg

    n = dmap.n
    px, py = dmap.positions()
    labels = {}
    lo = -(reps // 2) * n
    hi = lo + reps * n
    for gx in range(-reps - dmap.window, reps + dmap.window + 1):
        for gy in range(-reps - dmap.window, reps + dmap.window + 1):
            cx = px + gx * n
            cy = py + gy * n
            keep = (cx >= lo) & (cx < hi) & (cy >= lo) & (cy < hi)
            for x, y in zip(cx[keep].tolist(), cy[keep].tolist()):
                labels[(x, y)] = (gx, gy)
    return pixels_svg(labels, n, title=title)


def cmd_plot(args):
    from .tiling import HexagonDomain, TilingSolution, render_tiling
    from .torus import PixelDomainMap

    try:
        data = json.loads(read_text(args.input))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.input}: not JSON ({exc.msg} at line {exc.lineno})") from exc
    if isinstance(data, dict) and "best" in data:
        b = data["best"]
        sol = TilingSolution(HexagonDomain(tuple(b["t1"]), tuple(b["t2"]), tuple(b["b"])),
                             b["perimeter"], b["is_parallelogram"], b.get("basis_rank", 0))
        svg = render_tiling(sol)
    elif isinstance(data, dict) and "map" in data:
        dmap = PixelDomainMap.from_dict(data["map"])
        svg = render_map(dmap, title=f"energy {data['energy']['value']:.10f}")
    else:
        raise UsageError(f"{args.input}: expected output of 'tile' or 'frac-optimize'")
    write_text(args.svg, svg)
    return EXIT_OK


# --------------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="isodomain", description="Isoperimetric fundamental domains for Z^2.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tile", help="optimal polygonal fundamental domain for a local norm")
    t.add_argument("--norm", required=True, help="config file, or one of euclidean, l1, linf, pnorm:<p>")
    t.add_argument("--bound", type=int, default=3)
    t.add_argument("--out", required=True)
    t.add_argument("--svg")
    t.set_defaults(func=cmd_tile)

    f = sub.add_parser("frac-optimize", help="local search for a fractional periodic partition")
    f.add_argument("--config", help="config file; explicit flags override it")
    f.add_argument("--s", type=float)
    f.add_argument("--grid", type=int)
    f.add_argument("--window", type=int)
    f.add_argument("--seed", type=int)
    f.add_argument("--steps", type=int, help="annealing sweeps")
    f.add_argument("--restarts", type=int, help="independent annealing streams; the best is kept")
    f.add_argument("--init", help="initial map file (default: random map from the seed)")
    f.add_argument("--lambda-trials", type=int, default=0)
    f.add_argument("--lambda-radius", type=float, default=0.25)
    f.add_argument("--out", required=True)
    f.add_argument("--map-out")
    f.add_argument("--svg")
    f.set_defaults(func=cmd_frac_optimize)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--out")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("plot", help="SVG from a tile or frac-optimize JSON record")
    g.add_argument("--in", dest="input", required=True)
    g.add_argument("--svg", required=True)
    g.set_defaults(func=cmd_plot)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "bound", None) is not None and args.bound < 1:
        parser.error(f"--bound must be >= 1, got {args.bound}")
    try:
        return args.func(args)
    except (UsageError, InvalidArgument) as exc:
        print(f"isodomain {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
