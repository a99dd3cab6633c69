"""Time the numba and pure-numpy kernels side by side.

    python3 benchmarks/bench_kernels.py [--grid 16] [--repeat 5]

Each kernel is run once to warm up (JIT compile for numba), then timed as
the best of ``--repeat`` runs. Outputs of the two flavours are compared so a
speedup is never reported for a kernel that disagrees.
"""
import argparse
import time

import numpy as np

from isodomain import kernels
from isodomain._accel import USE_NUMBA
from isodomain.fractional.perimeter import FractionalConfig
from isodomain.optimizer import _dense_table, _scale, make_rng
from isodomain.torus import PixelDomainMap


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases(n, window, s):
    cfg = FractionalConfig(s=s)
    rng = make_rng(1)
    dmap = PixelDomainMap.random(n, window, rng)
    table = _dense_table(dmap, cfg)
    scale = _scale(dmap, cfg)
    px, py = dmap.positions()
    radius = (2 * window + 1) * n
    m = n * n
    cells = rng.integers(0, m, size=m)
    dirs = rng.integers(0, 4, size=m)
    us = rng.random(m)

    def counts(impl):
        return lambda: impl(px, py, radius)

    zx, zy = dmap.zx.ravel(), dmap.zy.ravel()
    picks = range(0, m, max(1, m // 64))

    def delta(impl):
        # move each sampled cell to offset (0, 0), which stays inside the window
        return lambda: [impl(px, py, i, px[i] - n * zx[i], py[i] - n * zy[i], table) for i in picks]

    def sweep(impl):
        def run():
            state = (px.copy(), py.copy(), dmap.zx.ravel().copy(), dmap.zy.ravel().copy())
            return impl(*state, n, window, table, scale, 0.05, cells, dirs, us)
        return run

    return [
        ("class_counts", counts(kernels.class_counts_numpy), counts(getattr(kernels, "class_counts_numba", None))),
        ("move_delta x64", delta(kernels.move_delta_numpy), delta(getattr(kernels, "move_delta_numba", None))),
        ("sweep", sweep(kernels.sweep_numpy), sweep(getattr(kernels, "sweep_numba", None))),
    ]


def agree(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    if isinstance(a, (list, tuple)):
        return all(np.isclose(x, y, rtol=1e-12, atol=1e-12) for x, y in zip(np.ravel(a), np.ravel(b)))
    return np.isclose(a, b, rtol=1e-12, atol=1e-12)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--grid", type=int, default=16)
    ap.add_argument("--window", type=int, default=1)
    ap.add_argument("--s", type=float, default=0.5)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not USE_NUMBA:
        print("numba disabled (PERIM_NUMBA=0); timing the numpy flavour only")
    print(f"grid {args.grid}, window {args.window}, s {args.s}")
    print(f"{'kernel':<16}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}  agree")
    for name, fn_np, fn_nb in cases(args.grid, args.window, args.s):
        t_np = best_of(fn_np, args.repeat)
        if not USE_NUMBA:
            print(f"{name:<16}{1e3 * t_np:>12.3f}{'-':>12}{'-':>10}  -")
            continue
        t_nb = best_of(fn_nb, args.repeat)
        same = agree(fn_np(), fn_nb())
        print(f"{name:<16}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>10.1f}  {'yes' if same else 'NO'}")


if __name__ == "__main__":
    main()
