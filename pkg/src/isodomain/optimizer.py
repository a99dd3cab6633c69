"""Stochastic local search over offset maps, and the De Giorgi decay recursion."""
import math
import numpy as np

from . import kernels
from ._accel import backend_name
from .errors import InvalidArgument
from .torus import PixelDomainMap, partition_report, periodic_energy

GREEDY_TOL = 1e-12


def make_rng(seed):
    """PCG64 stream; identical draws on every platform for a given seed."""
    return np.random.Generator(np.random.PCG64(int(seed)))


def init_rng(seed):
    """Separate PCG64 stream for drawing a random initial map, independent of the search stream."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed), spawn_key=(1,))))


def _dense_table(dmap, cfg):
    tab = cfg.table()
    tab.ensure((2 * dmap.window + 1) * dmap.n)
    return tab.val


def _scale(dmap, cfg):
    # energy = const - n^(s-2) * sum over ordered pairs, so one cell enters twice
    return -2.0 * float(dmap.n) ** (cfg.s - 2.0)


def incremental_delta(dmap, cell, new_offset, cfg):
    """Energy change when cell (col, row) takes the offset ``new_offset``.

    Only the pair terms involving the moved cell are summed.
    """
    col, row = int(cell[0]), int(cell[1])
    n, w = dmap.n, dmap.window
    if not (0 <= col < n and 0 <= row < n):
        raise InvalidArgument(f"cell {cell} outside the {n} x {n} grid")
    zx, zy = int(new_offset[0]), int(new_offset[1])
    if abs(zx) > w or abs(zy) > w:
        raise InvalidArgument(f"offset {new_offset} outside the window [-{w}, {w}]")
    dx = zx - int(dmap.zx[row, col])
    dy = zy - int(dmap.zy[row, col])
    if dx == 0 and dy == 0:
        return 0.0
    px, py = dmap.positions()
    idx = row * n + col
    table = _dense_table(dmap, cfg)
    raw = kernels.move_delta(px, py, idx, px[idx] + n * dx, py[idx] + n * dy, table)
    return _scale(dmap, cfg) * raw


def apply_move(dmap, cell, new_offset):
    zx = dmap.zx.copy()
    zy = dmap.zy.copy()
    zx[cell[1], cell[0]] = new_offset[0]
    zy[cell[1], cell[0]] = new_offset[1]
    return PixelDomainMap(dmap.n, dmap.window, zx, zy)


def _greedy(px, py, zx, zy, n, window, table, scale):
    """Apply improving single-cell moves until none is left; returns (moves, total delta)."""
    moves = 0
    total = 0.0
    while True:
        improved = False
        for c in range(n * n):
            for d in range(4):
                tx, ty = kernels._proposal(n, window, zx, zy, c, d)
                if (tx == zx[c] and ty == zy[c]) or abs(tx) > window or abs(ty) > window:
                    continue
                nx = px[c] + n * (tx - zx[c])
                ny = py[c] + n * (ty - zy[c])
                delta = scale * kernels.move_delta(px, py, c, nx, ny, table)
                if delta < -GREEDY_TOL:
                    px[c], py[c], zx[c], zy[c] = nx, ny, tx, ty
                    moves += 1
                    total += delta
                    improved = True
        if not improved:
            return moves, total


def restart_rng(seed, k):
    """Stream for restart k; restart 0 is make_rng(seed)."""
    if k == 0:
        return make_rng(seed)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed), spawn_key=(0, k))))


def _anneal(px, py, zx, zy, n, window, table, scale, e0, t0, sched, rng):
    energy = e0
    best = (energy, px.copy(), py.copy(), zx.copy(), zy.copy())
    trajectory = [energy]
    accepted = 0
    delta_sum = 0.0
    m = n * n
    for k in range(int(sched.sweeps)):
        temp = t0 * sched.decay ** k
        cells = rng.integers(0, m, size=m)
        dirs = rng.integers(0, 4, size=m)
        us = rng.random(m)
        acc, tot = kernels.sweep(px, py, zx, zy, n, window, table, scale, temp, cells, dirs, us)
        accepted += acc
        delta_sum += tot
        energy += tot
        trajectory.append(energy)
        if energy < best[0]:
            best = (energy, px.copy(), py.copy(), zx.copy(), zy.copy())
    restored = best[0] < energy
    if restored:
        delta_sum += best[0] - energy
        energy, px, py, zx, zy = best
    return {"energy": energy, "state": (px, py, zx, zy), "trajectory": trajectory, "accepted": accepted,
            "delta_sum": delta_sum, "restored": bool(restored)}


def local_search(init, cfg, sched, greedy=True):
    """Metropolis search over single-cell moves, then a greedy polish.

    A move picks a random cell and a random side, and gives the cell the
    offset that attaches it to the translate class of its neighbour across
    that side. Interior cells (all neighbours in D) produce no-op moves, so
    the search effectively runs on boundary cells. ``sched.restarts``
    independent streams start from ``init``; the lowest end state wins.
    Returns (map, report).
    """
    n, window = init.n, init.window
    table = _dense_table(init, cfg)
    scale = _scale(init, cfg)
    e0 = periodic_energy(init, cfg).energy
    t0 = sched.t0 if sched.t0 is not None else 0.5 * e0.value / (n * n)
    px0, py0 = init.positions()
    runs = []
    for k in range(int(sched.restarts)):
        run = _anneal(px0.copy(), py0.copy(), init.zx.ravel().copy(), init.zy.ravel().copy(),
                      n, window, table, scale, e0.value, t0, sched, restart_rng(sched.seed, k))
        runs.append(run)
    pick = min(range(len(runs)), key=lambda k: (runs[k]["energy"], k))
    run = runs[pick]
    energy = run["energy"]
    px, py, zx, zy = run["state"]
    delta_sum = run["delta_sum"]
    greedy_moves = 0
    if greedy:
        greedy_moves, tot = _greedy(px, py, zx, zy, n, window, table, scale)
        delta_sum += tot
        energy += tot
    out = PixelDomainMap(n, window, zx.reshape(n, n), zy.reshape(n, n))
    final = periodic_energy(out, cfg).energy
    drift = (final.value - e0.value) - delta_sum
    extra = {
        "trajectory": run["trajectory"],
        "initial_energy": e0.to_dict(),
        "tracked_energy": energy,
        "bookkeeping_drift": drift,
        "accepted_moves": run["accepted"],
        "greedy_moves": greedy_moves,
        "restored_best": run["restored"],
        "restart_energies": [r["energy"] for r in runs],
        "chosen_restart": pick,
        "t0": t0,
        "backend": backend_name(),
    }
    config = {"s": cfg.s, "truncation": cfg.truncation_radius, "depth": cfg.depth,
              "diagonal_mode": cfg.diagonal_mode, "grid": n, "window": window,
              "t0": sched.t0, "decay": sched.decay, "sweeps": int(sched.sweeps),
              "restarts": int(sched.restarts), "seed": int(sched.seed)}
    return out, partition_report(out, cfg, config=config, extra=extra)


# ----------------------------------------------------------------- De Giorgi

def degiorgi_threshold(alpha, M, L):
    return M ** (-1.0 / alpha) * L ** (-(1.0 - alpha) / alpha ** 2)


def degiorgi_iteration(alpha, M, L, u0, k_max=200):
    """Run u_{k+1} = (L^k M u_k)^(1/(1-alpha)) in log2 space.

    With l_k = log2 u_k the recursion is affine. Its particular solution
    starts at the threshold and drops by log2(L)/alpha per step; any other
    start departs from it by e0 * (1/(1-alpha))^k. The threshold is an
    unstable fixed point of the deviation, so e0 is evaluated once and
    snapped to zero when it is pure round-off, which keeps u0 = threshold on
    the convergent branch.
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidArgument(f"alpha must lie in (0, 1), got {alpha}")
    if not M > 0.0:
        raise InvalidArgument(f"M must be > 0, got {M}")
    if not L > 1.0:
        raise InvalidArgument(f"L must be > 1, got {L}")
    if not u0 >= 0.0:
        raise InvalidArgument(f"u0 must be >= 0, got {u0}")
    thr = degiorgi_threshold(alpha, M, L)
    below = u0 <= thr * (1.0 + 4e-16)
    if u0 == 0.0:
        return {"converges": True, "trajectory": [0.0], "threshold": thr, "at_or_below_threshold": True,
                "steps": 0}
    lthr = -math.log2(M) / alpha - (1.0 - alpha) * math.log2(L) / alpha ** 2
    e0 = math.log2(u0) - lthr
    if abs(e0) <= 16 * math.ulp(max(abs(lthr), 1.0)):
        e0 = 0.0
    c = 1.0 / (1.0 - alpha)
    drop = math.log2(L) / alpha
    traj = []
    converges = False
    for k in range(k_max + 1):
        try:
            dev = e0 * c ** k if e0 else 0.0
        except OverflowError:
            dev = math.copysign(math.inf, e0)
        lk = lthr - k * drop + dev
        if lk > 1024:
            traj.append(math.inf)
            break
        traj.append(2.0 ** lk if lk > -1074 else 0.0)
        if lk < math.log2(1e-30):
            converges = True
            break
    return {"converges": converges, "trajectory": traj, "threshold": thr,
            "at_or_below_threshold": bool(below), "steps": len(traj) - 1}


def ball_competitor(dmap, rng, r):
    """Random map that agrees with ``dmap`` outside a ball of radius r (on the unit torus).

    Returns (competitor, number of changed cells).
    """
    n, w = dmap.n, dmap.window
    centre = rng.random(2)
    rows, cols = np.indices((n, n))
    dx = (cols + 0.5) / n - centre[0]
    dy = (rows + 0.5) / n - centre[1]
    dx -= np.rint(dx)
    dy -= np.rint(dy)
    inside = np.hypot(dx, dy) < r
    zx = dmap.zx.copy()
    zy = dmap.zy.copy()
    k = int(inside.sum())
    zx[inside] = rng.integers(-w, w + 1, size=k)
    zy[inside] = rng.integers(-w, w + 1, size=k)
    changed = int(np.count_nonzero((zx != dmap.zx) | (zy != dmap.zy)))
    return PixelDomainMap(n, w, zx, zy), changed


def lambda_minimality_check(dmap, cfg, r=0.25, trials=200, seed=0):
    """Compare D with ball-localized competitors D': Per(D) <= Per(D') + Lambda |D sym.diff. D'|.

    A changed cell leaves D at one place and enters at another, so it adds
    2 h^2 to the symmetric difference. Violations beyond the error brackets
    are counted as hard violations.
    """
    from .fractional.perimeter import lambda_constant

    lam = lambda_constant(cfg.s, r)
    base = periodic_energy(dmap, cfg).energy
    rng = make_rng(seed)
    h2 = 1.0 / dmap.n ** 2
    worst = -np.inf
    hard = 0
    gains = []
    for _ in range(trials):
        comp, changed = ball_competitor(dmap, rng, r)
        e = periodic_energy(comp, cfg).energy
        slack = e.value + lam * 2.0 * changed * h2 - base.value
        margin = slack + base.radius + e.radius
        worst = max(worst, -slack)
        gains.append(base.value - e.value)
        if margin < 0:
            hard += 1
    return {"lambda": lam, "trials": trials, "hard_violations": hard,
            "max_excess": float(worst), "max_gain": float(max(gains))}
