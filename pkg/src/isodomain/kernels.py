"""Hot loops, each in a numba flavour and a pure-numpy flavour.

The public names at the bottom dispatch on ``_accel.USE_NUMBA``. Both
flavours are importable side by side (the numba ones only when numba is
enabled) so the benchmark and the tests can compare them.
"""
import numpy as np
from scipy.signal import fftconvolve

from ._accel import USE_NUMBA, njit

# torus neighbour directions: +x, -x, +y, -y
DIRS = np.array([[1, 0], [-1, 0], [0, 1], [0, -1]], dtype=np.int64)


# ---------------------------------------------------------------- class counts

def class_counts_numpy(a, b, radius):
    """Integer counts of pair offsets b - a, folded onto canonical classes.

    Entry [i, j] (i >= j) counts pairs whose offset (dx, dy) has
    max(|dx|, |dy|) = i and min(|dx|, |dy|) = j. Uses an FFT correlation of
    the two occupancy bitmaps; counts are exact after rounding.
    """
    a = np.asarray(a, dtype=np.int64).reshape(-1, 2)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 2)
    out = np.zeros((radius + 1, radius + 1), dtype=np.int64)
    if len(a) == 0 or len(b) == 0:
        return out
    lo = np.minimum(a.min(axis=0), b.min(axis=0))
    a0 = a - lo
    b0 = b - lo
    shape = tuple(np.maximum(a0.max(axis=0), b0.max(axis=0)) + 1)
    A = np.zeros(shape)
    B = np.zeros(shape)
    np.add.at(A, (a0[:, 0], a0[:, 1]), 1.0)
    np.add.at(B, (b0[:, 0], b0[:, 1]), 1.0)
    corr = np.rint(fftconvolve(B, A[::-1, ::-1], mode="full")).astype(np.int64)
    dx = np.arange(corr.shape[0]) - (shape[0] - 1)
    dy = np.arange(corr.shape[1]) - (shape[1] - 1)
    DX, DY = np.meshgrid(np.abs(dx), np.abs(dy), indexing="ij")
    nz = corr != 0
    hi = np.maximum(DX, DY)[nz]
    lo_ = np.minimum(DX, DY)[nz]
    if hi.size and hi.max() > radius:
        raise ValueError("pair offset exceeds table radius")
    np.add.at(out, (hi, lo_), corr[nz])
    return out


@njit
def _class_counts_loop(a, b, radius):
    out = np.zeros((radius + 1, radius + 1), dtype=np.int64)
    for p in range(a.shape[0]):
        ax = a[p, 0]
        ay = a[p, 1]
        for q in range(b.shape[0]):
            dx = abs(b[q, 0] - ax)
            dy = abs(b[q, 1] - ay)
            if dx >= dy:
                out[dx, dy] += 1
            else:
                out[dy, dx] += 1
    return out


def class_counts_numba(a, b, radius):
    a = np.ascontiguousarray(np.asarray(a, dtype=np.int64).reshape(-1, 2))
    b = np.ascontiguousarray(np.asarray(b, dtype=np.int64).reshape(-1, 2))
    if len(a) and len(b):
        span = max(np.ptp(np.concatenate([a[:, 0], b[:, 0]])),
                   np.ptp(np.concatenate([a[:, 1], b[:, 1]])))
        if span > radius:
            raise ValueError("pair offset exceeds table radius")
    return _class_counts_loop(a, b, radius)


# ------------------------------------------------------------------ move delta

def move_delta_numpy(px, py, idx, nx, ny, table):
    """sum over other cells of T(new - p) - T(old - p); T is the dense table."""
    ox, oy = px[idx], py[idx]
    dn = table[np.abs(px - nx), np.abs(py - ny)]
    do = table[np.abs(px - ox), np.abs(py - oy)]
    dn[idx] = 0.0
    do[idx] = 0.0
    return float(np.sum(dn) - np.sum(do))


@njit
def _move_delta_loop(px, py, idx, nx, ny, table):
    ox = px[idx]
    oy = py[idx]
    acc = 0.0
    for c in range(px.shape[0]):
        if c == idx:
            continue
        acc += table[abs(px[c] - nx), abs(py[c] - ny)] - table[abs(px[c] - ox), abs(py[c] - oy)]
    return acc


def move_delta_numba(px, py, idx, nx, ny, table):
    return float(_move_delta_loop(px, py, idx, nx, ny, table))


# ---------------------------------------------------------------- anneal sweep

def _proposal(n, window, zx, zy, cell, d):
    """Offset that attaches ``cell`` to its torus neighbour in direction d."""
    col = cell % n
    row = cell // n
    ncol = col + DIRS[d, 0]
    nrow = row + DIRS[d, 1]
    wx = 0
    wy = 0
    if ncol == n:
        ncol, wx = 0, 1
    elif ncol < 0:
        ncol, wx = n - 1, -1
    if nrow == n:
        nrow, wy = 0, 1
    elif nrow < 0:
        nrow, wy = n - 1, -1
    nb = nrow * n + ncol
    tx = zx[nb] - wx
    ty = zy[nb] - wy
    return tx, ty


def sweep_numpy(px, py, zx, zy, n, window, table, scale, temp, cells, dirs, us):
    """One Metropolis sweep over pre-drawn proposals; mutates state in place.

    Returns (accepted, sum of accepted energy deltas).
    """
    accepted = 0
    total = 0.0
    for k in range(cells.shape[0]):
        c = int(cells[k])
        tx, ty = _proposal(n, window, zx, zy, c, int(dirs[k]))
        if (tx == zx[c] and ty == zy[c]) or abs(tx) > window or abs(ty) > window:
            continue
        nx = px[c] + n * (tx - zx[c])
        ny = py[c] + n * (ty - zy[c])
        delta = scale * move_delta_numpy(px, py, c, nx, ny, table)
        if delta < 0.0 or (temp > 0.0 and us[k] < np.exp(-delta / temp)):
            px[c], py[c], zx[c], zy[c] = nx, ny, tx, ty
            accepted += 1
            total += delta
    return accepted, total


@njit
def _sweep_loop(px, py, zx, zy, n, window, table, scale, temp, cells, dirs, us):
    accepted = 0
    total = 0.0
    for k in range(cells.shape[0]):
        c = cells[k]
        d = dirs[k]
        col = c % n
        row = c // n
        ncol = col + DIRS[d, 0]
        nrow = row + DIRS[d, 1]
        wx = 0
        wy = 0
        if ncol == n:
            ncol = 0
            wx = 1
        elif ncol < 0:
            ncol = n - 1
            wx = -1
        if nrow == n:
            nrow = 0
            wy = 1
        elif nrow < 0:
            nrow = n - 1
            wy = -1
        nb = nrow * n + ncol
        tx = zx[nb] - wx
        ty = zy[nb] - wy
        if (tx == zx[c] and ty == zy[c]) or abs(tx) > window or abs(ty) > window:
            continue
        nx = px[c] + n * (tx - zx[c])
        ny = py[c] + n * (ty - zy[c])
        delta = scale * _move_delta_loop(px, py, c, nx, ny, table)
        if delta < 0.0 or (temp > 0.0 and us[k] < np.exp(-delta / temp)):
            px[c] = nx
            py[c] = ny
            zx[c] = tx
            zy[c] = ty
            accepted += 1
            total += delta
    return accepted, total


def sweep_numba(px, py, zx, zy, n, window, table, scale, temp, cells, dirs, us):
    acc, tot = _sweep_loop(px, py, zx, zy, n, window, table, scale, temp,
                           cells.astype(np.int64), dirs.astype(np.int64), us)
    return int(acc), float(tot)


if USE_NUMBA:
    class_counts = class_counts_numba
    move_delta = move_delta_numba
    sweep = sweep_numba
else:
    class_counts = class_counts_numpy
    move_delta = move_delta_numpy
    sweep = sweep_numpy
