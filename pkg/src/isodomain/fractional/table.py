"""Dense, symmetric lookup tables of unit cell-pair integrals."""
import math
import threading

import numpy as np

from ..interval import Interval
from . import quadrature as quad

MODES = ("subdivide", "analytic-corner")
_TAIL_RADIUS = 8
# rounding of subdivided sums (up to 4^depth Gauss blocks) reaches a few 1e-14 relative
ROUND_REL = 1e-13

_cache = {}
_lock = threading.Lock()


def _multiplicity(i, j):
    if j == 0 or i == j:
        return 4
    return 8


class PairTable:
    """I(m) for integer offsets, stored by canonical class (max|m|, min|m|).

    ``val[i, j] == val[j, i]`` holds exactly, so every dihedral image of an
    offset reads the same float. ``val[0, 0]`` is +inf (self-interaction).
    """

    def __init__(self, s, mode="subdivide", depth=3):
        if not 0.0 < s < 1.0:
            raise ValueError(f"s must lie in (0, 1), got {s}")
        if mode not in MODES:
            raise ValueError(f"diagonal_mode must be one of {MODES}, got {mode!r}")
        self.s = float(s)
        self.mode = mode
        self.depth = int(depth)
        self.radius = -1
        self.val = np.zeros((0, 0))
        self.err = np.zeros((0, 0))
        self._unit = None
        self.ensure(_TAIL_RADIUS)

    def _near(self, i, j):
        if self.mode == "analytic-corner":
            v = quad.pair_polar(i, j, self.s)
            v2 = quad.pair_polar(i, j, self.s, nodes=2 * quad._POLAR_NODES)
            return v, abs(v - v2) + ROUND_REL * abs(v)
        v, e = quad.pair_subdivide(i, j, self.s, self.depth)
        return v, e + ROUND_REL * abs(v)

    def ensure(self, radius):
        radius = int(radius)
        if radius <= self.radius:
            return
        new = max(radius, 2 * self.radius)
        val = np.empty((new + 1, new + 1))
        err = np.zeros((new + 1, new + 1))
        old = self.radius
        if old >= 0:
            val[: old + 1, : old + 1] = self.val
            err[: old + 1, : old + 1] = self.err
        ii, jj = [], []
        for i in range(max(old + 1, 0), new + 1):
            for j in range(i + 1):
                if i == 0:
                    val[0, 0] = np.inf
                elif i <= quad.NEAR_RADIUS:
                    v, e = self._near(i, j)
                    val[i, j] = val[j, i] = v
                    err[i, j] = err[j, i] = e
                else:
                    ii.append(i)
                    jj.append(j)
        if ii:
            ii = np.array(ii)
            jj = np.array(jj)
            v = quad.tent_gauss(ii, jj, self.s)
            orders = np.array([quad._gl_order(i) + 2 for i in ii])
            v2 = np.empty_like(v)
            for q in np.unique(orders):
                sel = orders == q
                v2[sel] = quad.tent_gauss(ii[sel], jj[sel], self.s, q=int(q))
            e = np.abs(v - v2) + ROUND_REL * np.abs(v)
            val[ii, jj] = v
            val[jj, ii] = v
            err[ii, jj] = e
            err[jj, ii] = e
        self.val, self.err, self.radius = val, err, new

    def lookup(self, dx, dy):
        self.ensure(int(max(np.max(np.abs(dx)), np.max(np.abs(dy)))))
        return self.val[np.abs(dx), np.abs(dy)]

    def dot_counts(self, counts):
        """Interval for sum over canonical classes of counts * I (class (0,0) skipped)."""
        r = counts.shape[0] - 1
        self.ensure(r)
        k = counts.copy()
        k[0, 0] = 0
        nz = np.nonzero(k)
        if len(nz[0]) == 0:
            return Interval(0.0, 0.0)
        c = k[nz].astype(float)
        terms = c * self.val[nz]
        value = math.fsum(terms)
        radius = math.fsum(c * self.err[nz]) + 2e-16 * math.fsum(np.abs(terms))
        return Interval(value, radius)

    def unit_perimeter(self):
        """Fractional perimeter of the unit square: sum over m != 0 of I(m)."""
        if self._unit is None:
            R = _TAIL_RADIUS
            counts = np.zeros((R + 1, R + 1), dtype=np.int64)
            for i in range(1, R + 1):
                for j in range(i + 1):
                    counts[i, j] = _multiplicity(i, j)
            near = self.dot_counts(counts)
            tail, terr = quad.box_tail_with_error(self.s, R)
            self._unit = near + Interval(tail, terr)
        return self._unit

    def lattice_tail(self, R):
        """Interval for sum over |k|_inf > R of J(Q, Q + k)."""
        tail, terr = quad.box_tail_with_error(self.s, R)
        return Interval(tail, terr)


def get_table(s, mode="subdivide", depth=3):
    key = (float(s), mode, int(depth) if mode == "subdivide" else 0)
    with _lock:
        tab = _cache.get(key)
        if tab is None:
            tab = PairTable(s, mode, depth)
            _cache[key] = tab
    return tab
