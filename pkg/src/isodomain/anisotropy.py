"""Planar norms, their duals, Wulff shapes and anisotropic polygon perimeters.

A norm here plays the role of the surface tension: an edge with outward unit
normal nu and length l costs phi(nu) * l, which by 1-homogeneity equals
phi(v_perp) for the edge displacement v.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument
from .geometry import Polygon, cross

KINDS = ("euclidean", "pnorm", "crystalline", "table")
WULFF_TOL = 1e-9
GOLDEN_TOL = 1e-10
FD_STEP = 1e-6


@dataclass(frozen=True)
class NormSpec:
    """A symmetric, positively 1-homogeneous convex cost on R^2.

    ``crystalline`` is the zonoidal norm phi(v) = sum_k w_k |d_k . v|.
    ``table`` holds support values on angles in [0, pi); the norm is the gauge
    of the polygon through u(theta_k) / phi_k, i.e. phi is interpolated
    linearly in v between neighbouring grid rays, which keeps it convex.
    """

    kind: str
    p: float = 2.0
    directions: tuple = ()
    table: tuple = ()
    strict: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidArgument(f"norm.kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "pnorm" and not (1.0 < self.p < math.inf):
            raise InvalidArgument(f"norm.p must lie in (1, inf), got {self.p}")
        if self.kind == "crystalline":
            if not self.directions:
                raise InvalidArgument("crystalline norm needs at least two directions")
            d = np.array(self.directions, dtype=float)
            if d.shape[1] != 3 or np.any(d[:, 2] <= 0):
                raise InvalidArgument("crystalline directions are (dx, dy, weight>0) triples")
            if np.linalg.matrix_rank(d[:, :2]) < 2:
                raise InvalidArgument("crystalline directions must span the plane")
        if self.kind == "table":
            _table_polygon(self)

    # -- constructors
    @classmethod
    def euclidean(cls):
        return cls("euclidean", strict=True)

    @classmethod
    def pnorm(cls, p):
        if p == 1:
            return cls.crystalline([(1.0, 0.0, 1.0), (0.0, 1.0, 1.0)])
        if p == 2:
            return cls.euclidean()
        return cls("pnorm", p=float(p), strict=True)

    @classmethod
    def crystalline(cls, directions):
        return cls("crystalline", directions=tuple(tuple(float(x) for x in d) for d in directions))

    @classmethod
    def tabulated(cls, angles, values):
        pairs = sorted((float(a) % math.pi, float(v)) for a, v in zip(angles, values))
        return cls("table", table=tuple(pairs))

    @classmethod
    def from_support(cls, polygon):
        """The norm phi = h_W whose Wulff shape is the centrally symmetric polygon W.

        The grid consists of the edge normals of W (the corners of the unit
        ball), so the tabulated interpolation is exact.
        """
        v = polygon.vertices - polygon.centroid()
        e = np.roll(v, -1, axis=0) - v
        normals = np.stack([e[:, 1], -e[:, 0]], axis=1)
        angles = np.arctan2(normals[:, 1], normals[:, 0]) % math.pi
        angles = np.unique(np.round(angles, 14))
        u = np.stack([np.cos(angles), np.sin(angles)], axis=1)
        values = np.max(u @ v.T, axis=1)
        return cls.tabulated(angles, values)


# ---------------------------------------------------------------------- helpers

def _as_vec(v):
    v = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(v)):
        raise InvalidArgument("vector must be finite")
    return v


def _table_polygon(phi):
    """Unit-ball vertices u_k/phi_k over the full circle, sorted by angle."""
    cached = phi._cache.get("ball")
    if cached is not None:
        return cached
    if len(phi.table) < 2:
        raise InvalidArgument("table norm needs at least two angles in [0, pi)")
    ang = np.array([a for a, _ in phi.table])
    val = np.array([v for _, v in phi.table])
    if np.any(val <= 0):
        raise InvalidArgument("table norm values must be positive")
    ang = np.concatenate([ang, ang + math.pi])
    val = np.concatenate([val, val])
    pts = np.stack([np.cos(ang), np.sin(ang)], axis=1) / val[:, None]
    e = np.roll(pts, -1, axis=0) - pts
    turn = cross(e, np.roll(e, -1, axis=0))
    if np.any(turn < -1e-12 * np.max(np.abs(pts)) ** 2):
        raise InvalidArgument("tabulated values do not define a convex unit ball")
    phi._cache["ball"] = (ang, val, pts)
    return phi._cache["ball"]


def _zonotope(phi):
    """Vertices (ccw) of Z = sum_k w_k [-d_k, d_k], so that phi = h_Z."""
    cached = phi._cache.get("zono")
    if cached is not None:
        return cached
    g = np.array([(d[0] * d[2], d[1] * d[2]) for d in phi.directions])
    # orient generators into the upper half plane and sort by angle
    flip = (g[:, 1] < 0) | ((g[:, 1] == 0) & (g[:, 0] < 0))
    g[flip] *= -1
    g = g[np.argsort(np.arctan2(g[:, 1], g[:, 0]))]
    start = -g.sum(axis=0)
    steps = np.concatenate([2 * g, -2 * g])
    verts = np.roll(start + np.cumsum(steps, axis=0), 1, axis=0)
    # drop collinear vertices (parallel generators)
    e_in = verts - np.roll(verts, 1, axis=0)
    e_out = np.roll(verts, -1, axis=0) - verts
    keep = np.abs(cross(e_in, e_out)) > 1e-14 * np.max(np.abs(verts)) ** 2
    verts = verts[keep]
    phi._cache["zono"] = verts
    return verts


def _facets(verts):
    """(normals, offsets) with verts = {y : n . y <= c}; ccw vertices around 0."""
    e = np.roll(verts, -1, axis=0) - verts
    n = np.stack([e[:, 1], -e[:, 0]], axis=1)
    c = np.einsum("ij,ij->i", n, verts)
    return n, c


# ------------------------------------------------------------------ operations

def eval_norm(phi, v):
    """phi(v) for a single vector or an array of shape (..., 2)."""
    v = _as_vec(v)
    x, y = v[..., 0], v[..., 1]
    if phi.kind == "euclidean":
        out = np.hypot(x, y)
    elif phi.kind == "pnorm":
        m = np.maximum(np.abs(x), np.abs(y))
        safe = np.where(m > 0, m, 1.0)
        out = m * ((np.abs(x) / safe) ** phi.p + (np.abs(y) / safe) ** phi.p) ** (1.0 / phi.p)
    else:
        # evaluate on v / max(|x|, |y|) so tiny or huge inputs neither underflow nor overflow
        m = np.maximum(np.abs(x), np.abs(y))
        w = v / np.where(m > 0, m, 1.0)[..., None]
        if phi.kind == "crystalline":
            d = np.array(phi.directions)
            out = np.abs(w[..., None, 0] * d[:, 0] + w[..., None, 1] * d[:, 1]) @ d[:, 2]
        else:
            ang, val, _ = _table_polygon(phi)
            th = np.arctan2(w[..., 1], w[..., 0]) % (2 * math.pi)
            k = np.searchsorted(ang, th, side="right") - 1
            k = np.where(k < 0, len(ang) - 1, k)
            k1 = (k + 1) % len(ang)
            u0 = np.stack([np.cos(ang[k]), np.sin(ang[k])], axis=-1)
            u1 = np.stack([np.cos(ang[k1]), np.sin(ang[k1])], axis=-1)
            det = cross(u0, u1)
            out = cross(w, u1) / det * val[k] + cross(u0, w) / det * val[k1]
        out = m * out
    return float(out) if np.ndim(out) == 0 else out


def dual_norm(phi, x, method="closed"):
    """phi*(x) = sup{x . y : phi(y) <= 1}.

    ``method="golden"`` maximizes over the angle of y by golden-section
    search and works for any kind.
    """
    x = _as_vec(x)
    if method == "golden":
        return _dual_golden(phi, x)
    if phi.kind == "euclidean":
        return float(np.hypot(x[0], x[1]))
    if phi.kind == "pnorm":
        q = phi.p / (phi.p - 1.0)
        return float((abs(x[0]) ** q + abs(x[1]) ** q) ** (1.0 / q))
    if phi.kind == "crystalline":
        n, c = _facets(_zonotope(phi))
        return float(max(0.0, np.max(n @ x / c)))
    _, _, pts = _table_polygon(phi)
    return float(max(0.0, np.max(pts @ x)))


def _dual_golden(phi, x):
    r = float(np.hypot(x[0], x[1]))
    if r == 0.0:
        return 0.0
    base = math.atan2(x[1], x[0])

    def g(t):
        u = np.array([math.cos(t), math.sin(t)])
        return float(x @ u) / eval_norm(phi, u)

    # coarse bracket first: piecewise-linear norms may have flat stretches
    grid = base + np.linspace(-math.pi / 2, math.pi / 2, 65)
    vals = [g(t) for t in grid]
    k = int(np.argmax(vals))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, len(grid) - 1)]
    inv = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - inv * (b - a)
    d = a + inv * (b - a)
    gc, gd = g(c), g(d)
    while b - a > GOLDEN_TOL:
        if gc > gd:
            b, d, gd = d, c, gc
            c = b - inv * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + inv * (b - a)
            gd = g(d)
    return max(gc, gd, vals[k])


def gradient(phi, v):
    """Gradient of phi at v != 0; central differences when no closed form exists."""
    v = _as_vec(v)
    if phi.kind == "euclidean":
        return v / np.hypot(v[0], v[1])
    if phi.kind == "pnorm":
        n = eval_norm(phi, v)
        return np.sign(v) * (np.abs(v) / n) ** (phi.p - 1.0)
    g = np.zeros(2)
    for i in range(2):
        e = np.zeros(2)
        e[i] = FD_STEP
        g[i] = (eval_norm(phi, v + e) - eval_norm(phi, v - e)) / (2 * FD_STEP)
    return g


def wulff_shape(phi, resolution=360):
    """Polygon approximating W = {phi* <= 1}.

    Polygonal norms give W exactly (a zonotope, or the polar of the tabulated
    unit ball); smooth kinds are sampled radially, so every vertex sits on
    {phi* = 1} up to WULFF_TOL.
    """
    if resolution < 3:
        raise InvalidArgument(f"resolution must be >= 3, got {resolution}")
    if phi.kind == "crystalline":
        return Polygon(_zonotope(phi))
    if phi.kind == "table":
        _, _, pts = _table_polygon(phi)
        n, c = _facets(pts)
        return Polygon(n / c[:, None])
    th = 2 * math.pi * np.arange(resolution) / resolution
    u = np.stack([np.cos(th), np.sin(th)], axis=1)
    rho = np.array([1.0 / dual_norm(phi, ui) for ui in u])
    return Polygon(u * rho[:, None])


def normalized_wulff(phi, resolution=360):
    """Wulff shape rescaled to unit area (by |W|^(-1/2))."""
    w = wulff_shape(phi, resolution)
    return w.scaled(1.0 / math.sqrt(w.area()))


def perp(v):
    v = np.asarray(v, dtype=float)
    return np.stack([-v[..., 1], v[..., 0]], axis=-1)


def segment_cost(phi, v):
    """Cost of a straight edge with displacement v: phi(v_perp)."""
    return eval_norm(phi, perp(_as_vec(v)))


def polygon_perimeter(phi, polygon):
    if len(polygon) < 3:
        raise InvalidArgument("a polygon needs at least 3 vertices")
    return float(np.sum(segment_cost(phi, polygon.edges)))


def min_unit_cost(phi, samples=3600):
    """min over unit vectors of segment_cost, on an angular grid."""
    th = math.pi * np.arange(samples) / samples
    u = np.stack([np.cos(th), np.sin(th)], axis=1)
    return float(np.min(segment_cost(phi, u)))
