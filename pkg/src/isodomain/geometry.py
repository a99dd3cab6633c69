"""Planar polygons: areas, containment, simplicity."""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument


def cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


@dataclass(frozen=True, eq=False)
class Polygon:
    """Closed polygon given by its vertices, counterclockwise."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise InvalidArgument("polygon vertices must have shape (k, 2)")
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self):
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    def signed_area(self):
        v = self.vertices
        return 0.5 * float(np.sum(cross(v, np.roll(v, -1, axis=0))))

    def area(self):
        return abs(self.signed_area())

    def euclidean_perimeter(self):
        return float(np.sum(np.hypot(*self.edges.T)))

    def diameter(self):
        v = self.vertices
        d = v[:, None, :] - v[None, :, :]
        return float(np.sqrt((d ** 2).sum(-1)).max())

    def centroid(self):
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        c = cross(v, w)
        a = c.sum() / 2.0
        return ((v + w) * c[:, None]).sum(0) / (6.0 * a)

    def translated(self, t):
        return Polygon(self.vertices + np.asarray(t, dtype=float))

    def scaled(self, k):
        return Polygon(self.vertices * k)

    def is_convex(self, tol=1e-12):
        e = self.edges
        c = cross(e, np.roll(e, -1, axis=0))
        return bool(np.all(c >= -tol) or np.all(c <= tol))

    def is_simple(self):
        v = self.vertices
        k = len(v)
        for i in range(k):
            a, b = v[i], v[(i + 1) % k]
            for j in range(i + 1, k):
                if j == i or (j + 1) % k == i or j == (i + 1) % k:
                    continue
                c, d = v[j], v[(j + 1) % k]
                if _segments_cross(a, b, c, d):
                    return False
        return True

    def contains(self, pts, tol=1e-12):
        """Even-odd test; returns (inside, on_boundary) boolean arrays."""
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        x = pts[:, 0][:, None]
        y = pts[:, 1][:, None]
        vx, vy, wx, wy = v[:, 0], v[:, 1], w[:, 0], w[:, 1]
        straddle = (vy > y) != (wy > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = vx + (y - vy) * (wx - vx) / (wy - vy)
        inside = (np.count_nonzero(straddle & (x < xint), axis=1) % 2) == 1
        # distance to each edge for boundary detection
        e = w - v
        L2 = (e ** 2).sum(1)
        t = np.clip(((x - vx) * e[:, 0] + (y - vy) * e[:, 1]) / np.where(L2 > 0, L2, 1.0), 0.0, 1.0)
        dx = x - (vx + t * e[:, 0])
        dy = y - (vy + t * e[:, 1])
        on = np.min(dx * dx + dy * dy, axis=1) <= tol * tol
        return inside & ~on, on


def _segments_cross(a, b, c, d):
    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return (o1 * o2 < 0) and (o3 * o4 < 0)


def unit_square():
    return Polygon([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def regular_polygon(k, circumradius=1.0, phase=0.0):
    th = phase + 2 * np.pi * np.arange(k) / k
    return Polygon(circumradius * np.stack([np.cos(th), np.sin(th)], axis=1))
