"""Cell-pair integrals of the kernel |x - y|^(-2-s) over unit squares.

For an integer offset m, the basic quantity is

    I(m) = int_Q int_{Q+m} |x - y|^(-2-s) dy dx,       Q = [0, 1)^2,

which, after the change of variables y = x + m + u, becomes a single
integral of the tent weight (1 - |u1|)(1 - |u2|) against |m + u|^(-2-s) over
(-1, 1)^2. Cells of side h at offset m contribute h^(2-s) I(m).

Two evaluation routes are provided:

``analytic-corner``
    Each of the four tent quadrants is an axis-aligned rectangle with a
    bilinear weight. In polar coordinates about the singularity the radial
    integral is elementary, so the area integral turns into a boundary
    integral (Stokes on G dtheta) that is smooth and handled by
    Gauss-Legendre. Exact up to round-off even for touching cells.

``subdivide``
    Dyadic refinement of near pairs into n x n sub-cells, n = 2**depth.
    Touching sub-pairs are closed by self-similarity (they are the same
    integrals at scale 1/n), the rest use a tensor Gauss rule.

Offsets with |m|_inf >= 3 always use the tensor Gauss rule.
"""
from functools import lru_cache

import numpy as np

NEAR_RADIUS = 2
_POLAR_NODES = 24
_TAIL_PANELS = 8


@lru_cache(maxsize=None)
def gauss01(q):
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(q)
    return 0.5 * (x + 1.0), 0.5 * w


def _gl_order(dist):
    if dist <= 2:
        return 12
    if dist <= 4:
        return 10
    if dist <= 16:
        return 6
    return 4


def tent_gauss(mx, my, s, q=None):
    """Tensor Gauss rule for I(m); only accurate for |m|_inf >= 2."""
    mx = np.atleast_1d(np.asarray(mx, dtype=float))
    my = np.atleast_1d(np.asarray(my, dtype=float))
    out = np.zeros(mx.shape)
    dist = np.maximum(np.abs(mx), np.abs(my))
    orders = np.array([_gl_order(d) if q is None else q for d in dist])
    for order in np.unique(orders):
        sel = orders == order
        t, w = gauss01(int(order))
        wt = w * (1.0 - t)
        ww = wt[:, None] * wt[None, :]
        ax, ay = mx[sel], my[sel]
        acc = np.zeros(ax.shape)
        for chunk in range(0, ax.size, 4096):
            cx = ax[chunk:chunk + 4096, None]
            cy = ay[chunk:chunk + 4096, None]
            part = np.zeros(cx.shape[0])
            for sx in (1.0, -1.0):
                dx = cx + sx * t[None, :]
                for sy in (1.0, -1.0):
                    dy = cy + sy * t[None, :]
                    r2 = dx[:, :, None] ** 2 + dy[:, None, :] ** 2
                    part += np.einsum("kij,ij->k", r2 ** (-1.0 - 0.5 * s), ww)
            acc[chunk:chunk + 4096] = part
        out[sel] = acc
    return out


def _edge_integral(p0, p1, coef, s, nodes):
    """int over the segment p0->p1 of G(p) dtheta, G the radial antiderivative."""
    ex, ey = p1[0] - p0[0], p1[1] - p0[1]
    cross = p0[0] * ey - p0[1] * ex
    if cross == 0.0:
        return 0.0
    t, w = gauss01(nodes)
    vx = p0[0] + t * ex
    vy = p0[1] + t * ey
    r2 = vx * vx + vy * vy
    rs = r2 ** (-0.5 * s)
    c0, c1, c2, c3 = coef
    g = rs * (-c0 / s + (c1 * vx + c2 * vy) / (1.0 - s) + c3 * vx * vy / (2.0 - s))
    return float(np.dot(w, g * cross / r2))


def rect_bilinear_polar(x0, x1, y0, y1, coef, s, nodes=_POLAR_NODES):
    """int_R (c0 + c1 x + c2 y + c3 x y) |v|^(-2-s) dv over [x0,x1]x[y0,y1].

    The origin must lie outside the rectangle, or on its boundary with c0 = 0.
    """
    corners = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    total = 0.0
    for k in range(4):
        total += _edge_integral(corners[k], corners[(k + 1) % 4], coef, s, nodes)
    return total


def pair_polar(m1, m2, s, nodes=_POLAR_NODES):
    total = 0.0
    for s1 in (1.0, -1.0):
        a1 = 1.0 + s1 * m1
        xs = sorted((float(m1), m1 + s1))
        for s2 in (1.0, -1.0):
            a2 = 1.0 + s2 * m2
            ys = sorted((float(m2), m2 + s2))
            coef = (a1 * a2, -s1 * a2, -s2 * a1, s1 * s2)
            total += rect_bilinear_polar(xs[0], xs[1], ys[0], ys[1], coef, s, nodes)
    return total


def _far_sum(n, m1, m2, s):
    """sum of mult(d) * I(n m + d) over non-touching sub-offsets."""
    d = np.arange(-(n - 1), n)
    mult = (n - np.abs(d)).astype(float)
    dx, dy = np.meshgrid(n * m1 + d, n * m2 + d, indexing="ij")
    w = np.outer(mult, mult)
    far = np.maximum(np.abs(dx), np.abs(dy)) >= 2
    vals = tent_gauss(dx[far], dy[far], s)
    return float(np.dot(w[far], vals))


def _subdivide_level(m1, m2, s, level):
    n = 2 ** level
    scale = float(n) ** (s - 2.0)
    if (m1, m2) == (1, 1):
        return scale * _far_sum(n, 1, 1, s) / (1.0 - scale)
    if (m1, m2) == (1, 0):
        xc = _subdivide_level(1, 1, s, level)
        return scale * (2 * (n - 1) * xc + _far_sum(n, 1, 0, s)) / (1.0 - n * scale)
    return scale * _far_sum(n, m1, m2, s)


def pair_subdivide(m1, m2, s, depth):
    """Refined value and error estimate for a canonical near offset."""
    if depth == 0:
        coarse = float(tent_gauss([m1], [m2], s, q=6)[0])
        fine = float(tent_gauss([m1], [m2], s, q=12)[0])
        return fine, abs(fine - coarse)
    prev = None
    val = None
    for level in range(1, depth + 1):
        val = _subdivide_level(m1, m2, s, level)
        if prev is not None and abs(val - prev) < 1e-4 * abs(val):
            return val, abs(val - prev)
        prev = val
    if depth == 1:
        alt = _subdivide_level(m1, m2, s, 2)
        return val, abs(alt - val)
    return val, abs(val - prev)


def box_tail(s, R, qx=8, nodes=16):
    """J(Q, R^2 minus the box [-R, R+1]^2) for the unit cell Q.

    This is the mass of all cell pairs at lattice offset |k|_inf > R. For each
    x in Q the exterior integral equals the boundary integral of r^(-s)/s
    dtheta around the box; x is then integrated by a tensor Gauss rule.
    """
    t, w = gauss01(qx)
    lo, hi = -float(R), float(R) + 1.0
    corners = np.array([(lo, lo), (hi, lo), (hi, hi), (lo, hi)])
    tp, wp = gauss01(nodes)
    pts = []
    wts = []
    for k in range(4):
        a, b = corners[k], corners[(k + 1) % 4]
        for p in range(_TAIL_PANELS):
            u = (p + tp) / _TAIL_PANELS
            pts.append(a[None, :] + u[:, None] * (b - a)[None, :])
            wts.append(wp / _TAIL_PANELS)
    pts = np.concatenate(pts)
    wts = np.concatenate(wts)
    edge = np.repeat(np.arange(4), _TAIL_PANELS * nodes)
    evec = np.array([corners[(k + 1) % 4] - corners[k] for k in range(4)])[edge]
    X, Y = np.meshgrid(t, t, indexing="ij")
    WX = np.outer(w, w)
    total = 0.0
    for xi, yi, wi in zip(X.ravel(), Y.ravel(), WX.ravel()):
        px = pts[:, 0] - xi
        py = pts[:, 1] - yi
        r2 = px * px + py * py
        cross = px * evec[:, 1] - py * evec[:, 0]
        g = r2 ** (-0.5 * s) / s * cross / r2
        total += wi * float(np.dot(wts, g))
    return total


def box_tail_with_error(s, R):
    fine = box_tail(s, R)
    coarse = box_tail(s, R, qx=6, nodes=12)
    return fine, abs(fine - coarse) + 1e-14 * fine
