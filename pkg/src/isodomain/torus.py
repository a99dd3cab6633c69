"""Lattice fundamental domains encoded as offset maps on a pixel grid.

An N x N grid covers the unit cell [0, 1)^2. Each cell c carries an integer
offset z(c), and the domain is D = union of (cell c + z(c)). Every point of
the unit cell has exactly one representative in D, so D is a fundamental
domain for Z^2 by construction.

Global cells are indexed by integer coordinates in units of 1/N. The global
cell P lies in the translate D + k with k = floor(P / N) - z(P mod N); that
label is what the junction and equilibrium diagnostics work with.
"""
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from . import kernels
from .errors import InvalidArgument
from .fractional.perimeter import FractionalConfig, tail_mass
from .fractional.pixels import PixelSet
from .fractional.quadrature import box_tail_with_error, gauss01
from .geometry import Polygon, cross
from .interval import Interval

ANGLE_TOL = 1e-6


@dataclass(eq=False)
class PixelDomainMap:
    """``zx[row, col]``, ``zy[row, col]`` hold the offset of cell (col, row)."""

    n: int
    window: int
    zx: np.ndarray
    zy: np.ndarray

    def __post_init__(self):
        self.n = int(self.n)
        self.window = int(self.window)
        if self.n < 1:
            raise InvalidArgument(f"grid must be >= 1, got {self.n}")
        if self.window < 0:
            raise InvalidArgument(f"window must be >= 0, got {self.window}")
        self.zx = np.ascontiguousarray(np.asarray(self.zx, dtype=np.int64))
        self.zy = np.ascontiguousarray(np.asarray(self.zy, dtype=np.int64))
        if self.zx.shape != (self.n, self.n) or self.zy.shape != (self.n, self.n):
            raise InvalidArgument(f"offset fields must have shape ({self.n}, {self.n})")
        if np.abs(self.zx).max(initial=0) > self.window or np.abs(self.zy).max(initial=0) > self.window:
            raise InvalidArgument(f"offsets must lie in [-{self.window}, {self.window}]")

    @classmethod
    def constant(cls, n, window=1, offset=(0, 0)):
        return cls(n, window, np.full((n, n), offset[0]), np.full((n, n), offset[1]))

    @classmethod
    def random(cls, n, window, rng):
        z = rng.integers(-window, window + 1, size=(2, n, n))
        return cls(n, window, z[0], z[1])

    def copy(self):
        return PixelDomainMap(self.n, self.window, self.zx.copy(), self.zy.copy())

    def shifted(self, g):
        """The same tiling with D replaced by D + g (offsets may leave the window)."""
        w = self.window + max(abs(int(g[0])), abs(int(g[1])))
        return PixelDomainMap(self.n, w, self.zx + int(g[0]), self.zy + int(g[1]))

    def rotated(self):
        """Rotation by 90 degrees about the unit-cell centre, as a map."""
        n = self.n
        # cell (col, row) -> (n-1-row, col); offset (zx, zy) -> (-zy, zx)
        zx = np.empty_like(self.zx)
        zy = np.empty_like(self.zy)
        rows, cols = np.indices((n, n))
        zx[cols, n - 1 - rows] = -self.zy
        zy[cols, n - 1 - rows] = self.zx
        return PixelDomainMap(n, self.window, zx, zy)

    def reflected(self):
        """Reflection x -> 1 - x as a map."""
        return PixelDomainMap(self.n, self.window, -self.zx[:, ::-1], self.zy[:, ::-1])

    def positions(self):
        """Global integer coordinates (px, py) of the lifted cells, flattened row-major."""
        n = self.n
        rows, cols = np.indices((n, n))
        px = (cols + n * self.zx).ravel()
        py = (rows + n * self.zy).ravel()
        return px.astype(np.int64), py.astype(np.int64)

    def label(self, px, py):
        """Translate k with global cell (px, py) inside D + k."""
        n = self.n
        px = np.asarray(px, dtype=np.int64)
        py = np.asarray(py, dtype=np.int64)
        col = np.mod(px, n)
        row = np.mod(py, n)
        return (np.floor_divide(px, n) - self.zx[row, col],
                np.floor_divide(py, n) - self.zy[row, col])

    def to_dict(self):
        return {"n": self.n, "window": self.window, "zx": self.zx.tolist(), "zy": self.zy.tolist()}

    @classmethod
    def from_dict(cls, d):
        return cls(d["n"], d["window"], np.array(d["zx"]), np.array(d["zy"]))


def lift(dmap):
    """The fundamental domain D as a PixelSet on the grid of side 1/N."""
    px, py = dmap.positions()
    return PixelSet.from_cells(dmap.n, np.stack([px, py], axis=1))


def translate_overlaps(dmap):
    """Number of lifted cells shared by D and D + g, summed over 0 < |g|_inf <= 2W+1."""
    px, py = dmap.positions()
    n = dmap.n
    cells = set(zip(px.tolist(), py.tolist()))
    reach = 2 * dmap.window + 1
    hits = 0
    for gx in range(-reach, reach + 1):
        for gy in range(-reach, reach + 1):
            if gx == 0 and gy == 0:
                continue
            hits += sum((x + n * gx, y + n * gy) in cells for x, y in zip(px.tolist(), py.tolist()))
    return hits


def read_map(path):
    """Header ``N W``, then N rows of N tokens ``zx,zy``; the first row is row 0 (bottom)."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        n, w = (int(t) for t in lines[0].split())
    except (IndexError, ValueError) as exc:
        raise InvalidArgument(f"{path}: bad header, expected 'N W'") from exc
    if len(lines) != n + 1:
        raise InvalidArgument(f"{path}: expected {n} rows, found {len(lines) - 1}")
    zx = np.zeros((n, n), dtype=np.int64)
    zy = np.zeros((n, n), dtype=np.int64)
    for r, line in enumerate(lines[1:]):
        toks = line.split()
        if len(toks) != n:
            raise InvalidArgument(f"{path}:{r + 2}: expected {n} tokens, found {len(toks)}")
        for c, tok in enumerate(toks):
            try:
                a, b = tok.split(",")
                zx[r, c], zy[r, c] = int(a), int(b)
            except ValueError as exc:
                raise InvalidArgument(f"{path}:{r + 2}: bad token {tok!r}") from exc
    return PixelDomainMap(n, w, zx, zy)


def write_map(path, dmap):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{dmap.n} {dmap.window}\n")
        for r in range(dmap.n):
            fh.write(" ".join(f"{dmap.zx[r, c]},{dmap.zy[r, c]}" for c in range(dmap.n)) + "\n")


# ----------------------------------------------------------------- energy

def _axis_weights(n, R):
    """w(m) = sum over |k| <= R of (n - |m - n k|)_+, for |m| < n (R + 1)."""
    m = np.arange(n * (R + 1))
    w = np.zeros(len(m), dtype=np.int64)
    for k in range(-R, R + 1):
        w += np.maximum(n - np.abs(m - n * k), 0)
    return w


def _lattice_counts(n, R):
    """Canonical class counts of c' - c + n k over cells c, c' and |k|_inf <= R."""
    w = _axis_weights(n, R)
    M = len(w)
    mx, my = np.meshgrid(np.arange(M), np.arange(M), indexing="ij")
    # each |m| stands for the pair +-m except on the axes
    mult = np.where(mx > 0, 2, 1) * np.where(my > 0, 2, 1)
    cnt = w[mx] * w[my] * mult
    cnt[0, 0] = 0
    hi = np.maximum(mx, my).ravel()
    lo = np.minimum(mx, my).ravel()
    out = np.zeros((M, M), dtype=np.int64)
    np.add.at(out, (hi, lo), cnt.ravel())
    return out


def _self_counts(dmap):
    px, py = dmap.positions()
    pts = np.stack([px, py], axis=1)
    radius = (2 * dmap.window + 1) * dmap.n
    return kernels.class_counts(pts, pts, radius)


@dataclass(frozen=True)
class PeriodicEnergy:
    energy: Interval
    lattice_term: Interval
    self_term: Interval
    tail: Interval
    tail_bound: float
    radius: int


def periodic_energy(dmap, cfg):
    """Per_s(D) through the lattice-summed kernel, with its parts.

    Per(D) = h^(2-s) [ sum_{c, c'} sum_{|k| <= R} I(c' - c + N k)
                       - sum_{c != c'} I(L(c') - L(c)) ] + T_R

    where L(c) is the lifted position and T_R the unit-cell mass beyond the
    lattice box of radius R. T_R does not depend on the map, so it enters
    the value; its quadrature error enters the radius.
    """
    R = int(math.floor(cfg.truncation_radius))
    if R < 2 * dmap.window + 2:
        raise InvalidArgument(
            f"frac.truncation = {cfg.truncation_radius} is too small for window {dmap.window}; "
            f"need >= {2 * dmap.window + 2}")
    tab = cfg.table()
    lat = tab.dot_counts(_lattice_counts(dmap.n, R))
    slf = tab.dot_counts(_self_counts(dmap))
    scale = float(dmap.n) ** (cfg.s - 2.0)
    tail_v, tail_e = box_tail_with_error(cfg.s, R)
    tail = Interval(float(tail_v), float(tail_e))
    body = lat - slf
    rounding = 4e-16 * (abs(lat.value) + abs(slf.value))
    energy = Interval(body.value, body.radius + rounding) * scale + tail
    return PeriodicEnergy(energy, lat * scale, slf * scale, tail, tail_mass(cfg.s, R), R)


def periodic_frac_perimeter(dmap, cfg):
    return periodic_energy(dmap, cfg).energy


# -------------------------------------------------------------- junctions

@dataclass(frozen=True)
class Junction:
    position: tuple
    degree: int
    directions: tuple
    angles: tuple

    def to_dict(self):
        return {"position": list(self.position), "degree": self.degree,
                "directions": list(self.directions), "angles": list(self.angles)}


@dataclass(frozen=True)
class JunctionReport:
    junctions: list
    edges: int
    neighbours: list

    @property
    def max_degree(self):
        return max((j.degree for j in self.junctions), default=0)

    def to_dict(self):
        return {"junctions": [j.to_dict() for j in self.junctions], "edges": self.edges,
                "neighbours": [list(g) for g in self.neighbours], "max_degree": self.max_degree}


def _gaps(dirs):
    d = sorted(dirs)
    return tuple((d[(k + 1) % len(d)] - d[k]) % 360.0 or 360.0 for k in range(len(d)))


def _merge_dirs(angles):
    out = []
    for a in sorted(angles):
        if not out or min(abs(a - out[-1]), 360.0 - abs(a - out[-1])) > math.degrees(ANGLE_TOL):
            out.append(a)
    if len(out) > 1 and 360.0 - (out[-1] - out[0]) <= math.degrees(ANGLE_TOL):
        out.pop()
    return out


def _simplify(poly, tol=1e-9):
    """Drop repeated and collinear vertices."""
    v = poly.vertices
    keep = []
    k = len(v)
    for i in range(k):
        p, q, r = v[i - 1], v[i], v[(i + 1) % k]
        e1, e2 = q - p, r - q
        if np.hypot(*e1) < tol:
            continue
        if abs(float(cross(e1, e2))) <= tol * np.hypot(*e1) * max(np.hypot(*e2), tol) and float(e1 @ e2) > 0:
            continue
        keep.append(q)
    return Polygon(np.array(keep))


def polygon_junctions(tile, translations=None):
    """Junction inventory of the lattice tiling generated by a polygonal tile.

    Each corner of the tile is examined against the translates of the tile
    by |g|_inf <= 2; every edge of a translate that starts, ends or passes
    through the corner contributes its outgoing direction(s).
    """
    tile = _simplify(tile)
    if translations is None:
        translations = [(gx, gy) for gx in range(-2, 3) for gy in range(-2, 3)]
    edges = []
    for g in translations:
        v = tile.vertices + np.asarray(g, dtype=float)
        w = np.roll(v, -1, axis=0)
        edges.append(np.stack([v, w], axis=1))
    edges = np.concatenate(edges)
    junctions = []
    for p in tile.vertices:
        angs = []
        for a, b in edges:
            e = b - a
            L = np.hypot(*e)
            t = float((p - a) @ e) / (L * L)
            foot = a + np.clip(t, 0, 1) * e
            if np.hypot(*(p - foot)) > 1e-9:
                continue
            if t > 1e-9:
                angs.append(math.degrees(math.atan2(-e[1], -e[0])) % 360.0)
            if t < 1 - 1e-9:
                angs.append(math.degrees(math.atan2(e[1], e[0])) % 360.0)
        dirs = _merge_dirs(angs)
        junctions.append(Junction((float(p[0]), float(p[1])), len(dirs), tuple(dirs), _gaps(dirs)))
    nb = _polygon_neighbours(tile)
    return JunctionReport([j for j in junctions if j.degree >= 3], len(tile), nb)


def _polygon_neighbours(tile):
    """Translates sharing an edge of positive length with the tile."""
    out = []
    for gx in range(-2, 3):
        for gy in range(-2, 3):
            if gx == 0 and gy == 0:
                continue
            other = tile.translated((gx, gy))
            if _shares_edge(tile, other):
                out.append((gx, gy))
    return out


def _shares_edge(p, q, tol=1e-9):
    for a, b in zip(p.vertices, np.roll(p.vertices, -1, axis=0)):
        for c, d in zip(q.vertices, np.roll(q.vertices, -1, axis=0)):
            e = b - a
            if abs(float(cross(e, c - a))) > tol or abs(float(cross(e, d - a))) > tol:
                continue
            L2 = float(e @ e)
            t0, t1 = sorted((float((c - a) @ e) / L2, float((d - a) @ e) / L2))
            if min(1.0, t1) - max(0.0, t0) > tol:
                return True
    return False


def map_junctions(dmap):
    """Junctions along the boundary of a pixel domain.

    A grid vertex is a junction when the translate labels of its four
    surrounding cells change at least three times going around it; the
    directions are those of the unit edges separating different labels.
    Boundary edges of D are merged into straight runs to count edges.
    """
    px, py = dmap.positions()
    n = dmap.n
    # vertices of D: corners of lifted cells
    vx = np.concatenate([px, px + 1, px, px + 1])
    vy = np.concatenate([py, py, py + 1, py + 1])
    verts = np.unique(np.stack([vx, vy], axis=1), axis=0)
    X, Y = verts[:, 0], verts[:, 1]
    # surrounding cells in ccw order: NE, NW, SW, SE
    quad = [(X, Y), (X - 1, Y), (X - 1, Y - 1), (X, Y - 1)]
    labels = [np.stack(dmap.label(a, b), axis=1) for a, b in quad]
    # edge between consecutive quadrant cells points E, N, W, S respectively
    edge_dirs = (90.0, 180.0, 270.0, 0.0)
    diff = [np.any(labels[k] != labels[(k + 1) % 4], axis=1) for k in range(4)]
    degree = np.sum(diff, axis=0)
    junctions = []
    for idx in np.nonzero(degree >= 3)[0]:
        dirs = tuple(sorted(edge_dirs[k] for k in range(4) if diff[k][idx]))
        junctions.append(Junction((float(X[idx]) / n, float(Y[idx]) / n), int(degree[idx]), dirs, _gaps(dirs)))
    neighbours = _map_neighbours(dmap)
    return JunctionReport(junctions, _boundary_runs(dmap), neighbours)


def _map_neighbours(dmap):
    px, py = dmap.positions()
    out = set()
    for dx, dy in kernels.DIRS:
        kx, ky = dmap.label(px + dx, py + dy)
        for a, b in zip(kx.tolist(), ky.tolist()):
            if (a, b) != (0, 0):
                out.add((a, b))
    return sorted(out)


def _boundary_runs(dmap):
    """Number of maximal straight boundary runs of D between junctions and corners."""
    d = lift(dmap)
    bits = np.pad(d.bits, 1)
    x0 = int(round(d.origin[0] * dmap.n)) - 1
    y0 = int(round(d.origin[1] * dmap.n)) - 1
    rows, cols = bits.shape
    gy, gx = np.indices((rows, cols))
    lab = np.stack(dmap.label(gx + x0, gy + y0), axis=-1)
    runs = 0
    # horizontal unit edges between row r-1 and r
    for r in range(1, rows):
        inside = bits[r] != bits[r - 1]
        other = np.where(bits[r][:, None], lab[r - 1], lab[r])
        prev = None
        for c in range(cols):
            key = tuple(other[c]) if inside[c] else None
            if key is not None and key != prev:
                runs += 1
            prev = key
    for c in range(1, cols):
        inside = bits[:, c] != bits[:, c - 1]
        other = np.where(bits[:, c][:, None], lab[:, c - 1], lab[:, c])
        prev = None
        for r in range(rows):
            key = tuple(other[r]) if inside[r] else None
            if key is not None and key != prev:
                runs += 1
            prev = key
    return runs


def junction_structure(obj):
    """Junctions of a tiling given as a PixelDomainMap, a TilingSolution or a Polygon tile."""
    if isinstance(obj, PixelDomainMap):
        return map_junctions(obj)
    if isinstance(obj, Polygon):
        return polygon_junctions(obj)
    return polygon_junctions(obj.domain.polygon())


def components(dmap):
    d = lift(dmap)
    _, count = ndimage.label(d.bits)
    return int(count)


# --------------------------------------------------------------- diameter

def diameter_check(domain):
    """diam(D) against sqrt(2) + Per(D)/2 with the Euclidean perimeter."""
    if isinstance(domain, PixelDomainMap):
        domain = lift(domain)
    if isinstance(domain, PixelSet):
        pts = domain.corners()
        per = domain.boundary_length()
    else:
        pts = domain.vertices
        per = domain.euclidean_perimeter()
    hull = pts
    if len(pts) > 3:
        from scipy.spatial import ConvexHull

        hull = pts[ConvexHull(pts).vertices]
    d = hull[:, None, :] - hull[None, :, :]
    diam = float(np.sqrt((d ** 2).sum(-1)).max())
    bound = math.sqrt(2.0) + per / 2.0
    return {"diameter": diam, "bound": bound, "holds": diam <= bound}


# ------------------------------------------------------------ equilibrium

_EDGE_NODES = 8


def _edge_theta_integral(x, a, b, s, nodes=_EDGE_NODES, grade=True):
    """int over the segment [a, b] of -r^(-s)/s dtheta, angles seen from x."""
    e = b - a
    L = float(np.hypot(*e))
    p0 = a - x
    if abs(float(cross(p0, e))) <= 1e-15 * L * max(np.hypot(*p0), L):
        return 0.0
    t_foot = float(np.clip(-(p0 @ e) / (L * L), 0.0, 1.0))
    dist = float(np.hypot(*(p0 + t_foot * e)))
    breaks = [0.0, 1.0]
    if grade and L > 2 * dist:
        # geometric panels towards the foot point
        rel = dist / L
        for side in (-1, 1):
            r = rel
            while True:
                t = t_foot + side * r
                if not 0.0 < t < 1.0:
                    break
                breaks.append(t)
                r *= 2.0
        breaks.append(t_foot)
    breaks = np.unique(np.clip(breaks, 0.0, 1.0))
    tn, wn = gauss01(nodes)
    total = 0.0
    for u0, u1 in zip(breaks[:-1], breaks[1:]):
        t = u0 + (u1 - u0) * tn
        p = p0[None, :] + t[:, None] * e[None, :]
        r2 = (p ** 2).sum(1)
        g = -(r2 ** (-0.5 * s)) / s * float(cross(p0, e)) / r2
        total += (u1 - u0) * float(wn @ g)
    return total


def _cell_potential(x, cx, cy, h, s, near):
    """int over the square cell [cx, cx+h] x [cy, cy+h] of |x - y|^(-2-s) dy,

    written as a boundary integral in polar coordinates about x. Edges on a
    line through x contribute nothing and are skipped; for a cell touching x
    the skipped half-disc term cancels against the neighbouring cell.
    """
    c = np.array([[cx, cy], [cx + h, cy], [cx + h, cy + h], [cx, cy + h]])
    total = 0.0
    for k in range(4):
        total += _edge_theta_integral(x, c[k], c[(k + 1) % 4], s,
                                      nodes=16 if near else _EDGE_NODES, grade=near)
    return total


def _far_potential(x, cx, cy, h, s):
    """Vectorized boundary integrals for cells well separated from x."""
    tn, wn = gauss01(_EDGE_NODES)
    total = np.zeros(len(cx))
    corners = [(0, 0), (1, 0), (1, 1), (0, 1)]
    for k in range(4):
        a = np.stack([cx + h * corners[k][0], cy + h * corners[k][1]], axis=1) - x
        b = np.stack([cx + h * corners[(k + 1) % 4][0], cy + h * corners[(k + 1) % 4][1]], axis=1) - x
        e = b - a
        cr = cross(a, e)
        p = a[:, None, :] + tn[None, :, None] * e[:, None, :]
        r2 = (p ** 2).sum(-1)
        g = -(r2 ** (-0.5 * s)) / s * cr[:, None] / r2
        total += g @ wn
    return total


def _translate_potential(dmap, x, g, s, split=1.0):
    """Principal-value potential of D + g at x, split into (near, far) parts."""
    px, py = dmap.positions()
    n = dmap.n
    h = 1.0 / n
    cx = (px + n * g[0]) * h
    cy = (py + n * g[1]) * h
    ctr_x = cx + 0.5 * h
    ctr_y = cy + 0.5 * h
    d = np.hypot(ctr_x - x[0], ctr_y - x[1])
    close = d < 3.0 * h
    vals = np.zeros(len(cx))
    if (~close).any():
        vals[~close] = _far_potential(x, cx[~close], cy[~close], h, s)
    for k in np.nonzero(close)[0]:
        vals[k] = _cell_potential(x, cx[k], cy[k], h, s, True)
    near = d < split
    return math.fsum(vals[near]), math.fsum(vals[~near])


def _interface_labels(dmap, x):
    """Labels of the two cells sharing the cell edge whose interior contains x."""
    n = dmap.n
    u = np.asarray(x, dtype=float) * n
    fu = np.floor(u)
    on_v = abs(u[0] - round(u[0])) < 1e-9
    on_h = abs(u[1] - round(u[1])) < 1e-9
    if on_v == on_h:
        raise InvalidArgument("x must lie in the interior of a grid edge")
    if on_v:
        X = int(round(u[0]))
        Y = int(fu[1])
        cells = [(X - 1, Y), (X, Y)]
    else:
        X = int(fu[0])
        Y = int(round(u[1]))
        cells = [(X, Y - 1), (X, Y)]
    return [tuple(int(v) for v in dmap.label(c[0], c[1])) for c in cells]


def equilibrium_terms(dmap, x, i, j, cfg):
    """Parts of the equilibrium residual at a boundary point x between D - i and D - j.

    The residual is the principal-value integral of (chi_{D-j} - chi_{D-i})
    against |x - y|^(-2-s) over the plane. Each translate's potential is a sum
    of exact cell integrals turned into boundary integrals; near (|y - x| < 1)
    and far parts are reported separately.
    """
    x = np.asarray(x, dtype=float)
    i = (int(i[0]), int(i[1]))
    j = (int(j[0]), int(j[1]))
    labs = _interface_labels(dmap, x)
    want = {(-i[0], -i[1]), (-j[0], -j[1])}
    if i == j or set(labs) != want:
        raise InvalidArgument(f"x = {tuple(x)} is not on the interface between D - {i} and D - {j}")
    ni, fi = _translate_potential(dmap, x, (-i[0], -i[1]), cfg.s)
    nj, fj = _translate_potential(dmap, x, (-j[0], -j[1]), cfg.s)
    near = nj - ni
    far = fj - fi
    return {"residual": (nj + fj) - (ni + fi), "near": near, "far": far}


def equilibrium_residual(dmap, x, i, j, cfg):
    return equilibrium_terms(dmap, x, i, j, cfg)["residual"]


# ----------------------------------------------------------------- report

@dataclass
class PartitionReport:
    energy: Interval
    junctions: JunctionReport
    diameter: dict
    components: int
    config: dict
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "energy": self.energy.to_dict(),
            "junctions": self.junctions.to_dict(),
            "diameter": self.diameter,
            "components": self.components,
            "config": self.config,
        }
        out.update(self.extra)
        return out


def partition_report(dmap, cfg, config=None, extra=None):
    return PartitionReport(
        periodic_frac_perimeter(dmap, cfg),
        map_junctions(dmap),
        diameter_check(dmap),
        components(dmap),
        config or {},
        extra or {},
    )


__all__ = [
    "FractionalConfig",
    "Junction",
    "JunctionReport",
    "PartitionReport",
    "PeriodicEnergy",
    "PixelDomainMap",
    "components",
    "diameter_check",
    "equilibrium_residual",
    "equilibrium_terms",
    "junction_structure",
    "lift",
    "map_junctions",
    "partition_report",
    "periodic_energy",
    "periodic_frac_perimeter",
    "polygon_junctions",
    "read_map",
    "translate_overlaps",
    "write_map",
]
