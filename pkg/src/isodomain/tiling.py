"""Least-perimeter lattice tiles among centrally symmetric hexagons and parallelograms.

A unimodular basis (t1, t2) and a free point b give the hexagon with edge
vectors a = t1 - b, b, c = t2 - b and vertices 0, a, a+b, a+b+c, b+c, c. Its
translates by t1, t2 and t2 - t1 share edges with it, and its area is
det(t1, t2) = 1 whatever b is. Convexity holds exactly when b lies in the
closed triangle {0, t1, t2}; b at a corner collapses one edge pair and gives
a parallelogram.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from . import anisotropy as an
from .errors import InvalidArgument
from .geometry import Polygon, cross

PARALLELOGRAM_TOL = 1e-8
TIE_TOL = 1e-9
STEP_MIN = 1e-13


@dataclass(frozen=True, eq=False)
class HexagonDomain:
    t1: tuple
    t2: tuple
    b: tuple

    @property
    def edge_vectors(self):
        t1, t2, b = (np.asarray(x, dtype=float) for x in (self.t1, self.t2, self.b))
        return t1 - b, b, t2 - b

    def vertices(self):
        a, b, c = self.edge_vectors
        return np.array([[0.0, 0.0], a, a + b, a + b + c, b + c, c])

    def polygon(self, drop_degenerate=True):
        """The tile as a Polygon; vanishing edges are removed by default."""
        v = self.vertices()
        if drop_degenerate:
            e = np.roll(v, -1, axis=0) - v
            keep = np.hypot(e[:, 0], e[:, 1]) >= PARALLELOGRAM_TOL
            v = v[keep]
        return Polygon(v)

    def area(self):
        a, b, c = self.edge_vectors
        return float(cross(a, b) + cross(a, c) + cross(b, c))

    def is_convex(self, tol=1e-12):
        a, b, c = self.edge_vectors
        seq = [a, b, c, -a, -b, -c]
        turns = [float(cross(seq[i], seq[(i + 1) % 6])) for i in range(6)]
        return all(t >= -tol for t in turns)

    def is_parallelogram(self):
        return min(float(np.hypot(*e)) for e in self.edge_vectors) < PARALLELOGRAM_TOL

    def translations(self):
        t1 = np.asarray(self.t1)
        t2 = np.asarray(self.t2)
        return [t1, t2, t2 - t1]


@dataclass(frozen=True, eq=False)
class TilingSolution:
    domain: HexagonDomain
    perimeter: float
    is_parallelogram: bool
    basis_rank: int

    def to_dict(self):
        return {
            "t1": [int(x) for x in self.domain.t1],
            "t2": [int(x) for x in self.domain.t2],
            "b": [float(x) for x in self.domain.b],
            "perimeter": float(self.perimeter),
            "is_parallelogram": bool(self.is_parallelogram),
            "basis_rank": int(self.basis_rank),
        }


@dataclass(frozen=True, eq=False)
class TilingSearch:
    """Result of a bounded search over bases."""

    best: TilingSolution
    ranked: list
    ties: list
    phi_min: float
    bound: int
    cutoff_ok: bool
    extra: dict = field(default_factory=dict)


# ------------------------------------------------------------------ bases

def _det(t1, t2):
    return t1[0] * t2[1] - t1[1] * t2[0]


def _class_key(t1, t2):
    """The translation triple {+-t1, +-t2, +-(t2 - t1)}, which fixes the tiling family."""
    d = (t2[0] - t1[0], t2[1] - t1[1])
    vecs = []
    for v in (tuple(t1), tuple(t2), d):
        w = (-v[0], -v[1])
        vecs.append(max(v, w))
    return tuple(sorted(vecs))


def _rank_key(t1, t2):
    m = max(abs(t1[0]), abs(t1[1]), abs(t2[0]), abs(t2[1]))
    neg = sum(x < 0 for x in (*t1, *t2))
    return (m, neg, tuple(t1), tuple(t2))


def enumerate_bases(bound):
    """Positively oriented unimodular bases with entries in [-bound, bound].

    Bases spanning the same translation triple give the same family of tiles
    and are merged; (t1, t2), (-t1, -t2) and the cyclic shift
    (t1, t2) -> (t2, t2 - t1) are the generators of that equivalence. Each
    class is represented by its smallest in-range member under the key
    (max |entry|, number of negative entries, t1, t2); classes come back in
    that order.
    """
    bound = int(bound)
    if bound < 1:
        raise InvalidArgument(f"bound must be >= 1, got {bound}")
    rng = range(-bound, bound + 1)
    vecs = [(x, y) for x in rng for y in rng if (x, y) != (0, 0)]
    reps = {}
    for t1 in vecs:
        for t2 in vecs:
            if _det(t1, t2) != 1:
                continue
            key = _class_key(t1, t2)
            cand = _rank_key(t1, t2)
            if key not in reps or cand < reps[key]:
                reps[key] = cand
    return [(r[2], r[3]) for r in sorted(reps.values())]


# --------------------------------------------------------------- objective

def _objective(phi, t1, t2):
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)

    def f(bs):
        bs = np.atleast_2d(bs)
        vec = np.concatenate([t1 - bs, bs, t2 - bs])
        cost = an.segment_cost(phi, vec)
        k = len(bs)
        return cost[:k] + cost[k:2 * k] + cost[2 * k:]

    return f


def _kink_directions(phi):
    """Directions along which f(b) may fail to be differentiable."""
    if phi.kind == "crystalline":
        d = np.array([(x, y) for x, y, _ in phi.directions], dtype=float)
    elif phi.kind == "table":
        _, _, pts = an._table_polygon(phi)
        d = -an.perp(pts)
    else:
        return np.zeros((0, 2))
    return d / np.hypot(d[:, 0], d[:, 1])[:, None]


def _directions(phi, t1, t2):
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)
    base = [
        (1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, -1.0),
        t1, t2, t2 - t1, t1 + t2, 2 * t1 - t2, 2 * t2 - t1,
    ]
    d = np.concatenate([np.array(base, dtype=float), _kink_directions(phi)])
    d = d / np.hypot(d[:, 0], d[:, 1])[:, None]
    return np.concatenate([d, -d])


def _in_triangle(bs, t1, t2, tol=1e-14):
    """Barycentric feasibility of each point for the triangle {0, t1, t2}."""
    u = cross(bs, t2)
    v = cross(t1, bs)
    return (u >= -tol) & (v >= -tol) & (u + v <= 1.0 + tol)


def _pattern_search(f, x0, dirs, t1, t2, step, step_min, max_iter=20000):
    x = np.asarray(x0, dtype=float)
    fx = float(f(x)[0])
    it = 0
    while step > step_min and it < max_iter:
        it += 1
        cand = x[None, :] + step * dirs
        ok = _in_triangle(cand, t1, t2)
        if not ok.any():
            step *= 0.5
            continue
        vals = np.full(len(cand), np.inf)
        vals[ok] = f(cand[ok])
        k = int(np.argmin(vals))
        if vals[k] < fx:
            x, fx = cand[k], float(vals[k])
            step *= 2.0
        else:
            step *= 0.5
    return x, fx


def _snap(b, t1, t2, f, fb):
    """Move b onto a triangle corner when that does not cost anything."""
    best_b, best_f = b, fb
    for corner in (np.zeros(2), t1, t2):
        fc = float(f(corner)[0])
        if fc <= best_f + 1e-13 and np.hypot(*(b - corner)) < 1e-6:
            best_b, best_f = corner.copy(), min(fc, best_f)
    return best_b, best_f


def optimal_hexagon(phi, t1, t2, seed=0, basis_rank=0):
    """Minimize f(b) = phi((t1-b)_perp) + phi(b_perp) + phi((t2-b)_perp) over the triangle.

    f is convex; a multi-start pattern search with a shrinking step and a
    direction set containing every possible kink direction of a polygonal
    norm reaches the minimum to round-off in function value.
    """
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)
    det = float(cross(t1, t2))
    if abs(abs(det) - 1.0) > 1e-12:
        raise InvalidArgument(f"basis must be unimodular, |det| = {abs(det)}")
    if det < 0:
        raise InvalidArgument("basis must be positively oriented (det = +1)")
    f = _objective(phi, t1, t2)
    dirs = _directions(phi, t1, t2)
    rng = np.random.default_rng(seed)
    w = rng.dirichlet([1.0, 1.0, 1.0])
    starts = [
        (t1 + t2) / 3.0,
        t1 / 2.0,
        t2 / 2.0,
        (t1 + t2) / 2.0,
        w[1] * t1 + w[2] * t2,
        np.zeros(2), t1, t2,
    ]
    scale = 0.25 * max(np.hypot(*t1), np.hypot(*t2))
    results = [_pattern_search(f, s, dirs, t1, t2, scale, 1e-5, max_iter=400) for s in starts]
    results.sort(key=lambda r: r[1])
    b, fb = _pattern_search(f, results[0][0], dirs, t1, t2, 1e-4, STEP_MIN)
    b, fb = _snap(b, t1, t2, f, fb)
    dom = HexagonDomain(tuple(int(round(x)) for x in t1), tuple(int(round(x)) for x in t2),
                        (float(b[0]), float(b[1])))
    return TilingSolution(dom, 2.0 * fb, dom.is_parallelogram(), basis_rank)


def parallelogram_perimeter(phi, t1, t2):
    return 2.0 * (an.segment_cost(phi, t1) + an.segment_cost(phi, t2))


def best_fundamental_polygon(phi, bound=3, seed=0):
    bases = enumerate_bases(bound)
    ranked = [optimal_hexagon(phi, t1, t2, seed=seed, basis_rank=k) for k, (t1, t2) in enumerate(bases)]
    ordered = sorted(ranked, key=lambda r: (r.perimeter, r.basis_rank))
    best_val = ordered[0].perimeter
    ties = [r for r in ordered if r.perimeter <= best_val + TIE_TOL]
    best = min(ties, key=lambda r: r.basis_rank)
    phi_min = an.min_unit_cost(phi)
    # grid minimum may overshoot the true minimum by a relative O(grid^2) amount
    phi_min *= 1.0 - 1e-5
    cutoff_ok = 2.0 * phi_min * (bound + 1) > best.perimeter
    return TilingSearch(best, ordered, ties, phi_min, int(bound), bool(cutoff_ok))


def search_to_dict(search, norm_desc=None):
    return {
        "norm": norm_desc,
        "bound": search.bound,
        "best": search.best.to_dict(),
        "ranked": [r.to_dict() for r in search.ranked],
        "ties": [r.basis_rank for r in search.ties],
        "certificate": {"phi_min": search.phi_min, "cutoff_ok": search.cutoff_ok},
    }


def interior_angles(polygon):
    """Interior angles in degrees (ccw polygon)."""
    v = polygon.vertices
    e_in = v - np.roll(v, 1, axis=0)
    e_out = np.roll(v, -1, axis=0) - v
    turn = np.arctan2(cross(e_in, e_out), np.einsum("ij,ij->i", e_in, e_out))
    return 180.0 - np.degrees(turn)


# ----------------------------------------------------------- cross instability

@dataclass(frozen=True)
class CrossReport:
    alpha: float
    uno_holds: bool
    due_holds: bool
    uno_excess: float
    due_excess: float

    def to_dict(self):
        return dict(self.__dict__)


def cross_instability_test(phi, alpha, margin_tol=1e-12):
    """Check the two first-order stability inequalities for a degree-4 junction.

    Four edges meeting at angle 2*alpha are compared with the two ways of
    splitting the junction into a pair of triple points. ``*_excess`` is
    LHS - RHS; an inequality holds when its excess is <= margin_tol.
    """
    if not phi.strict:
        raise InvalidArgument("cross_instability_test needs a norm flagged strictly convex and differentiable")
    if not (0.0 < alpha < math.pi / 2):
        raise InvalidArgument(f"alpha must lie in (0, pi/2), got {alpha}")
    s2, c2 = math.sin(2 * alpha), math.cos(2 * alpha)
    nu1 = np.array([0.0, 1.0])
    nu2 = np.array([-s2, c2])
    tau1 = np.array([1.0, 0.0])
    tau2 = np.array([c2, s2])
    base = an.eval_norm(phi, nu1) + an.eval_norm(phi, nu2)
    slope = float(an.gradient(phi, nu1) @ tau1 + an.gradient(phi, nu2) @ tau2)
    uno = 2 * math.cos(alpha) ** 2 * base - (an.eval_norm(phi, nu1 + nu2) + s2 * slope)
    due = 2 * math.sin(alpha) ** 2 * base - (an.eval_norm(phi, nu2 - nu1) - s2 * slope)
    return CrossReport(float(alpha), uno <= margin_tol, due <= margin_tol, float(uno), float(due))


# --------------------------------------------------------------- rendering

def tiling_polygons(solution, copies):
    if copies < 1:
        raise InvalidArgument(f"copies must be >= 1, got {copies}")
    p = solution.domain.polygon()
    return [p.translated((i, j)) for j in range(copies) for i in range(copies)]


def render_tiling(solution, copies=3):
    from .svg import polygons_svg

    polys = tiling_polygons(solution, copies)
    return polygons_svg(polys, title=f"perimeter {solution.perimeter:.10f}")
