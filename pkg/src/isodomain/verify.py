"""Property suites behind ``verify``; each check records value, tolerance and outcome."""
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import anisotropy as an
from . import tiling as tl
from . import torus as tr
from .fractional import (
    FractionalConfig,
    PixelSet,
    frac_perimeter,
    frac_perimeter_local,
    interaction,
    lambda_constant,
    submodularity_residual,
    tail_mass,
)
from .geometry import Polygon, unit_square
from .optimizer import (
    degiorgi_iteration,
    degiorgi_threshold,
    incremental_delta,
    apply_move,
    local_search,
    make_rng,
)
from .schedule import AnnealSchedule

SUITES = ("anisotropy", "tiling", "fractional", "torus", "optimizer")
EUCLID_HEX = 2.0 * math.sqrt(2.0 + math.sqrt(3.0))


@dataclass
class Check:
    name: str
    passed: bool
    value: object = None
    tolerance: object = None
    detail: str = ""

    def to_dict(self):
        def clean(x):
            if isinstance(x, (np.floating, np.integer)):
                return x.item()
            if isinstance(x, (list, tuple)):
                return [clean(v) for v in x]
            return x

        return {"name": self.name, "passed": bool(self.passed), "value": clean(self.value),
                "tolerance": clean(self.tolerance), "detail": self.detail}


def _ellipse_table(k, a=1.0, b=1.6, tilt=0.3):
    """Samples of an elliptic norm; any convex norm sampled on a grid gives convex table data."""
    th = np.linspace(0, math.pi, k, endpoint=False)
    c, s = np.cos(th - tilt), np.sin(th - tilt)
    return an.NormSpec.tabulated(th, np.sqrt((a * c) ** 2 + (b * s) ** 2))


def _norms():
    return {
        "euclidean": an.NormSpec.euclidean(),
        "p1.5": an.NormSpec.pnorm(1.5),
        "p3": an.NormSpec.pnorm(3),
        "p4": an.NormSpec.pnorm(4),
        "l1": an.NormSpec.pnorm(1),
        "hex-crystal": an.NormSpec.crystalline(
            [(1, 0, 1.0), (0.5, math.sqrt(3) / 2, 1.0), (-0.5, math.sqrt(3) / 2, 1.0)]),
        "table": _ellipse_table(12),
    }


# ------------------------------------------------------------- anisotropy

def suite_anisotropy():
    out = []
    rng = make_rng(11)
    u = rng.normal(size=(200, 2))
    v = rng.normal(size=(200, 2))
    lam = rng.random(200) * 5
    for name, phi in _norms().items():
        fu = an.eval_norm(phi, u)
        hom = np.max(np.abs(an.eval_norm(phi, u * lam[:, None]) - lam * fu) / np.maximum(lam * fu, 1e-300))
        out.append(Check(f"{name}: 1-homogeneity", hom <= 1e-12, float(hom), 1e-12))
        sym = np.max(np.abs(an.eval_norm(phi, -u) - fu))
        out.append(Check(f"{name}: symmetry", sym <= 1e-13, float(sym), 1e-13))
        tri = np.max(an.eval_norm(phi, u + v) - fu - an.eval_norm(phi, v))
        out.append(Check(f"{name}: triangle inequality", tri <= 1e-12, float(tri), 1e-12))
        out.append(Check(f"{name}: positivity", bool(np.all(fu > 0)), float(fu.min()), "> 0"))
        hexa = tl.optimal_hexagon(an.NormSpec.euclidean(), (1, 0), (0, 1)).domain.polygon()
        p1 = an.polygon_perimeter(phi, hexa)
        p2 = an.polygon_perimeter(phi, hexa.scaled(3.7))
        rel = abs(p2 - 3.7 * p1) / (3.7 * p1)
        out.append(Check(f"{name}: perimeter homogeneity", rel <= 1e-12, rel, 1e-12))
        w = an.wulff_shape(phi, 360)
        dv = max(abs(an.dual_norm(phi, p) - 1.0) for p in w.vertices)
        out.append(Check(f"{name}: Wulff vertices on dual sphere", dv <= an.WULFF_TOL, dv, an.WULFF_TOL))
        gd = max(abs(an.dual_norm(phi, x) - an.dual_norm(phi, x, method="golden")) for x in u[:20])
        out.append(Check(f"{name}: dual closed form vs golden search", gd <= 1e-9, gd, 1e-9))
    for p in (1.5, 3.0, 4.0):
        q = p / (p - 1.0)
        primal = an.NormSpec.pnorm(p)
        dual = an.NormSpec.pnorm(q)
        err = max(abs(an.dual_norm(dual, x) - an.eval_norm(primal, x)) / an.eval_norm(primal, x) for x in u[:50])
        out.append(Check(f"p={p}: dual of dual equals primal", err <= 1e-8, err, 1e-8))
    E = an.NormSpec.euclidean()
    L1 = an.NormSpec.pnorm(1)
    ex = [
        ("eval euclidean (3,4)", an.eval_norm(E, (3, 4)), 5.0),
        ("eval l1 (1,-2)", an.eval_norm(L1, (1, -2)), 3.0),
        ("eval p=4 (1,1)", an.eval_norm(an.NormSpec.pnorm(4), (1, 1)), 2 ** 0.25),
        ("dual euclidean (0,2)", an.dual_norm(E, (0, 2)), 2.0),
        ("dual l1 (1,1)", an.dual_norm(L1, (1, 1)), 1.0),
        ("dual p=3 (1,1)", an.dual_norm(an.NormSpec.pnorm(3), (1, 1)), 2 ** (2 / 3)),
        ("segment l1 (1,1)", an.segment_cost(L1, (1, 1)), 2.0),
        ("perimeter euclidean square", an.polygon_perimeter(E, unit_square()), 4.0),
        ("perimeter l1 square", an.polygon_perimeter(L1, unit_square()), 4.0),
    ]
    for name, got, want in ex:
        out.append(Check(name, abs(got - want) <= 1e-12, got, want))
    return out


# ------------------------------------------------------------------ tiling

def tiling_coverage(tile, samples=10000, seed=3, tol=1e-9):
    """(misses, double covers) of sample points in the unit cell by translates of the tile."""
    rng = make_rng(seed)
    pts = rng.random((samples, 2))
    hits = np.zeros(samples, dtype=int)
    on_edge = np.zeros(samples, dtype=bool)
    reach = int(math.ceil(tile.diameter())) + 1
    for gx in range(-reach, reach + 1):
        for gy in range(-reach, reach + 1):
            inside, on = tile.translated((gx, gy)).contains(pts, tol)
            hits += inside
            on_edge |= on
    misses = int(np.count_nonzero((hits == 0) & ~on_edge))
    doubles = int(np.count_nonzero(hits > 1))
    return misses, doubles


def suite_tiling():
    out = []
    E = an.NormSpec.euclidean()
    res = tl.best_fundamental_polygon(E, 3)
    best = res.best
    poly = best.domain.polygon()
    ang = tl.interior_angles(poly)
    out.append(Check("euclidean optimum perimeter 3.8637033", abs(best.perimeter - EUCLID_HEX) <= 1e-6,
                     best.perimeter, 1e-6))
    out.append(Check("euclidean optimum is a hexagon", not best.is_parallelogram and len(poly) == 6, len(poly), 6))
    out.append(Check("euclidean optimum angles 120 deg", float(np.max(np.abs(ang - 120.0))) <= 0.1,
                     float(np.max(np.abs(ang - 120.0))), 0.1))
    out.append(Check("euclidean cutoff certificate", res.cutoff_ok, res.phi_min, "2 phi_min (bound+1) > best"))
    L1 = an.NormSpec.pnorm(1)
    r1 = tl.best_fundamental_polygon(L1, 3)
    out.append(Check("l1 optimum perimeter 4", abs(r1.best.perimeter - 4.0) <= 1e-8, r1.best.perimeter, 1e-8))
    out.append(Check("l1 tie set holds a parallelogram", any(t.is_parallelogram for t in r1.ties),
                     len(r1.ties), ">= 1"))
    # convexity of f(b)
    rng = make_rng(5)
    worst = -np.inf
    for phi in _norms().values():
        f = tl._objective(phi, np.array([1.0, 0.0]), np.array([1.0, 1.0]))
        b1 = rng.normal(size=(100, 2))
        b2 = rng.normal(size=(100, 2))
        t = rng.random(100)[:, None]
        gap = f(t * b1 + (1 - t) * b2) - (t[:, 0] * f(b1) + (1 - t[:, 0]) * f(b2))
        worst = max(worst, float(gap.max()))
    out.append(Check("f(b) convexity", worst <= 1e-12, worst, 1e-12))
    for name, phi in _norms().items():
        r = tl.best_fundamental_polygon(phi, 2)
        area = max(abs(s.domain.area() - 1.0) for s in r.ranked)
        shoelace = max(abs(s.domain.polygon(drop_degenerate=False).signed_area() - 1.0) for s in r.ranked)
        out.append(Check(f"{name}: area identity", max(area, shoelace) <= 1e-12, max(area, shoelace), 1e-12))
        conv = all(s.domain.is_convex() for s in r.ranked)
        out.append(Check(f"{name}: hexagons convex", conv, conv, True))
        diam = [tr.diameter_check(s.domain.polygon()) for s in r.ranked]
        out.append(Check(f"{name}: diameter bound", all(d["holds"] for d in diam),
                         max(d["diameter"] - d["bound"] for d in diam), "<= 0"))
        miss, dbl = tiling_coverage(r.best.domain.polygon(), samples=2000)
        out.append(Check(f"{name}: translates tile the plane", miss == 0 and dbl == 0, [miss, dbl], [0, 0]))
        j = tr.junction_structure(r.best)
        out.append(Check(f"{name}: junction degree <= 4", j.max_degree <= 4, j.max_degree, 4))
    miss, dbl = tiling_coverage(poly)
    out.append(Check("euclidean optimum covers 10^4 points once", miss == 0 and dbl == 0, [miss, dbl], [0, 0]))
    grid = np.linspace(0, math.pi / 2, 202)[1:-1]
    for name in ("euclidean", "p1.5", "p3", "p4"):
        phi = _norms()[name]
        both = 0
        margin = np.inf
        for a in grid:
            rep = tl.cross_instability_test(phi, a)
            both += rep.uno_holds and rep.due_holds
            margin = min(margin, max(rep.uno_excess, rep.due_excess))
        out.append(Check(f"{name}: cross instability never (true, true)", both == 0 and margin > 1e-9,
                         margin, "> 1e-9"))
    # tabulated norm whose Wulff shape is a lattice-tiling hexagon
    tile = tl.optimal_hexagon(an.NormSpec.pnorm(3), (1, 0), (0, 1)).domain.polygon()
    centred = Polygon(tile.vertices - tile.centroid())
    phi = an.NormSpec.from_support(centred)
    rt = tl.best_fundamental_polygon(phi, 3)
    target = an.polygon_perimeter(phi, an.normalized_wulff(phi))
    out.append(Check("Wulff-tile norm: optimum equals normalized Wulff perimeter",
                     abs(rt.best.perimeter - target) <= 1e-9, rt.best.perimeter - target, 1e-9))
    jh = tr.junction_structure(best)
    degs = sorted({j.degree for j in jh.junctions})
    angs = [a for j in jh.junctions for a in j.angles]
    out.append(Check("euclidean tiling junctions are triple points at 120 deg",
                     degs == [3] and max(abs(a - 120.0) for a in angs) <= 0.5, degs, [3]))
    out.append(Check("euclidean tile has 6 edges", jh.edges == 6, jh.edges, 6))
    return out


# -------------------------------------------------------------- fractional

def unit_square_oracle(s):
    """Per_s([0,1]^2) from the covariogram: int K(h) (1 - |Q n (Q+h)|) dh in polar form."""

    def radial(theta):
        c, sn = math.cos(theta), math.sin(theta)
        R = 1.0 / c
        return ((c + sn) * R ** (1 - s) / (1 - s) - c * sn * R ** (2 - s) / (2 - s) + R ** (-s) / s)

    val, err = integrate.quad(radial, 0.0, math.pi / 4, epsabs=1e-13, epsrel=1e-13)
    return 8.0 * val, 8.0 * err


def random_pixels(rng, n=8, size=8, p=0.5):
    bits = rng.random((size, size)) < p
    if not bits.any():
        bits[0, 0] = True
    return PixelSet(n, bits)


def suite_fractional(pairs=10):
    out = []
    rng = make_rng(21)
    for s in (0.3, 0.5, 0.8):
        cfg = FractionalConfig(s=s)
        worst = 0.0
        for _ in range(pairs):
            a = random_pixels(rng)
            b = random_pixels(rng)
            r = submodularity_residual(a, b, cfg)
            worst = max(worst, abs(r.value) - r.radius)
        out.append(Check(f"s={s}: submodularity residual within bracket", worst <= 0.0, worst, "<= 0"))
        E = random_pixels(rng)
        p1 = frac_perimeter(E, cfg)
        p2 = frac_perimeter(E.scaled(2), cfg)
        ratio = p2.value / p1.value
        tol = (p2.radius + ratio * p1.radius) / p1.value
        err = abs(ratio - 2 ** (2 - s))
        out.append(Check(f"s={s}: scaling Per(2E)/Per(E) = 2^(2-s)", err <= tol + 1e-13, err, tol))
        sq = frac_perimeter(PixelSet.rectangle(4, 0, 0, 4, 4), cfg)
        ref, rerr = unit_square_oracle(s)
        rel = abs(sq.value - ref) / ref
        out.append(Check(f"s={s}: unit square vs covariogram oracle", rel <= 5e-3, rel, 5e-3))
    for s in np.linspace(0.1, 0.9, 5):
        for t in (0.25, 0.5, 1.0, 2.0, 8.0):
            q, _ = integrate.quad(lambda r: 2 * math.pi * r ** (-1 - s), t, np.inf, epsabs=1e-13, epsrel=1e-13)
            err = abs(q - tail_mass(s, t))
            if err > 1e-8:
                out.append(Check(f"tail_mass({s:.2f}, {t})", False, err, 1e-8))
    out.append(Check("tail_mass closed form vs quadrature (5x5 grid)", True, None, 1e-8))
    lam = lambda_constant(0.5, 0.25)
    out.append(Check("lambda_constant(0.5, 0.25) = 4 pi sqrt 2", abs(lam - 4 * math.pi * math.sqrt(2)) <= 1e-8,
                     lam, 1e-8))
    cfg = FractionalConfig()
    A = random_pixels(rng)
    B = random_pixels(rng).translated(2.0, 0.0)
    jab = interaction(A, B, cfg)
    jba = interaction(B, A, cfg)
    out.append(Check("J symmetric (bitwise)", jab.value == jba.value, jab.value - jba.value, 0.0))
    B1 = PixelSet(8, B.bits & (np.arange(8)[None, :] < 4), B.origin)
    B2 = B - B1
    add = interaction(A, B1, cfg) + interaction(A, B2, cfg)
    out.append(Check("J additive over disjoint unions", abs(add.value - jab.value) <= add.radius + jab.radius,
                     add.value - jab.value, add.radius + jab.radius))
    q1 = PixelSet.rectangle(1, 0, 0, 1, 1)
    far = interaction(q1, q1.translated(10, 0), cfg)
    rel = abs(far.value - 10 ** -2.5) / 10 ** -2.5
    out.append(Check("far-field J ~ |A||B| K(d)", rel <= 0.01, rel, 0.01))
    # subadditivity defect for two disjoint windows
    E = PixelSet.rectangle(8, 0, 0, 24, 8)
    U1 = PixelSet.rectangle(8, 0, 0, 8, 8)
    U2 = PixelSet.rectangle(8, 1.5, 0, 8, 8)
    d = 0.5
    lhs = (frac_perimeter_local(E, U1, cfg) + frac_perimeter_local(E, U2, cfg)
           - frac_perimeter_local(E, U1 | U2, cfg))
    bound = (E & U1).area * tail_mass(0.5, d) + (E & U2).area * tail_mass(0.5, d)
    out.append(Check("subadditivity defect <= sum |E n U_i| tail(d_i)", lhs.value - lhs.radius <= bound,
                     lhs.value, bound))
    # local isoperimetric shape: Per(E, U) / |E n U|^((2-s)/2) stays bounded below across scales
    ratios = []
    for k in (1, 2, 4, 8):
        Ek = PixelSet.rectangle(8, 0, 0, k, k)
        ratios.append(frac_perimeter(Ek, cfg).value / Ek.area ** (1.5 / 2))
    spread = max(ratios) / min(ratios)
    out.append(Check("local isoperimetric ratio is scale free", spread <= 1 + 1e-9 and min(ratios) > 0,
                     min(ratios), "fitted C > 0"))
    return out


# ------------------------------------------------------------------- torus

def _l_map():
    """Unit square with its lower-left quarter moved one period to the right."""
    m = tr.PixelDomainMap.constant(8)
    m.zx[:4, :4] = 1
    return m


def suite_torus():
    out = []
    cfg = FractionalConfig()
    rng = make_rng(31)
    sq8 = tr.periodic_frac_perimeter(tr.PixelDomainMap.constant(8), cfg)
    free = frac_perimeter(PixelSet.rectangle(8, 0, 0, 8, 8), cfg)
    out.append(Check("z = 0: lattice-kernel sum equals free-space perimeter", sq8.overlaps(free),
                     sq8.value - free.value, sq8.radius + free.radius))
    for trial in range(3):
        m = tr.PixelDomainMap.random(8, 1, rng)
        ov = tr.translate_overlaps(m)
        area = tr.lift(m).area
        out.append(Check(f"random map {trial}: fundamental domain", ov == 0 and area == 1.0, [ov, area], [0, 1.0]))
        big = FractionalConfig(truncation_radius=6)
        e = tr.periodic_frac_perimeter(m, big)
        g = tr.periodic_frac_perimeter(m.shifted((1, 0)), big)
        out.append(Check(f"random map {trial}: gauge invariance (bitwise)", e.value == g.value, e.value - g.value, 0))
        e = tr.periodic_frac_perimeter(m, cfg)
        rot = tr.periodic_frac_perimeter(m.rotated(), cfg)
        ref = tr.periodic_frac_perimeter(m.reflected(), cfg)
        dev = max(abs(rot.value - e.value), abs(ref.value - e.value))
        out.append(Check(f"random map {trial}: rotation/reflection invariance", dev <= 1e-12, dev, 1e-12))
        fs = frac_perimeter(tr.lift(m), cfg)
        out.append(Check(f"random map {trial}: periodic equals free-space perimeter of the lift",
                         e.overlaps(fs, 1e-12), e.value - fs.value, e.radius + fs.radius))
    # refinement: the same geometry at N and 2N
    m = tr.PixelDomainMap.constant(8)
    m.zx[:4, :4] = 1
    m2 = tr.PixelDomainMap(16, 1, np.kron(m.zx, np.ones((2, 2), int)), np.kron(m.zy, np.ones((2, 2), int)))
    a = tr.periodic_frac_perimeter(m, cfg).value
    b = tr.periodic_frac_perimeter(m2, cfg).value
    out.append(Check("refinement N -> 2N agrees within 2%", abs(a - b) / b <= 0.02, abs(a - b) / b, 0.02))
    js = tr.junction_structure(tr.PixelDomainMap.constant(8))
    out.append(Check("unit square: degree-4 junctions", {j.degree for j in js.junctions} == {4},
                     sorted({j.degree for j in js.junctions}), [4]))
    d = tr.diameter_check(unit_square())
    out.append(Check("unit square diameter bound", d["holds"] and abs(d["diameter"] - math.sqrt(2)) < 1e-12,
                     d["diameter"], d["bound"]))
    # offsets depend on the row only; D is a unit square shifted down by 1/2
    stripe = tr.PixelDomainMap.constant(8)
    stripe.zy[4:, :] = -1
    r = tr.equilibrium_residual(stripe, (0.3125, 0.5), (0, 0), (0, -1), cfg)
    out.append(Check("stripe partition: flat interface in equilibrium", abs(r) <= 1e-8, r, 1e-8))
    Lm_corner = _l_map()
    near = abs(tr.equilibrium_residual(Lm_corner, (0.5, 0.4375), (1, 0), (0, 0), cfg))
    mid = abs(tr.equilibrium_residual(Lm_corner, (0.5, 0.0625), (1, 0), (0, 0), cfg))
    out.append(Check("L-shaped domain: residual larger next to the corner", near > mid, [near, mid], "near > mid"))
    Lm = _l_map()
    x = (0.5, 0.3125)
    labels = tr._interface_labels(Lm, x)
    i, j = (-labels[0][0], -labels[0][1]), (-labels[1][0], -labels[1][1])
    r1 = tr.equilibrium_residual(Lm, x, i, j, cfg)
    r2 = tr.equilibrium_residual(Lm, x, j, i, cfg)
    out.append(Check("equilibrium residual antisymmetric (exact)", r1 == -r2, r1 + r2, 0.0))
    return out


# --------------------------------------------------------------- optimizer

def suite_optimizer():
    out = []
    cfg = FractionalConfig()
    rng = make_rng(41)
    init = tr.PixelDomainMap.random(8, 1, rng)
    _, rep = local_search(init, cfg, AnnealSchedule(t0=0.0, sweeps=20, seed=1))
    traj = np.array(rep.extra["trajectory"])
    out.append(Check("zero temperature: energy non-increasing", bool(np.all(np.diff(traj) <= 0)),
                     float(np.max(np.diff(traj))), "<= 0"))
    a, ra = local_search(init, cfg, AnnealSchedule(sweeps=30, seed=7))
    b, rb = local_search(init, cfg, AnnealSchedule(sweeps=30, seed=7))
    same = np.array_equal(a.zx, b.zx) and np.array_equal(a.zy, b.zy) and ra.energy == rb.energy
    out.append(Check("same seed, same output", same, same, True))
    drift = abs(ra.extra["bookkeeping_drift"])
    out.append(Check("energy bookkeeping", drift <= 1e-8, drift, 1e-8))
    worst = 0.0
    for _ in range(10):
        cell = (int(rng.integers(8)), int(rng.integers(8)))
        new = (int(rng.integers(-1, 2)), int(rng.integers(-1, 2)))
        d = incremental_delta(init, cell, new, cfg)
        full = (tr.periodic_frac_perimeter(apply_move(init, cell, new), cfg).value
                - tr.periodic_frac_perimeter(init, cfg).value)
        worst = max(worst, abs(d - full))
    out.append(Check("incremental delta equals full re-evaluation", worst <= 1e-10, worst, 1e-10))
    cell = (3, 4)
    old = (int(init.zx[4, 3]), int(init.zy[4, 3]))
    new = (old[0] - 1 if old[0] > -1 else 1, old[1])
    fwd = incremental_delta(init, cell, new, cfg)
    back = incremental_delta(apply_move(init, cell, new), cell, old, cfg)
    out.append(Check("move then inverse move sums to zero", abs(fwd + back) <= 1e-12, fwd + back, 1e-12))
    out.append(Check("no-op move has zero delta", incremental_delta(init, cell, old, cfg) == 0.0, 0.0, 0.0))
    t = degiorgi_iteration(0.5, 1.0, 2.0, 0.25, 3)["trajectory"]
    out.append(Check("De Giorgi hand case u0 = 1/4", t == [0.25, 1 / 16, 1 / 64, 1 / 256], t,
                     [0.25, 1 / 16, 1 / 64, 1 / 256]))
    r = degiorgi_iteration(0.5, 1.0, 2.0, 0.5, 3)
    out.append(Check("De Giorgi hand case u0 = 1/2", r["trajectory"] == [0.5, 0.25, 0.25, 1.0], r["trajectory"],
                     [0.5, 0.25, 0.25, 1.0]))
    out.append(Check("De Giorgi u0 = 1/2 diverges", not degiorgi_iteration(0.5, 1.0, 2.0, 0.5)["converges"],
                     False, False))
    out.append(Check("De Giorgi u0 = 0 converges", degiorgi_iteration(0.5, 1.0, 2.0, 0.0)["converges"], True, True))
    bad = 0
    for _ in range(20):
        al = float(rng.uniform(0.2, 0.8))
        M = float(rng.uniform(0.5, 4.0))
        L = float(rng.uniform(1.5, 4.0))
        thr = degiorgi_threshold(al, M, L)
        for u0 in (thr, thr / 2):
            bad += not degiorgi_iteration(al, M, L, u0, k_max=500)["converges"]
    out.append(Check("De Giorgi converges at and below threshold (20 samples)", bad == 0, bad, 0))
    return out


SUITE_FUNCS = {
    "anisotropy": suite_anisotropy,
    "tiling": suite_tiling,
    "fractional": suite_fractional,
    "torus": suite_torus,
    "optimizer": suite_optimizer,
}


def run_verify(suite):
    """Run a suite (or ``all``); returns (all passed, JSON-ready report)."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITE_FUNCS:
        names = [suite]
    else:
        raise KeyError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    report = {"suite": suite, "suites": {}}
    ok = True
    for name in names:
        checks = SUITE_FUNCS[name]()
        report["suites"][name] = [c.to_dict() for c in checks]
        ok &= all(c.passed for c in checks)
    report["passed"] = bool(ok)
    return ok, report
