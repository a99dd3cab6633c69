import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.cluster.hierarchy import DisjointSet
from scipy.optimize import minimize
from shapely.geometry import Polygon as SPolygon
from shapely.geometry import box
from shapely.ops import unary_union

from isodomain import anisotropy as an
from isodomain import tiling as tl
from isodomain.errors import InvalidArgument
from isodomain.geometry import Polygon
from isodomain.torus import diameter_check

E = an.NormSpec.euclidean()
L1 = an.NormSpec.pnorm(1)
P3 = an.NormSpec.pnorm(3)
HEX = an.NormSpec.crystalline([(1, 0, 1.0), (0.5, math.sqrt(3) / 2, 0.7), (-0.5, math.sqrt(3) / 2, 1.3)])
EUCLID_HEX = 2.0 * math.sqrt(2.0 + math.sqrt(3.0))


def fermat_total_distance(A, B, C):
    """Closed-form Fermat total distance for a triangle with all angles < 120 degrees."""
    a2 = sum((np.subtract(B, C)) ** 2)
    b2 = sum((np.subtract(A, C)) ** 2)
    c2 = sum((np.subtract(A, B)) ** 2)
    area = 0.5 * abs((B[0] - A[0]) * (C[1] - A[1]) - (B[1] - A[1]) * (C[0] - A[0]))
    return math.sqrt((a2 + b2 + c2) / 2 + 2 * math.sqrt(3) * area)


def direct_f(phi, t1, t2):
    """f(b) written out from the edge vectors, independent of the solver's objective."""
    def f(b):
        b = np.asarray(b, float)
        tot = 0.0
        for e in (np.subtract(t1, b), b, np.subtract(t2, b)):
            tot += an.eval_norm(phi, (-e[1], e[0]))
        return tot
    return f


def grid_min(f, t1, t2, k=400):
    best = math.inf
    for i in range(k + 1):
        for j in range(k + 1 - i):
            b = (i / k) * np.asarray(t1, float) + (j / k) * np.asarray(t2, float)
            best = min(best, f(b))
    return best


def nelder_mead_min(f, t1, t2, starts=12, seed=0):
    rng = np.random.default_rng(seed)
    best = math.inf
    t1 = np.asarray(t1, float)
    t2 = np.asarray(t2, float)
    for _ in range(starts):
        w = rng.dirichlet([1, 1, 1])
        x0 = w[1] * t1 + w[2] * t2
        res = minimize(f, x0, method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
        best = min(best, res.fun)
    return best


# ------------------------------------------------------------- HexagonDomain

@given(st.integers(0, 29), st.floats(-3, 3), st.floats(-3, 3))
def test_area_identity(k, bx, by):
    t1, t2 = tl.enumerate_bases(3)[k]
    dom = tl.HexagonDomain(t1, t2, (bx, by))
    assert dom.area() == pytest.approx(1.0, abs=1e-12)
    assert dom.polygon(drop_degenerate=False).signed_area() == pytest.approx(1.0, abs=1e-11)


@given(st.integers(0, 29), st.floats(0, 1), st.floats(0, 1))
def test_convex_iff_b_in_triangle(k, u, v):
    t1, t2 = (np.asarray(x, float) for x in tl.enumerate_bases(3)[k])
    b = u * t1 + v * t2
    dom = tl.HexagonDomain(tuple(t1.astype(int)), tuple(t2.astype(int)), tuple(b))
    inside = u + v <= 1.0
    if abs(u + v - 1.0) > 1e-9:
        assert dom.is_convex() == inside


def test_translates_share_edges():
    dom = tl.HexagonDomain((1, 0), (0, 1), (0.375, 0.25))
    P = SPolygon(dom.vertices())
    for t in dom.translations():
        Q = SPolygon(dom.vertices() + t)
        shared = P.intersection(Q)
        assert shared.area < 1e-12
        assert shared.length > 0.1


# ----------------------------------------------------------- enumerate_bases

def union_find_classes(bound):
    r = range(-bound, bound + 1)
    vecs = [(x, y) for x in r for y in r if (x, y) != (0, 0)]
    bases = [(a, b) for a in vecs for b in vecs if a[0] * b[1] - a[1] * b[0] == 1]
    present = set(bases)
    ds = DisjointSet(bases)
    for a, b in bases:
        for c in (((-a[0], -a[1]), (-b[0], -b[1])), (b, (b[0] - a[0], b[1] - a[1]))):
            if c in present:
                ds.merge((a, b), c)
    return ds.n_subsets


@pytest.mark.parametrize("bound", [1, 2, 3, 4])
def test_enumeration_count_matches_brute_force(bound):
    assert len(tl.enumerate_bases(bound)) == union_find_classes(bound)


def test_enumeration_examples():
    b1 = tl.enumerate_bases(1)
    assert ((1, 0), (0, 1)) in b1
    assert all(((1, 0), (2, 1)) != b for b in b1)
    assert b1[0] == ((1, 0), (0, 1))
    assert [len(tl.enumerate_bases(k)) for k in (1, 2, 3)] == [6, 14, 30]


def test_enumeration_sorted_and_valid():
    bases = tl.enumerate_bases(3)
    mags = [max(abs(x) for v in b for x in v) for b in bases]
    assert mags == sorted(mags)
    for t1, t2 in bases:
        assert t1[0] * t2[1] - t1[1] * t2[0] == 1


def test_enumeration_rejects_bad_bound():
    with pytest.raises(InvalidArgument):
        tl.enumerate_bases(0)


# ------------------------------------------------------------ optimal_hexagon

def test_euclidean_fermat_closed_form():
    sol = tl.optimal_hexagon(E, (1, 0), (0, 1))
    want = fermat_total_distance((0, 0), (1, 0), (0, 1))
    assert want == pytest.approx(math.sqrt(2 + math.sqrt(3)), rel=1e-15)
    assert sol.perimeter / 2 == pytest.approx(want, abs=1e-10)
    assert sol.perimeter == pytest.approx(EUCLID_HEX, abs=1e-10)


def test_euclidean_fermat_grid_search():
    f = direct_f(E, (1, 0), (0, 1))
    g = grid_min(f, (1, 0), (0, 1), k=300)
    sol = tl.optimal_hexagon(E, (1, 0), (0, 1))
    assert sol.perimeter / 2 <= g + 1e-12
    assert g - sol.perimeter / 2 < 1e-4


def test_fermat_point_location():
    # for the right isosceles triangle the Fermat point is ((3 - sqrt 3)/6)(1, 1)
    sol = tl.optimal_hexagon(E, (1, 0), (0, 1))
    want = (3 - math.sqrt(3)) / 6
    assert np.allclose(sol.domain.b, (want, want), atol=1e-6)


def test_l1_parallelogram():
    sol = tl.optimal_hexagon(L1, (1, 0), (0, 1))
    assert sol.perimeter == pytest.approx(4.0, abs=1e-12)
    assert sol.is_parallelogram
    f = direct_f(L1, (1, 0), (0, 1))
    assert grid_min(f, (1, 0), (0, 1), k=60) == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("phi", [E, P3, HEX, L1], ids=["euclid", "p3", "hex", "l1"])
@pytest.mark.parametrize("basis", [((1, 0), (0, 1)), ((1, 0), (1, 1)), ((2, 1), (1, 1)), ((1, -1), (1, 0))])
def test_optimal_hexagon_beats_independent_minimizers(phi, basis):
    t1, t2 = basis
    sol = tl.optimal_hexagon(phi, t1, t2)
    f = direct_f(phi, t1, t2)
    assert sol.perimeter / 2 == pytest.approx(f(sol.domain.b), abs=1e-13)
    assert sol.perimeter / 2 <= nelder_mead_min(f, t1, t2) + 1e-10
    assert sol.perimeter / 2 <= grid_min(f, t1, t2, k=80) + 1e-12


def test_b_zero_gives_parallelogram_formula():
    for phi in (E, P3, HEX):
        f = direct_f(phi, (1, 0), (1, 1))
        assert 2 * f((0.0, 0.0)) == pytest.approx(tl.parallelogram_perimeter(phi, (1, 0), (1, 1)), rel=1e-14)


def test_perimeter_is_twice_segment_sum():
    sol = tl.optimal_hexagon(P3, (1, 0), (0, 1))
    a, b, c = sol.domain.edge_vectors
    want = 2 * sum(an.segment_cost(P3, e) for e in (a, b, c))
    assert sol.perimeter == pytest.approx(want, rel=1e-15)


def test_optimal_hexagon_rejects_bad_basis():
    with pytest.raises(InvalidArgument):
        tl.optimal_hexagon(E, (1, 0), (1, 2))
    with pytest.raises(InvalidArgument):
        tl.optimal_hexagon(E, (0, 1), (1, 0))


# --------------------------------------------------- best_fundamental_polygon

def test_euclidean_best():
    res = tl.best_fundamental_polygon(E, 3)
    poly = res.best.domain.polygon()
    assert res.best.perimeter == pytest.approx(EUCLID_HEX, abs=1e-6)
    assert not res.best.is_parallelogram
    assert len(poly) == 6
    assert np.all(np.abs(tl.interior_angles(poly) - 120.0) <= 0.1)
    assert res.cutoff_ok
    assert [r.perimeter for r in res.ranked] == sorted(r.perimeter for r in res.ranked)


def test_l1_best_with_ties():
    res = tl.best_fundamental_polygon(L1, 3)
    assert res.best.perimeter == pytest.approx(4.0, abs=1e-8)
    assert any(t.is_parallelogram for t in res.ties)
    assert res.best.domain.t1 == (1, 0) and res.best.domain.t2 == (0, 1)


def test_l1_optimum_is_normalized_wulff_perimeter():
    w = an.normalized_wulff(L1)
    assert an.polygon_perimeter(L1, w) == pytest.approx(4.0, abs=1e-12)


def test_wulff_tile_norm():
    tile = tl.optimal_hexagon(P3, (1, 0), (0, 1)).domain.polygon()
    phi = an.NormSpec.from_support(Polygon(tile.vertices - tile.centroid()))
    res = tl.best_fundamental_polygon(phi, 3)
    target = an.polygon_perimeter(phi, an.normalized_wulff(phi))
    assert res.best.perimeter == pytest.approx(target, abs=1e-9)


def test_cutoff_certificate_is_sound():
    # every basis of the next shell costs at least 2 phi_min (bound + 1)
    res = tl.best_fundamental_polygon(P3, 2)
    assert res.cutoff_ok
    extra = [b for b in tl.enumerate_bases(3) if max(abs(x) for v in b for x in v) == 3]
    worst = min(tl.optimal_hexagon(P3, *b).perimeter for b in extra)
    assert worst >= 2 * res.phi_min * 3 - 1e-12
    assert worst > res.best.perimeter


@pytest.mark.parametrize("phi", [E, P3, HEX, L1], ids=["euclid", "p3", "hex", "l1"])
def test_diameter_bound_on_solutions(phi):
    for sol in tl.best_fundamental_polygon(phi, 2).ranked:
        d = diameter_check(sol.domain.polygon())
        assert d["holds"]


def test_search_is_deterministic():
    a = tl.search_to_dict(tl.best_fundamental_polygon(HEX, 2))
    b = tl.search_to_dict(tl.best_fundamental_polygon(HEX, 2))
    assert a == b


# --------------------------------------------------------- cross instability

def test_cross_euclidean_pi_over_4():
    rep = tl.cross_instability_test(E, math.pi / 4)
    assert not rep.uno_holds
    assert rep.uno_excess == pytest.approx(2 - math.sqrt(2), abs=1e-12)


def test_cross_euclidean_small_alpha():
    assert not tl.cross_instability_test(E, 1e-3).uno_holds


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.0])
def test_cross_never_both(p):
    phi = an.NormSpec.pnorm(p)
    for a in np.linspace(0, math.pi / 2, 52)[1:-1]:
        rep = tl.cross_instability_test(phi, a)
        assert not (rep.uno_holds and rep.due_holds)
        assert max(rep.uno_excess, rep.due_excess) > 1e-9


def test_cross_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        tl.cross_instability_test(E, 0.0)
    with pytest.raises(InvalidArgument):
        tl.cross_instability_test(E, math.pi / 2)
    with pytest.raises(InvalidArgument):
        tl.cross_instability_test(L1, 0.5)


@given(st.floats(0.01, 1.56), st.floats(1.2, 6.0))
def test_cross_sum_contradiction(alpha, p):
    # the two excesses add up to 2[phi(n1)+phi(n2)] - phi(n2-n1) - phi(n1+n2) > 0
    phi = an.NormSpec.pnorm(p)
    rep = tl.cross_instability_test(phi, alpha)
    n1 = np.array([0.0, 1.0])
    n2 = np.array([-math.sin(2 * alpha), math.cos(2 * alpha)])
    gap = 2 * (an.eval_norm(phi, n1) + an.eval_norm(phi, n2)) - an.eval_norm(phi, n2 - n1) - an.eval_norm(phi, n1 + n2)
    assert rep.uno_excess + rep.due_excess == pytest.approx(gap, abs=1e-9)


# ------------------------------------------------------------- rendering

def test_render_nine_hexagons_disjoint():
    sol = tl.best_fundamental_polygon(E, 3).best
    polys = [SPolygon(p.vertices) for p in tl.tiling_polygons(sol, 3)]
    assert len(polys) == 9
    for i in range(9):
        assert polys[i].area == pytest.approx(1.0, abs=1e-9)
        for j in range(i + 1, 9):
            assert polys[i].intersection(polys[j]).area < 1e-9
    svg = tl.render_tiling(sol, 3)
    assert svg.count("<path") == 9
    assert svg == tl.render_tiling(sol, 3)


def test_render_parallelogram_covers_window():
    sol = tl.best_fundamental_polygon(L1, 3).best
    polys = tl.tiling_polygons(sol, 2)
    assert len(polys) == 4
    u = unary_union([SPolygon(p.vertices) for p in polys])
    assert u.intersection(box(0, 0, 2, 2)).area == pytest.approx(4.0, abs=1e-9)


@pytest.mark.parametrize("phi", [E, P3, HEX, L1], ids=["euclid", "p3", "hex", "l1"])
def test_single_copy_area_and_cover(phi):
    sol = tl.best_fundamental_polygon(phi, 2).best
    (p,) = tl.tiling_polygons(sol, 1)
    assert p.area() == pytest.approx(1.0, abs=1e-9)
    shifted = [SPolygon(p.vertices + (gx, gy)) for gx in range(-4, 5) for gy in range(-4, 5)]
    cell = box(0, 0, 1, 1)
    covered = unary_union([s.intersection(cell) for s in shifted])
    assert covered.area == pytest.approx(1.0, abs=1e-9)
    assert sum(s.intersection(cell).area for s in shifted) == pytest.approx(1.0, abs=1e-9)


def test_render_rejects_zero_copies():
    sol = tl.optimal_hexagon(E, (1, 0), (0, 1))
    with pytest.raises(InvalidArgument):
        tl.tiling_polygons(sol, 0)


# -------------------------------------------------------------- properties

@given(st.sampled_from([E, P3, HEX]), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2),
       st.floats(0, 1))
def test_objective_convex(phi, x1, y1, x2, y2, lam):
    f = tl._objective(phi, (1, 0), (1, 1))
    b1 = np.array([x1, y1])
    b2 = np.array([x2, y2])
    mid = f(lam * b1 + (1 - lam) * b2)[0]
    assert mid <= lam * f(b1)[0] + (1 - lam) * f(b2)[0] + 1e-12
