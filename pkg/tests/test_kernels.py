import json
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isodomain import kernels
from isodomain._accel import USE_NUMBA
from isodomain.fractional import FractionalConfig
from isodomain.optimizer import _dense_table, _scale, make_rng
from isodomain.torus import PixelDomainMap

needs_numba = pytest.mark.skipif(not USE_NUMBA, reason="numba disabled")
CFG = FractionalConfig(s=0.5)


def brute_counts(a, b, radius):
    out = np.zeros((radius + 1, radius + 1), dtype=np.int64)
    for p in a:
        for q in b:
            dx, dy = abs(int(q[0] - p[0])), abs(int(q[1] - p[1]))
            out[max(dx, dy), min(dx, dy)] += 1
    return out


points = st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=25)


@given(points, points)
def test_class_counts_numpy_against_loop(a, b):
    a, b = np.array(a), np.array(b)
    assert np.array_equal(kernels.class_counts_numpy(a, b, 12), brute_counts(a, b, 12))


@needs_numba
@given(points, points)
def test_class_counts_flavours_agree(a, b):
    a, b = np.array(a), np.array(b)
    assert np.array_equal(kernels.class_counts_numba(a, b, 12), kernels.class_counts_numpy(a, b, 12))


def test_class_counts_radius_guard():
    a = np.array([[0, 0]])
    b = np.array([[5, 0]])
    with pytest.raises(ValueError):
        kernels.class_counts_numpy(a, b, 4)


def state(seed, n=8, w=1):
    m = PixelDomainMap.random(n, w, make_rng(seed))
    px, py = m.positions()
    return m, px, py, m.zx.ravel().copy(), m.zy.ravel().copy(), _dense_table(m, CFG), _scale(m, CFG)


@needs_numba
@settings(max_examples=20)
@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 63))
def test_move_delta_flavours_agree(seed, c):
    m, px, py, zx, zy, table, _ = state(seed)
    nx, ny = px[c] - 8 * zx[c], py[c] - 8 * zy[c]
    a = kernels.move_delta_numpy(px, py, c, nx, ny, table)
    b = kernels.move_delta_numba(px, py, c, nx, ny, table)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


@needs_numba
@settings(max_examples=10)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([0.0, 0.05, 1.0]))
def test_sweep_flavours_agree(seed, temp):
    _, px, py, zx, zy, table, scale = state(seed)
    rng = make_rng(seed)
    cells, dirs, us = rng.integers(0, 64, 64), rng.integers(0, 4, 64), rng.random(64)
    s1 = [px.copy(), py.copy(), zx.copy(), zy.copy()]
    s2 = [px.copy(), py.copy(), zx.copy(), zy.copy()]
    r1 = kernels.sweep_numpy(*s1, 8, 1, table, scale, temp, cells, dirs, us)
    r2 = kernels.sweep_numba(*s2, 8, 1, table, scale, temp, cells, dirs, us)
    assert r1[0] == r2[0]
    assert r1[1] == pytest.approx(r2[1], abs=1e-12)
    for x, y in zip(s1, s2):
        assert np.array_equal(x, y)


SCRIPT = """
import json, sys
from isodomain.fractional import FractionalConfig
from isodomain.optimizer import init_rng, local_search
from isodomain.schedule import AnnealSchedule
from isodomain.torus import PixelDomainMap
m = PixelDomainMap.random(6, 1, init_rng(3))
out, rep = local_search(m, FractionalConfig(s=0.5), AnnealSchedule(sweeps=20, seed=3, restarts=1))
print(json.dumps({"backend": rep.extra["backend"], "numba_loaded": "numba" in sys.modules,
                  "energy": rep.energy.value, "zx": out.zx.tolist(), "zy": out.zy.tolist()}))
"""


def run_with(flag):
    env = dict(os.environ, PERIM_NUMBA=flag)
    res = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_numpy_fallback_in_subprocess():
    a = run_with("0")
    assert a["backend"] == "numpy" and not a["numba_loaded"]
    b = run_with("1")
    assert b["backend"] == "numba"
    # the two backends take identical accept/reject decisions here
    assert a["zx"] == b["zx"] and a["zy"] == b["zy"]
    assert a["energy"] == pytest.approx(b["energy"], abs=1e-12)


def test_plain_import_does_not_load_numba():
    code = "import sys, isodomain; isodomain.NormSpec; print('numba' in sys.modules)"
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "False"
