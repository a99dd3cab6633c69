import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from isodomain import cli


def schema(name):
    return json.loads(resources.files("isodomain").joinpath("schemas", f"{name}.schema.json").read_text())


def run(*argv):
    return cli.main([str(a) for a in argv])


def load(p):
    return json.loads(p.read_text())


# ---------------------------------------------------------------------- tile

@pytest.mark.parametrize("norm", ["euclidean", "l1", "linf", "pnorm:3"])
def test_tile_validates_and_is_byte_identical(tmp_path, norm):
    a, b, svg = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "a.svg"
    assert run("tile", "--norm", norm, "--bound", 2, "--out", a, "--svg", svg) == 0
    assert run("tile", "--norm", norm, "--bound", 2, "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()
    jsonschema.validate(load(a), schema("tile"))
    assert svg.read_text().startswith("<svg") or "<svg" in svg.read_text()


def test_tile_euclidean_value(tmp_path):
    out = tmp_path / "t.json"
    assert run("tile", "--norm", "euclidean", "--out", out) == 0
    assert abs(load(out)["best"]["perimeter"] - 3.8637033051562732) <= 1e-6


def test_tile_norm_from_config_file(tmp_path):
    cfg = tmp_path / "n.cfg"
    cfg.write_text("norm.kind = pnorm\nnorm.p = 1.5\n")
    out = tmp_path / "t.json"
    assert run("tile", "--norm", cfg, "--bound", 2, "--out", out) == 0
    assert load(out)["norm"]["p"] == 1.5


@pytest.mark.parametrize("argv", [
    ["tile", "--norm", "nosuchnorm", "--out", "x.json"],
    ["tile", "--norm", "pnorm:0.5", "--out", "x.json"],
    ["tile", "--norm", "euclidean", "--bound", "0", "--out", "x.json"],
    ["tile", "--out", "x.json"],
    ["frobnicate"],
    ["verify", "--suite", "nosuchsuite"],
])
def test_usage_errors_exit_2(tmp_path, argv, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().err


def test_bad_config_file_exit_2(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("frac.s = 1.5\n")
    assert run("frac-optimize", "--config", cfg, "--out", tmp_path / "o.json") == 2
    err = capsys.readouterr().err
    assert "frac.s" in err and "line 1" in err


def test_unwritable_output_exit_2(tmp_path):
    assert run("tile", "--norm", "euclidean", "--out", tmp_path / "missing" / "t.json") == 2


# ------------------------------------------------------------- frac-optimize

@pytest.fixture(scope="module")
def frac_run(tmp_path_factory):
    d = tmp_path_factory.mktemp("frac")
    args = ["frac-optimize", "--s", 0.5, "--grid", 8, "--window", 1, "--seed", 5, "--steps", 60,
            "--restarts", 2, "--lambda-trials", 10]
    code = run(*args, "--out", d / "a.json", "--map-out", d / "a.map", "--svg", d / "a.svg")
    code2 = run(*args, "--out", d / "b.json")
    return d, code, code2


def test_frac_optimize_output(frac_run):
    d, code, code2 = frac_run
    assert code == 0 and code2 == 0
    rec = load(d / "a.json")
    jsonschema.validate(rec, schema("frac_optimize"))
    assert rec["checks"]["bookkeeping"] and rec["checks"]["not_worse_than_start"]
    assert len(rec["trajectory"]) == 61
    assert rec["config"]["seed"] == 5


def test_frac_optimize_byte_identical(frac_run):
    d, _, _ = frac_run
    assert (d / "a.json").read_bytes() == (d / "b.json").read_bytes()


def test_frac_optimize_from_init_map(frac_run, tmp_path):
    d, _, _ = frac_run
    out = tmp_path / "c.json"
    assert run("frac-optimize", "--init", d / "a.map", "--s", 0.5, "--steps", 5, "--restarts", 1,
               "--out", out) == 0
    rec = load(out)
    # starting from a greedy-polished map, the search cannot end higher
    assert rec["energy"]["value"] <= load(d / "a.json")["energy"]["value"] + 1e-9


def test_frac_optimize_config_and_overrides(tmp_path):
    cfg = tmp_path / "r.cfg"
    cfg.write_text("frac.s = 0.3\ngrid.size = 6\nanneal.sweeps = 10\nanneal.restarts = 1\nanneal.seed = 4\n")
    out = tmp_path / "o.json"
    assert run("frac-optimize", "--config", cfg, "--seed", 8, "--out", out) == 0
    c = load(out)["config"]
    assert (c["s"], c["grid"], c["sweeps"], c["seed"]) == (0.3, 6, 10, 8)


# -------------------------------------------------------------------- verify

def test_verify_suite(tmp_path):
    out = tmp_path / "v.json"
    assert run("verify", "--suite", "optimizer", "--out", out) == 0
    rep = load(out)
    jsonschema.validate(rep, schema("verify"))
    assert all(c["passed"] for c in rep["suites"]["optimizer"])


def test_verify_tiling_has_hexagon_value(tmp_path):
    out = tmp_path / "v.json"
    assert run("verify", "--suite", "tiling", "--out", out) == 0
    text = out.read_text()
    assert "3.8637033" in text


# ---------------------------------------------------------------------- plot

def test_plot_reproduces_svg(tmp_path, frac_run):
    d, _, _ = frac_run
    svg = tmp_path / "p.svg"
    assert run("plot", "--in", d / "a.json", "--svg", svg) == 0
    assert svg.read_bytes() == (d / "a.svg").read_bytes()
    t = tmp_path / "t.json"
    t_svg = tmp_path / "t.svg"
    assert run("tile", "--norm", "euclidean", "--bound", 2, "--out", t, "--svg", t_svg) == 0
    assert run("plot", "--in", t, "--svg", svg) == 0
    assert svg.read_bytes() == t_svg.read_bytes()


def test_plot_rejects_other_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("[1, 2]")
    assert run("plot", "--in", p, "--svg", tmp_path / "x.svg") == 2
    p.write_text("not json")
    assert run("plot", "--in", p, "--svg", tmp_path / "x.svg") == 2


# ---------------------------------------------------------------- entry point

def test_module_entry_point(tmp_path):
    out = tmp_path / "t.json"
    res = subprocess.run([sys.executable, "-m", "isodomain", "tile", "--norm", "l1", "--bound", "2", "--out", str(out)],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert abs(load(out)["best"]["perimeter"] - 4.0) <= 1e-8
    res = subprocess.run([sys.executable, "-m", "isodomain", "verify"], capture_output=True, text=True)
    assert res.returncode == 2


def test_uncertified_cutoff_exits_1(tmp_path):
    out = tmp_path / "t.json"
    assert run("tile", "--norm", "l1", "--bound", 1, "--out", out) == 1
    assert load(out)["certificate"]["cutoff_ok"] is False
