"""Isoperimetric fundamental domains for the lattice Z^2.

Names are resolved lazily so that ``import isodomain`` does not pull in
numba; the polygonal solver runs without it.
"""
from importlib import import_module

__version__ = "0.1.0"

_EXPORTS = {
    "InvalidArgument": "errors",
    "SingularityError": "errors",
    "NormSpec": "anisotropy",
    "eval_norm": "anisotropy",
    "dual_norm": "anisotropy",
    "wulff_shape": "anisotropy",
    "polygon_perimeter": "anisotropy",
    "Polygon": "geometry",
    "HexagonDomain": "tiling",
    "optimal_hexagon": "tiling",
    "enumerate_bases": "tiling",
    "best_fundamental_polygon": "tiling",
    "cross_instability_test": "tiling",
    "FractionalConfig": "fractional.perimeter",
    "frac_perimeter": "fractional.perimeter",
    "tail_mass": "fractional.perimeter",
    "lambda_constant": "fractional.perimeter",
    "PixelSet": "fractional.pixels",
    "PixelDomainMap": "torus",
    "periodic_frac_perimeter": "torus",
    "junction_structure": "torus",
    "equilibrium_residual": "torus",
    "AnnealSchedule": "schedule",
    "local_search": "optimizer",
    "degiorgi_iteration": "optimizer",
    "lambda_minimality_check": "optimizer",
    "parse_config": "config",
    "run_verify": "verify",
}

__all__ = sorted(_EXPORTS)


def __getattr__(name):
    if name in _EXPORTS:
        return getattr(import_module(f".{_EXPORTS[name]}", __name__), name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
