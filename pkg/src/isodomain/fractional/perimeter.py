"""Fractional s-perimeter of pixel sets and the identities it satisfies."""
import math
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidArgument, SingularityError
from ..interval import Interval
from .table import MODES, get_table


@dataclass(frozen=True)
class FractionalConfig:
    s: float = 0.5
    truncation_radius: float = 4.0
    depth: int = 3
    diagonal_mode: str = "subdivide"

    def __post_init__(self):
        if not 0.0 < self.s < 1.0:
            raise InvalidArgument(f"frac.s must lie in (0, 1), got {self.s}")
        if not self.truncation_radius >= 1.0:
            raise InvalidArgument(f"frac.truncation must be >= 1, got {self.truncation_radius}")
        if not 0 <= self.depth <= 10:
            raise InvalidArgument(f"frac.depth must lie in [0, 10], got {self.depth}")
        if self.diagonal_mode not in MODES:
            raise InvalidArgument(f"frac.diagonal_mode must be one of {MODES}, got {self.diagonal_mode!r}")

    def table(self):
        return get_table(self.s, self.diagonal_mode, self.depth)


def kernel_eval(s, h):
    h = np.asarray(h, dtype=float)
    r2 = float(h[0] ** 2 + h[1] ** 2)
    if r2 == 0.0:
        raise SingularityError("kernel is singular at h = 0")
    return r2 ** (-1.0 - 0.5 * s)


def tail_mass(s, t):
    """Kernel mass outside the ball of radius t: 2*pi*t^(-s)/s in the plane."""
    if not t > 0:
        raise InvalidArgument(f"tail radius must be positive, got {t}")
    return 2.0 * math.pi * t ** (-s) / s


def lambda_constant(s, r):
    """Almost-minimality constant for balls of radius r < 1/2."""
    if not 0.0 < r < 0.5:
        raise InvalidArgument(f"r must lie in (0, 1/2), got {r}")
    return tail_mass(s, 1.0 - 2.0 * r)


def _scale(n, s):
    return float(n) ** (s - 2.0)


def _radius_for(a, b):
    if len(a) == 0 or len(b) == 0:
        return 1
    pts = np.concatenate([a, b])
    return int(max(np.ptp(pts[:, 0]), np.ptp(pts[:, 1]), 1))


def pair_sum(a, b, cfg):
    """sum over cells a in A, b in B (a != b) of I(b - a), unit-cell scale."""
    from .. import kernels

    radius = _radius_for(a, b)
    counts = kernels.class_counts(a, b, radius)
    return counts, cfg.table().dot_counts(counts)


def interaction(A, B, cfg):
    """J(A, B) = int_A int_B |x - y|^(-2-s) as an Interval."""
    if A.is_empty() or B.is_empty():
        return Interval(0.0, 0.0)
    a = A.cells()
    b = B.cells_in(A)
    counts, acc = pair_sum(a, b, cfg)
    if counts[0, 0] > 0:
        raise SingularityError("sets share cells: the interaction integral diverges")
    return acc * _scale(A.n, cfg.s)


def frac_perimeter(E, cfg):
    """Per_s(E) = J(E, complement of E).

    Uses Per_s(E) = |E| * Per_s(Q) - J(E, E)' where the primed self-interaction
    runs over distinct cells only, so the unbounded complement never has to be
    truncated. Per_s(Q) itself carries its lattice tail in closed quadrature.
    """
    if E.is_empty():
        return Interval(0.0, 0.0)
    tab = cfg.table()
    a = E.cells()
    _, inner = pair_sum(a, a, cfg)
    unit = tab.unit_perimeter()
    total = unit * E.count - inner
    rounding = 4e-16 * (abs(unit.value) * E.count + abs(inner.value))
    return Interval(total.value, total.radius + rounding) * _scale(E.n, cfg.s)


def frac_perimeter_local(E, U, cfg):
    """Per_s(E, U) = J(E n U, complement of E) + J(E minus U, U minus E)."""
    inside = E & U
    if inside.is_empty():
        first = Interval(0.0, 0.0)
    else:
        first = frac_perimeter(inside, cfg) - interaction(inside, E - inside, cfg)
    return first + interaction(E - U, U - E, cfg)


def submodularity_residual(E1, E2, cfg):
    """Per(E1 u E2) + Per(E1 n E2) - Per(E1) - Per(E2) + 2 J(E2 minus E1, E1 minus E2)."""
    lhs = frac_perimeter(E1 | E2, cfg) + frac_perimeter(E1 & E2, cfg)
    rhs = frac_perimeter(E1, cfg) + frac_perimeter(E2, cfg) - 2.0 * interaction(E2 - E1, E1 - E2, cfg)
    return lhs - rhs


def gap(U, V):
    """Euclidean distance between two pixel sets (closest cell corners)."""
    a = U.cells()
    b = V.cells_in(U)
    # per-axis gap between unit cells at integer positions
    dx = np.abs(a[:, None, 0] - b[None, :, 0]) - 1
    dy = np.abs(a[:, None, 1] - b[None, :, 1]) - 1
    d = np.hypot(np.maximum(dx, 0), np.maximum(dy, 0))
    return float(d.min()) / U.n
