"""Annealing schedule parameters."""
from dataclasses import dataclass

from .errors import InvalidArgument


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric cooling. ``t0=None`` means 0.5 * (initial energy) / N^2."""

    t0: float = None
    decay: float = 0.99
    sweeps: int = 600
    seed: int = 0
    restarts: int = 4

    def __post_init__(self):
        if self.t0 is not None and not self.t0 >= 0.0:
            raise InvalidArgument(f"anneal.t0 must be >= 0, got {self.t0}")
        if not 0.0 < self.decay < 1.0:
            raise InvalidArgument(f"anneal.decay must lie in (0, 1), got {self.decay}")
        if int(self.sweeps) < 1:
            raise InvalidArgument(f"anneal.sweeps must be >= 1, got {self.sweeps}")
        if int(self.restarts) < 1:
            raise InvalidArgument(f"anneal.restarts must be >= 1, got {self.restarts}")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise InvalidArgument(f"anneal.seed must lie in [0, 2^64), got {self.seed}")
