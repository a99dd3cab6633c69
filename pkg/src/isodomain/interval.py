from dataclasses import dataclass


@dataclass(frozen=True)
class Interval:
    """A value with a certified error radius: the truth lies in [value - radius, value + radius]."""

    value: float
    radius: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def lo(self):
        return self.value - self.radius

    @property
    def hi(self):
        return self.value + self.radius

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.value + other.value, self.radius + other.radius)
        return Interval(self.value + other, self.radius)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Interval):
            return Interval(self.value - other.value, self.radius + other.radius)
        return Interval(self.value - other, self.radius)

    def __neg__(self):
        return Interval(-self.value, self.radius)

    def __mul__(self, k):
        return Interval(self.value * k, self.radius * abs(k))

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Interval(self.value / k, self.radius / abs(k))

    def contains(self, x, slack=0.0):
        return abs(x - self.value) <= self.radius + slack

    def overlaps(self, other, slack=0.0):
        return abs(self.value - other.value) <= self.radius + other.radius + slack

    def to_dict(self):
        return {"value": self.value, "radius": self.radius}
