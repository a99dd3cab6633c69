"""Pixel sets: finite unions of grid cells of side 1/n."""
import numpy as np

from ..errors import InvalidArgument


class PixelSet:
    """Cells of side ``1/n``; ``bits[row, col]`` marks the cell
    ``[ox + col/n, ox + (col+1)/n) x [oy + row/n, oy + (row+1)/n)``, row 0 at the bottom.
    """

    def __init__(self, n, bits, origin=(0.0, 0.0)):
        if n <= 0:
            raise InvalidArgument(f"grid resolution must be positive, got {n}")
        self.n = n
        self.bits = np.ascontiguousarray(np.asarray(bits, dtype=bool))
        if self.bits.ndim != 2:
            raise InvalidArgument("bitmap must be two-dimensional")
        self.origin = (float(origin[0]), float(origin[1]))

    @classmethod
    def empty(cls, n):
        return cls(n, np.zeros((0, 0), dtype=bool))

    @classmethod
    def from_cells(cls, n, cells, origin=(0.0, 0.0)):
        """Build from integer (col, row) cell coordinates relative to ``origin``."""
        cells = np.asarray(cells, dtype=np.int64).reshape(-1, 2)
        if len(cells) == 0:
            return cls.empty(n)
        lo = cells.min(axis=0)
        hi = cells.max(axis=0)
        bits = np.zeros((hi[1] - lo[1] + 1, hi[0] - lo[0] + 1), dtype=bool)
        bits[cells[:, 1] - lo[1], cells[:, 0] - lo[0]] = True
        return cls(n, bits, (origin[0] + lo[0] / n, origin[1] + lo[1] / n))

    @classmethod
    def rectangle(cls, n, x0, y0, cols, rows):
        return cls(n, np.ones((rows, cols), dtype=bool), (x0, y0))

    @property
    def h(self):
        return 1.0 / self.n

    @property
    def count(self):
        return int(self.bits.sum())

    @property
    def area(self):
        return self.count / float(self.n) ** 2

    def is_empty(self):
        return self.count == 0

    def cells(self):
        """Integer (col, row) coordinates of occupied cells, relative to the origin."""
        rows, cols = np.nonzero(self.bits)
        return np.stack([cols, rows], axis=1).astype(np.int64)

    def shift_to(self, other):
        """Integer cell shift mapping this set's frame onto ``other``'s frame."""
        if not np.isclose(self.n, other.n, rtol=1e-12, atol=0.0):
            raise InvalidArgument(f"grids differ: n={self.n} vs n={other.n}")
        d = (np.array(self.origin) - np.array(other.origin)) * self.n
        k = np.rint(d)
        if np.any(np.abs(d - k) > 1e-7):
            raise InvalidArgument("pixel grids are not commensurable")
        return k.astype(np.int64)

    def cells_in(self, frame):
        return self.cells() + self.shift_to(frame)

    def _combine(self, other, op):
        a = {tuple(c) for c in self.cells()}
        b = {tuple(c) for c in other.cells_in(self)}
        out = sorted(op(a, b))
        if not out:
            return PixelSet.empty(self.n)
        return PixelSet.from_cells(self.n, out, self.origin)

    def __or__(self, other):
        if other.is_empty():
            return self
        if self.is_empty():
            return other
        return self._combine(other, set.union)

    def __and__(self, other):
        if self.is_empty() or other.is_empty():
            return PixelSet.empty(self.n)
        return self._combine(other, set.intersection)

    def __sub__(self, other):
        if self.is_empty() or other.is_empty():
            return self
        return self._combine(other, set.difference)

    def scaled(self, k):
        """The set k*E for a positive integer k, on the same grid."""
        k = int(k)
        bits = np.kron(self.bits, np.ones((k, k), dtype=bool))
        return PixelSet(self.n, bits, (k * self.origin[0], k * self.origin[1]))

    def translated(self, dx, dy):
        return PixelSet(self.n, self.bits, (self.origin[0] + dx, self.origin[1] + dy))

    def corners(self):
        """Physical coordinates of all occupied-cell corners (for diameters)."""
        c = self.cells()
        if len(c) == 0:
            return np.zeros((0, 2))
        pts = np.concatenate([c, c + [1, 0], c + [0, 1], c + [1, 1]])
        pts = np.unique(pts, axis=0)
        return pts / self.n + np.array(self.origin)

    def boundary_length(self):
        """Euclidean length of the staircase boundary."""
        b = np.pad(self.bits, 1)
        edges = np.count_nonzero(b[1:, :] != b[:-1, :]) + np.count_nonzero(b[:, 1:] != b[:, :-1])
        return edges / self.n

    def same_cells(self, other):
        if self.is_empty() or other.is_empty():
            return self.is_empty() and other.is_empty()
        a = {tuple(c) for c in self.cells()}
        b = {tuple(c) for c in other.cells_in(self)}
        return a == b

    def __repr__(self):
        return f"PixelSet(n={self.n}, cells={self.count}, origin={self.origin})"


def read_pixelset(path):
    """Plain-text format: header ``N W`` then N rows of N '0'/'1' characters,
    row-major with row 0 (the bottom row) first.

    The bitmap covers [0, W)^2, so the cell side is W/N.
    """
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        size, width = lines[0].split()
        size = int(size)
        width = float(width)
    except (IndexError, ValueError) as exc:
        raise InvalidArgument(f"{path}: bad header, expected 'N W'") from exc
    rows = lines[1:]
    if len(rows) != size or any(len(r) != size or set(r) - {"0", "1"} for r in rows):
        raise InvalidArgument(f"{path}: expected {size} rows of {size} characters from {{0,1}}")
    # first listed row is row 0, the bottom one
    bits = np.array([[ch == "1" for ch in r] for r in rows], dtype=bool)
    return PixelSet(size / width, bits)


def write_pixelset(path, pset, width=None):
    rows, cols = pset.bits.shape
    size = max(rows, cols)
    bits = np.zeros((size, size), dtype=bool)
    bits[:rows, :cols] = pset.bits
    if width is None:
        width = size / pset.n
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{size} {width:g}\n")
        for r in range(size):
            fh.write("".join("1" if b else "0" for b in bits[r]) + "\n")
