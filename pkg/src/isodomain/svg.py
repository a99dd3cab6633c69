"""Minimal deterministic SVG output."""
import numpy as np

_PALETTE = ["#8ecae6", "#ffb703", "#90be6d", "#f28482", "#cdb4db", "#e9c46a", "#84a59d", "#bde0fe"]


def _fmt(x):
    return f"{x:.6f}".rstrip("0").rstrip(".")


def polygons_svg(polygons, title="", size=480, colors=None):
    """One filled path per polygon; y axis flipped so up is up."""
    pts = np.concatenate([p.vertices for p in polygons]) if polygons else np.zeros((1, 2))
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    pad = 0.05 * span
    k = size / (span + 2 * pad)

    def tx(p):
        return (p[0] - lo[0] + pad) * k, (hi[1] - p[1] + pad) * k

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    for n, poly in enumerate(polygons):
        col = colors[n] if colors else _PALETTE[n % len(_PALETTE)]
        d = " ".join(("M" if i == 0 else "L") + f"{_fmt(x)},{_fmt(y)}"
                     for i, (x, y) in enumerate(tx(p) for p in poly.vertices))
        out.append(f'<path d="{d} Z" fill="{col}" stroke="#222" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def pixels_svg(labels, n_cells, title="", size=480):
    """Rectangles for a labelled pixel map; ``labels`` maps (col, row) -> label."""
    keys = sorted({v for v in labels.values()})
    index = {kk: i for i, kk in enumerate(keys)}
    cols = [c for c, _ in labels]
    rows = [r for _, r in labels]
    c0, c1 = min(cols), max(cols) + 1
    r0, r1 = min(rows), max(rows) + 1
    span = max(c1 - c0, r1 - r0)
    k = size / span
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    for (c, r) in sorted(labels):
        col = _PALETTE[index[labels[(c, r)]] % len(_PALETTE)]
        x = (c - c0) * k
        y = (r1 - r - 1) * k
        out.append(f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(k)}" height="{_fmt(k)}" fill="{col}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
