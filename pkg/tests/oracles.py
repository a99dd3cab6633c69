"""Independent reference values for the fractional perimeter, built on scipy and mpmath only."""
import math

import mpmath as mp
from scipy import integrate


def square_truth(s, dps=30):
    """Per_s of the unit square from the covariogram, in polar form, at high precision."""
    mp.mp.dps = dps
    s_ = mp.mpf(s)

    def radial(t):
        c, sn = mp.cos(t), mp.sin(t)
        R = 1 / c
        return (c + sn) * R ** (1 - s_) / (1 - s_) - c * sn * R ** (2 - s_) / (2 - s_) + R ** (-s_) / s_

    return float(8 * mp.quad(radial, [0, mp.pi / 4]))


def lattice_sum_oracle(s, box=6):
    """sum over 0 < |k|_inf <= box of J(Q, Q + k), plus the exact remainder, by scipy only.

    J(Q, Q + k) = int over (-1, 1)^2 of tent(u) |k + u|^(-2-s) du. Returns (value, error estimate).
    """
    K = lambda x, y: (x * x + y * y) ** (-1 - s / 2)  # noqa: E731
    tent = lambda x: max(0.0, 1 - abs(x))  # noqa: E731
    opts = dict(epsabs=1e-14, epsrel=1e-13, limit=200)
    total, err = 0.0, 0.0

    def polar(k):
        # touching translates: integrate about the singular point h = 0
        worst = [0.0]

        def inner(t):
            c, sn = math.cos(t), math.sin(t)
            R = min(2 / c if c > 1e-300 else math.inf, (2 if k[1] else 1) / sn if sn > 1e-300 else math.inf)
            f = lambda r: r ** (-1 - s) * tent(r * c - k[0]) * tent(r * sn - k[1])  # noqa: E731
            pts = [p for p in (1 / c if c > 0 else None, 1 / sn if sn > 0 else None) if p and p < R]
            v, e = integrate.quad(f, 0, R, points=pts or None, **opts)
            worst[0] = max(worst[0], e)
            return v

        # for k = (1, 0) the lower half mirrors the upper one
        fold = 2.0 if k[1] == 0 else 1.0
        kinks = [math.atan(0.5), math.pi / 4] if k[1] == 0 else [math.pi / 4]
        v, e = integrate.quad(inner, 0.0, math.pi / 2, points=kinks, epsabs=1e-13, epsrel=1e-12, limit=200)
        return fold * v, fold * (e + math.pi / 2 * worst[0])

    for a in range(1, box + 1):
        for b in range(0, a + 1):
            mult = 4 if b == 0 or a == b else 8
            if a == 1:
                v, e = polar((a, b))
            else:
                v, e = 0.0, 0.0
                for u0, u1 in ((-1, 0), (0, 1)):
                    for v0, v1 in ((-1, 0), (0, 1)):
                        vv, ee = integrate.dblquad(lambda y, x: tent(x) * tent(y) * K(a + x, b + y),
                                                   u0, u1, v0, v1, epsabs=1e-15, epsrel=1e-13)
                        v += vv
                        e += ee
            total += mult * v
            err += mult * e
    # remainder: 1 minus the tents inside the box; one of 8 wedges 0 <= h2 <= h1
    T = box + 1
    # split at h2 = box, where the second tent factor has its kink
    ra, ea = integrate.dblquad(lambda h2, h1: K(h1, h2) * (h1 - box), box, T, 0, box, epsabs=1e-15, epsrel=1e-13)
    rb, eb = integrate.dblquad(lambda h2, h1: K(h1, h2) * (1 - (T - h1) * (T - h2)), box, T, box, lambda h1: h1,
                               epsabs=1e-15, epsrel=1e-13)
    ring, e1 = ra + rb, ea + eb
    cosint, e2 = integrate.quad(lambda t: math.cos(t) ** s, 0, math.pi / 4, epsabs=1e-15)
    far = T ** -s / s * cosint
    total += 8 * (ring + far)
    err += 8 * (e1 + e2 * T ** -s / s)
    return total, err
