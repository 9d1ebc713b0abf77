"""Independent oracles shared by the tests.

Everything here is deliberately written from scratch against the defining
series/operators, never by calling the package's own evaluation paths.
"""

import math
from fractions import Fraction

import numpy as np


def jacobi_series_exact(l, alpha, beta, x):
    """Jacobi polynomial by its terminating series in exact rational arithmetic.

    alpha, beta, x are floats (hence exact binary rationals), so the value
    is exact up to the final float conversion.
    """
    a = Fraction(alpha)
    b = Fraction(beta)
    z = (1 - Fraction(x)) / 2
    total = Fraction(0)
    for s in range(l + 1):
        term = Fraction(1)
        for i in range(s):
            term *= l + a + b + 1 + i  # (l+a+b+1)_s
        for i in range(l - s):
            term *= a + s + 1 + i  # (a+s+1)_(l-s)
        term *= (-z) ** s
        total += term / (math.factorial(s) * math.factorial(l - s))
    return float(total)


def gegenbauer_series_exact(l, lam, x):
    """Gegenbauer polynomial by its explicit terminating sum, exact rational."""
    lam_f = Fraction(lam)
    x_f = Fraction(x)
    total = Fraction(0)
    for i in range(l // 2 + 1):
        term = Fraction(1)
        for j in range(l - i):
            term *= lam_f + j  # (lam)_(l-i)
        term *= Fraction(-1) ** i * (2 * x_f) ** (l - 2 * i)
        total += term / (math.factorial(i) * math.factorial(l - 2 * i))
    return float(total)


def ladder_fd(f, u0, m, h=None):
    """Iterated -(1/sin u) d/du by nested central differences, Richardson once.

    The default step doubles with each nesting level beyond two because
    nested differencing amplifies roundoff by (2h)^-m.
    """
    if h is None:
        h = 1e-3 * (2.0 ** max(0, m - 2))

    def once(step):
        us = u0 + step * np.arange(-m, m + 1, dtype=float)
        vals = np.array([f(v) for v in us], dtype=float)
        for _ in range(m):
            vals = -(vals[2:] - vals[:-2]) / (2.0 * step * np.sin(us[1:-1]))
            us = us[1:-1]
        return float(vals[0])

    return (4.0 * once(0.5 * h) - once(h)) / 3.0


def theta_brute(m, t, u, terms=1000):
    """Direct summation of the theta-type series, no tail bound."""
    return sum(
        math.exp(-4.0 * t * (l + 0.5 * (m - 1)) ** 2) * math.cos((2 * l + m - 1) * u)
        for l in range(terms)
    )


def theta2_brute(z, tau_imag, terms=1000):
    """Direct summation of the classical second theta function, imaginary tau."""
    return 2.0 * sum(
        math.exp(-math.pi * tau_imag * (l + 0.5) ** 2) * math.cos((2 * l + 1) * math.pi * z)
        for l in range(terms)
    )


def s4_heat_kernel(t, d, terms=200):
    """Heat kernel on the round 4-sphere of radius 1/2, spectral sum.

    Uses the order-3/2 ultraspherical recurrence directly; shares no code
    with the package.  Distances d in [0, pi/2] correspond to angle 2d on
    the unit sphere; eigenvalues scale by 4 and the density by 16.
    """
    x = math.cos(2.0 * d)
    total = 0.0
    c_prev, c_cur = 1.0, 3.0 * x
    for l in range(terms):
        if l == 0:
            cl = 1.0
        elif l == 1:
            cl = c_cur
        else:
            c_cur, c_prev = (2.0 * (l + 0.5) * x * c_cur - (l + 1.0) * c_prev) / l, c_cur
            cl = c_cur
        total += (2 * l + 3) * cl * math.exp(-4.0 * l * (l + 3) * t)
    return 2.0 * total / math.pi**2
