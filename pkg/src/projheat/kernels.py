"""Heat kernels on P^n(C) and P^n(H) in two independent closed forms.

With k = 1 (complex) or k = 2 (quaternionic), c = k(n+1) - 1 and
m = k(n+1), the kernel at time t and geodesic distance d is

  series form:
      E(t; d) = pi^(-kn) sum_{l>=0} (2l + c) (l + c - 1)!/(l + k - 1)!
                exp(-4 l (l + c) t) P_l^(kn-1, k-1)(cos 2d)

  integral form:
      E(t; d) = [exp(c^2 t) / (2^(kn-2) pi^(kn+1) cos(d)^(2(k-1)))]
                * integral_d^(pi/2) (cos^2 d - cos^2 u)^(k - 3/2)
                  Psi_c(t, u) du,

where Psi_c = sin(u) L^c theta_m is assembled termwise in thetapsi.  The
exp(c^2 t) prefactor is folded into the theta exponentials (giving decay
rates exp(-4 t l (l + c)) termwise), so neither factor can overflow at
large t.  The two forms share no evaluation path beyond the quadrature
rule, which is what makes their agreement a meaningful check.

Series truncation bounds |P_l| on [-1, 1] by its value at 1 and stops
when a geometric majorant of the tail drops below the tolerance; the
integral form uses doubling Gauss-Legendre quadrature on the
endpoint-regularized substitution from the quadrature module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, TruncationCapError
from .geometry import SpaceDescriptor
from .quadrature import SqrtWeightedIntegral, adaptive_integrate
from .thetapsi import TruncationPolicy, psi_sum

_HALF_PI = 0.5 * math.pi

#: below this diffusion time the CLI refuses to evaluate
MIN_TIME = 1e-4

#: hard cap on spectral series terms; ~320 suffice at t = MIN_TIME
SERIES_CAP = 2000

_PSI_POLICY = TruncationPolicy(tol=1e-12, l_max_cap=20000)

METHODS = ("series", "integral")


@dataclass(frozen=True)
class KernelQuery:
    """One kernel evaluation request."""

    space: SpaceDescriptor
    t: float
    d: float
    method: str = "series"
    tol: float = 1e-10

    def __post_init__(self):
        if not self.t > 0:
            raise DomainError(f"diffusion time must be positive, got {self.t}")
        if not (0.0 <= self.d < _HALF_PI):
            raise DomainError(f"distance must lie in [0, pi/2), got {self.d}")
        if self.method not in METHODS:
            raise DomainError(f"method must be one of {METHODS}, got {self.method!r}")
        if not self.tol > 0:
            raise DomainError(f"tolerance must be positive, got {self.tol}")


@dataclass(frozen=True)
class KernelValue:
    """Kernel value with the work done and an error estimate."""

    value: float
    terms_or_nodes: int
    est_error: float


def _jacobi_advance(lnew: int, a: float, b: float, x: np.ndarray,
                    p_cur: np.ndarray, p_prev: np.ndarray) -> np.ndarray:
    # P_lnew from (P_{lnew-1}, P_{lnew-2})
    if lnew == 1:
        return (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    k = lnew
    c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
    c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
    c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b)
    c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
    return ((c2 + c3 * x) * p_cur - c4 * p_prev) / c1


def _check_time_distance(t: float, d) -> None:
    if not t > 0:
        raise DomainError(f"diffusion time must be positive, got {t}")
    d_arr = np.asarray(d, dtype=float)
    if np.any(d_arr < 0.0) or np.any(d_arr >= _HALF_PI):
        raise DomainError("distance must lie in [0, pi/2)")


def series_values(k: int, n: int, t: float, d, tol: float = 1e-10):
    """Spectral-series kernel over an array of distances.

    Returns (values, terms_used, tail_bound).  The truncation index is
    shared across the array because the term bound is uniform in d.
    """
    SpaceDescriptor(n=n, k=k)  # validates index and field selector
    _check_time_distance(t, d)
    x = np.cos(2.0 * np.asarray(d, dtype=float))
    alpha = float(k * n - 1)
    beta = float(k - 1)
    c = k * (n + 1) - 1
    inv_pi = math.pi ** (-(k * n))
    ratio = math.factorial(c - 1) / math.factorial(k - 1)  # (l+c-1)!/(l+k-1)!
    endpoint = 1.0  # binom(l + alpha, l)
    p_prev = np.zeros_like(x)
    p_cur = np.ones_like(x)
    total = np.zeros_like(x)
    for l in range(SERIES_CAP + 1):
        w = (2 * l + c) * ratio * math.exp(-4.0 * l * (l + c) * t) * inv_pi
        total += w * p_cur
        # coefficient trackers for l+1
        ratio *= (l + c) / (l + k)
        endpoint *= (l + 1 + alpha) / (l + 1)
        b_next = (
            (2 * (l + 1) + c) * ratio * endpoint
            * math.exp(-4.0 * (l + 1) * (l + 1 + c) * t) * inv_pi
        )
        # decreasing bound on the ratio of successive term bounds
        rho = (
            math.exp(-4.0 * t * (2 * l + 3 + c))
            * ((2 * l + 4 + c) / (2 * l + 2 + c))
            * ((l + 1 + c) / (l + 1 + k))
            * ((l + 2 + alpha) / (l + 2))
        )
        if rho < 1.0:
            tail = b_next / (1.0 - rho)
            if tail <= tol:
                return total, l + 1, tail
        p_cur, p_prev = _jacobi_advance(l + 1, alpha, beta, x, p_cur, p_prev), p_cur
    raise TruncationCapError(
        f"spectral series needs more than {SERIES_CAP} terms at t={t} (t too small)"
    )


def _series_kernel(k: int, n: int, t: float, d: float, tol: float) -> KernelValue:
    values, terms, tail = series_values(k, n, t, np.asarray([d]), tol)
    return KernelValue(value=float(values[0]), terms_or_nodes=terms, est_error=tail)


def _integral_kernel(k: int, n: int, t: float, d: float, tol: float) -> KernelValue:
    SpaceDescriptor(n=n, k=k)  # validates index and field selector
    _check_time_distance(t, d)
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    m = k * (n + 1)
    j = m - 1  # = c, the number of ladder applications
    cnk = 1.0 / (2.0 ** (k * n - 2) * math.pi ** (k * n + 1))
    outer = cnk / math.cos(d) ** (2 * (k - 1))
    shift = float(j * j)  # folded exp(c^2 t), termwise
    policy = (
        _PSI_POLICY if tol >= 10.0 * _PSI_POLICY.tol
        else TruncationPolicy(tol=0.1 * tol, l_max_cap=_PSI_POLICY.l_max_cap)
    )

    def g(u):
        return psi_sum(j, m, t, u, policy, exp_shift=shift)

    spec = SqrtWeightedIntegral(d=d, exponent_sign=0.5 if k == 2 else -0.5)
    res = adaptive_integrate(spec, g, tol=0.5 * tol / outer)
    # termwise theta truncation contributes at most cnk * pi/2 * policy tol
    est = outer * res.est_error + cnk * _HALF_PI * policy.tol
    return KernelValue(value=outer * res.value, terms_or_nodes=res.nodes, est_error=est)


def cpn_series(n: int, t: float, d: float, tol: float = 1e-10) -> KernelValue:
    """Heat kernel on P^n(C), spectral series."""
    return _series_kernel(1, n, t, d, tol)


def cpn_integral(n: int, t: float, d: float, tol: float = 1e-10) -> KernelValue:
    """Heat kernel on P^n(C), theta-integral representation."""
    return _integral_kernel(1, n, t, d, tol)


def hpn_series(n: int, t: float, d: float, tol: float = 1e-10) -> KernelValue:
    """Heat kernel on P^n(H), spectral series."""
    return _series_kernel(2, n, t, d, tol)


def hpn_integral(n: int, t: float, d: float, tol: float = 1e-10) -> KernelValue:
    """Heat kernel on P^n(H), theta-integral representation."""
    return _integral_kernel(2, n, t, d, tol)


def unified(n: int, k: int, t: float, d: float, tol: float = 1e-10,
            method: str = "series") -> KernelValue:
    """Kernel on P^n(F) for either field, by the selected representation."""
    space = SpaceDescriptor(n=n, k=k)  # validates n, k
    if method == "series":
        return _series_kernel(space.k, space.n, t, d, tol)
    if method == "integral":
        return _integral_kernel(space.k, space.n, t, d, tol)
    raise DomainError(f"method must be one of {METHODS}, got {method!r}")


def stationary_value(space: SpaceDescriptor) -> float:
    """Long-time limit of the kernel, 1 / volume of the space."""
    c = space.spectral_offset
    return math.factorial(c) / (
        math.factorial(space.k - 1) * math.pi ** (space.k * space.n)
    )


def evaluate(query: KernelQuery) -> KernelValue:
    """Dispatch a KernelQuery to the requested representation."""
    return unified(query.space.n, query.space.k, query.t, query.d,
                   tol=query.tol, method=query.method)
