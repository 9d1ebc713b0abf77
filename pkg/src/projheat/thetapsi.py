"""Theta-type exponential cosine series and their ladder transforms.

The central object is the family

    theta_m(t; u) = sum_{l>=0} exp(-4 t (l + (m-1)/2)^2) cos((2l + m - 1) u),

for integer m >= 2 and t > 0, together with

    Psi_j(t, u) = sin(u) L^j theta_m(t, u),      L = -(1/sin u) d/du,

assembled termwise through the cosine ladder, so Psi carries no actual
differentiation and is finite at u = 0 and u = pi.  Truncation is
controlled by an analytic tail bound: successive term bounds shrink by a
factor that is itself decreasing, so the tail is dominated by a geometric
series and summation stops as soon as that majorant drops below the
policy tolerance.

For m = 2 the series coincides with half the classical second Jacobi
theta function at purely imaginary lattice parameter;
``jacobi_theta2_reference`` sums that function independently so the
relation can be certified rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, TruncationCapError

_LADDER_SCALE_CACHE: dict[int, float] = {}


@dataclass(frozen=True)
class ThetaQuery:
    """Arguments of one theta-series evaluation: subscript m, time t, angle u."""

    m: int
    t: float
    u: float

    def __post_init__(self):
        if self.m < 2:
            raise DomainError(f"series subscript must be >= 2, got {self.m}")
        if not self.t > 0:
            raise DomainError(f"diffusion time must be positive, got {self.t}")
        if not math.isfinite(self.u):
            raise DomainError("angle must be finite")


@dataclass(frozen=True)
class TruncationPolicy:
    """Absolute tail tolerance plus a hard safety cap on the term count."""

    tol: float = 1e-12
    l_max_cap: int = 20000

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tolerance must be positive, got {self.tol}")
        if self.l_max_cap < 1:
            raise DomainError(f"term cap must be >= 1, got {self.l_max_cap}")


DEFAULT_POLICY = TruncationPolicy()


def theta_sum(m: int, t: float, u, policy: TruncationPolicy = DEFAULT_POLICY,
              exp_shift: float = 0.0):
    """Truncated theta_m(t; u), vectorized over u.

    ``exp_shift`` folds a factor exp(exp_shift * t) into every term; with
    exp_shift = (m-1)^2 the exponents become -4 t l (l + m - 1), which is
    how the kernel assembly keeps large-t prefactors from overflowing.
    """
    u_arr = np.asarray(u, dtype=float)
    half = 0.5 * (m - 1)
    total = np.zeros_like(u_arr)
    for l in range(policy.l_max_cap + 1):
        a = math.exp((exp_shift - 4.0 * (l + half) ** 2) * t)
        total += a * np.cos((2 * l + m - 1) * u_arr)
        b_next = math.exp((exp_shift - 4.0 * (l + 1 + half) ** 2) * t)
        rho = math.exp(-4.0 * t * (2 * l + 2 + m))
        if rho < 1.0 and b_next / (1.0 - rho) <= policy.tol:
            return float(total) if np.ndim(u) == 0 else total
    raise TruncationCapError(
        f"theta series needs more than {policy.l_max_cap} terms at t={t}"
    )


def theta(q: ThetaQuery, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """theta_m(t; u) with absolute truncation error <= policy.tol."""
    return theta_sum(q.m, q.t, q.u, policy)


def _ladder_base_scale(j: int) -> float:
    # 2^(j-1) (j-1)!, the q-independent part of the cosine-ladder scale
    try:
        return _LADDER_SCALE_CACHE[j]
    except KeyError:
        val = (2.0 ** (j - 1)) * math.factorial(j - 1)
        _LADDER_SCALE_CACHE[j] = val
        return val


def psi_sum(j: int, m: int, t: float, u, policy: TruncationPolicy = DEFAULT_POLICY,
            exp_shift: float = 0.0):
    """sin(u) L^j theta_m(t, u), vectorized over u.

    Termwise the cosine ladder turns harmonic 2l+m-1 into a Gegenbauer
    term of order j and degree 2l+m-1-j, so the sum is a single rolling
    order-j recurrence.  The tail bound majorizes |C_d^j| by its value at
    the right endpoint, which is where the polynomial growth enters.
    """
    if j < 1:
        raise DomainError(f"ladder count must be >= 1, got {j}")
    if m < 2:
        raise DomainError(f"series subscript must be >= 2, got {m}")
    u_arr = np.asarray(u, dtype=float)
    x = np.cos(u_arr)
    lam = float(j)
    base = _ladder_base_scale(j)
    half = 0.5 * (m - 1)

    total = np.zeros_like(u_arr)
    # rolling Gegenbauer pair (C_{deg-1}, C_deg) of order j
    c_prev = np.ones_like(u_arr)
    c_cur = 2.0 * lam * x
    deg = 1
    endpoint = None  # binom(q + j - 1, 2j - 1) for the current l
    for l in range(policy.l_max_cap + 1):
        q = 2 * l + m - 1
        if q < j:
            continue  # ladder annihilates harmonics below its count
        target = q - j
        while deg < target:
            deg += 1
            c_cur, c_prev = (
                (2.0 * (deg + lam - 1.0) * x * c_cur - (deg + 2.0 * lam - 2.0) * c_prev) / deg,
                c_cur,
            )
        # targets step by 2, so after advancing either deg or deg-1 matches
        cval = c_cur if target == deg else c_prev
        a = math.exp((exp_shift - 4.0 * (l + half) ** 2) * t)
        total += (a * q * base) * cval

        if endpoint is None:
            endpoint = float(math.comb(q + j - 1, 2 * j - 1))
        # advance the endpoint bound to l+1 and test the geometric majorant
        endpoint *= ((q + j) * (q + j + 1)) / ((q - j + 1) * (q - j + 2))
        qn = q + 2
        b_next = (
            math.exp((exp_shift - 4.0 * (l + 1 + half) ** 2) * t) * qn * base * endpoint
        )
        rho = (
            math.exp(-4.0 * t * (qn + 1))
            * ((qn + 2) / qn)
            * (((qn + j) * (qn + j + 1)) / ((qn - j + 1) * (qn - j + 2)))
        )
        if rho < 1.0 and b_next / (1.0 - rho) <= policy.tol:
            result = np.sin(u_arr) * total
            return float(result) if np.ndim(u) == 0 else result
    raise TruncationCapError(
        f"ladder series needs more than {policy.l_max_cap} terms at t={t}"
    )


def psi(m_exponent: int, q: ThetaQuery, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Psi with m_exponent ladder applications on theta_{q.m}(t, u)."""
    return psi_sum(m_exponent, q.m, q.t, q.u, policy)


def jacobi_theta2_reference(z: float, tau_imag: float,
                            policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Second Jacobi theta function at purely imaginary lattice parameter.

    Sums 2 sum_{l>=0} exp(-pi tau_imag (l + 1/2)^2) cos((2l+1) pi z)
    directly; real-valued here.  Kept independent of ``theta`` so the two
    summations can certify each other.
    """
    if not tau_imag > 0:
        raise DomainError(f"imaginary part of tau must be positive, got {tau_imag}")
    total = 0.0
    for l in range(policy.l_max_cap + 1):
        total += 2.0 * math.exp(-math.pi * tau_imag * (l + 0.5) ** 2) * math.cos(
            (2 * l + 1) * math.pi * z
        )
        b_next = 2.0 * math.exp(-math.pi * tau_imag * (l + 1.5) ** 2)
        rho = math.exp(-math.pi * tau_imag * (2 * l + 4))
        if rho < 1.0 and b_next / (1.0 - rho) <= policy.tol:
            return total
    raise TruncationCapError(
        f"theta2 series needs more than {policy.l_max_cap} terms at tau={tau_imag}j"
    )
