"""Jacobi and Gegenbauer polynomials and the derivative-ladder operator.

Evaluation is by forward three-term recurrence in the degree, which is
stable for the weight exponents used here (all > -1/2) and exact to
roundoff at degrees 0 and 1.  The operator

    L = -(1/sin u) d/du,

acting on functions of cos u, is plain d/d(cos u); applied to Gegenbauer
terms it is handled algebraically through the order-raising identity

    L^m C_l^lam(cos u) = 2^m (lam)_m C_{l-m}^{lam+m}(cos u),

never by numerical differentiation.  All functions are pure and accept
scalars or numpy arrays for the evaluation point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# cos() roundoff can land arguments marginally outside [-1, 1]
_X_SLACK = 1e-12

# switch Pochhammer/binomial products to log space above this degree
_LOG_SPACE_DEGREE = 150


@dataclass(frozen=True)
class JacobiParams:
    """Degree and weight exponents (alpha, beta) of a Jacobi polynomial."""

    l: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.l < 0:
            raise DomainError(f"degree must be >= 0, got {self.l}")
        if not (self.alpha > -0.5 and self.beta > -0.5):
            raise DomainError(
                f"weight exponents must exceed -1/2, got alpha={self.alpha}, beta={self.beta}"
            )


@dataclass(frozen=True)
class GegenbauerParams:
    """Degree and order of an ultraspherical (Gegenbauer) polynomial."""

    l: int
    lam: float

    def __post_init__(self):
        if self.l < 0:
            raise DomainError(f"degree must be >= 0, got {self.l}")
        if not self.lam > 0:
            raise DomainError(f"order must be positive, got {self.lam}")


@dataclass(frozen=True)
class LadderResult:
    """Algebraic image of an iterated ladder application.

    Represents the function ``scale * C_degree^order(cos u)``; when
    ``degree`` is negative the represented function is identically zero
    (the operator has differentiated the polynomial away).
    """

    scale: float
    degree: int
    order: float

    @property
    def is_zero(self) -> bool:
        return self.degree < 0

    def evaluate(self, x):
        """Value of the represented function at x = cos(u)."""
        if self.is_zero:
            return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
        return self.scale * _gegenbauer_values(self.degree, self.order, _check_x(x))


def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -1.0 - _X_SLACK) or np.any(arr > 1.0 + _X_SLACK):
        raise DomainError("evaluation point outside [-1, 1]")
    return np.clip(arr, -1.0, 1.0)


def _scalar_or_array(values, x):
    return float(values) if np.ndim(x) == 0 else values


def _jacobi_values(l: int, a: float, b: float, x: np.ndarray) -> np.ndarray:
    p_prev = np.ones_like(x)
    if l == 0:
        return p_prev
    p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, l + 1):
        c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
        c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b)
        c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        p, p_prev = ((c2 + c3 * x) * p - c4 * p_prev) / c1, p
    return p


def jacobi_p(params: JacobiParams, x):
    """Evaluate P_l^(alpha,beta) at x in [-1, 1] by three-term recurrence."""
    xv = _check_x(x)
    return _scalar_or_array(_jacobi_values(params.l, params.alpha, params.beta, xv), x)


def jacobi_endpoint(l: int, alpha: float) -> float:
    """P_l^(alpha,beta)(1) = binom(l + alpha, l), independent of beta."""
    if l > _LOG_SPACE_DEGREE:
        return math.exp(math.lgamma(l + alpha + 1) - math.lgamma(alpha + 1) - math.lgamma(l + 1))
    out = 1.0
    for i in range(1, l + 1):
        out *= (alpha + i) / i
    return out


def _gegenbauer_values(l: int, lam: float, x: np.ndarray) -> np.ndarray:
    c_prev = np.ones_like(x)
    if l == 0:
        return c_prev
    c = 2.0 * lam * x
    for k in range(2, l + 1):
        c, c_prev = (2.0 * (k + lam - 1.0) * x * c - (k + 2.0 * lam - 2.0) * c_prev) / k, c
    return c


def gegenbauer_c(params: GegenbauerParams, x):
    """Evaluate C_l^lam at x in [-1, 1] by three-term recurrence.

    For lam = 1 this is the Dirichlet-type ratio sin((l+1)u)/sin(u) at
    x = cos(u).
    """
    xv = _check_x(x)
    return _scalar_or_array(_gegenbauer_values(params.l, params.lam, xv), x)


def gegenbauer_endpoint(degree: int, lam: float) -> float:
    """C_degree^lam(1) = binom(degree + 2*lam - 1, degree); bounds |C| on [-1, 1]."""
    if degree < 0:
        return 0.0
    if degree > _LOG_SPACE_DEGREE:
        return math.exp(
            math.lgamma(degree + 2.0 * lam) - math.lgamma(2.0 * lam) - math.lgamma(degree + 1)
        )
    out = 1.0
    for i in range(1, degree + 1):
        out *= (2.0 * lam + i - 1.0) / i
    return out


def pochhammer(a: float, m: int) -> float:
    """Rising factorial (a)_m = a (a+1) ... (a+m-1)."""
    if m < 0:
        raise DomainError("pochhammer order must be >= 0")
    if m > _LOG_SPACE_DEGREE and a > 0:
        return math.exp(math.lgamma(a + m) - math.lgamma(a))
    out = 1.0
    for i in range(m):
        out *= a + i
    return out


def ladder_apply(m: int, source: GegenbauerParams) -> LadderResult:
    """Apply L m times to C_l^lam(cos u), staying in closed form.

    Returns the triple with scale 2^m (lam)_m, degree l - m and order
    lam + m; the zero function when the degree drops below zero.
    """
    if m < 0:
        raise DomainError(f"ladder count must be >= 0, got {m}")
    degree = source.l - m
    if degree < 0:
        return LadderResult(scale=0.0, degree=-1, order=source.lam + m)
    scale = (2.0**m) * pochhammer(source.lam, m)
    return LadderResult(scale=scale, degree=degree, order=source.lam + m)


def cosine_ladder(m: int, q: int) -> LadderResult:
    """Apply L m times to the single harmonic cos(q u).

    Uses L^m cos(qu) = q 2^(m-1) (m-1)! C_{q-m}^m(cos u); the zero
    function when q < m.
    """
    if m < 1:
        raise DomainError(f"ladder count must be >= 1, got {m}")
    if q < 1:
        raise DomainError(f"harmonic index must be >= 1, got {q}")
    degree = q - m
    if degree < 0:
        return LadderResult(scale=0.0, degree=-1, order=float(m))
    scale = q * (2.0 ** (m - 1)) * math.factorial(m - 1)
    return LadderResult(scale=scale, degree=degree, order=float(m))
