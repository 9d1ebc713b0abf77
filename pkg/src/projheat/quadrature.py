"""Gauss-Legendre rules and endpoint-regularized square-root integrals.

The integrals of interest run over u in [d, pi/2] against the weight
(cos^2 d - cos^2 u)^(+1/2 or -1/2), which is singular (or has square-root
behaviour) at the lower endpoint.  The substitution

    cos u = cos d * sin(phi),        phi in [0, pi/2],

turns both weights into smooth integrands: the Jacobian du contributes
cos d * cos(phi) / sin(u), which cancels the -1/2 weight exactly and
reduces the +1/2 weight to cos^2 d * cos^2(phi).  Gauss-Legendre then
converges geometrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, QuadratureConvergenceError

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of a Gauss-Legendre rule on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def count(self) -> int:
        return self.nodes.size

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(self.weights @ np.asarray(f(self.nodes), dtype=float))


_RULE_CACHE: dict[int, QuadratureRule] = {}


def _legendre_and_derivative(n: int, x: np.ndarray):
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p, p_prev = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k, p
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def gauss_legendre_rule(count: int) -> QuadratureRule:
    """Gauss-Legendre rule on [-1, 1], exact for degree <= 2*count - 1.

    Nodes are the Legendre roots found by Newton iteration from the
    standard cosine initial guesses; weights are 2 / ((1 - x^2) P_n'^2).
    Results are cached and the returned arrays are read-only.
    """
    if count < 1:
        raise DomainError(f"node count must be >= 1, got {count}")
    cached = _RULE_CACHE.get(count)
    if cached is not None:
        return cached
    if count == 1:
        nodes = np.array([0.0])
        weights = np.array([2.0])
    else:
        n = count
        k = np.arange(1, n + 1, dtype=float)
        x = np.cos(math.pi * (k - 0.25) / (n + 0.5))
        for _ in range(100):
            p, dp = _legendre_and_derivative(n, x)
            dx = p / dp
            x -= dx
            if np.max(np.abs(dx)) < 1e-15:
                break
        else:
            raise QuadratureConvergenceError(f"Newton iteration stalled for count={count}")
        _, dp = _legendre_and_derivative(n, x)
        weights = 2.0 / ((1.0 - x * x) * dp * dp)
        # enforce exact symmetry about the origin
        order = np.argsort(x)
        x = x[order]
        weights = weights[order]
        x = 0.5 * (x - x[::-1])
        weights = 0.5 * (weights + weights[::-1])
        if n % 2 == 1:
            x[n // 2] = 0.0
        nodes = x
    nodes.setflags(write=False)
    weights.setflags(write=False)
    rule = QuadratureRule(nodes=nodes, weights=weights)
    _RULE_CACHE[count] = rule
    return rule


@dataclass(frozen=True)
class SqrtWeightedIntegral:
    """Integral over [d, pi/2] with weight (cos^2 d - cos^2 u)^exponent_sign."""

    d: float
    exponent_sign: float

    def __post_init__(self):
        if not (0.0 <= self.d < _HALF_PI):
            raise DomainError(f"lower limit must lie in [0, pi/2), got {self.d}")
        if self.exponent_sign not in (0.5, -0.5):
            raise DomainError(f"weight exponent must be +0.5 or -0.5, got {self.exponent_sign}")


def integrate_weighted(spec: SqrtWeightedIntegral, g: Callable[[np.ndarray], np.ndarray],
                       rule: QuadratureRule) -> float:
    """Integral of (cos^2 d - cos^2 u)^(+-1/2) * g(u) over [d, pi/2].

    ``g`` is evaluated at interior points only.  For the -1/2 weight with
    d = 0 the transformed integrand is smooth provided g carries a sin(u)
    factor, which every caller in this package does.
    """
    c = math.cos(spec.d)
    phi = (rule.nodes + 1.0) * (0.25 * math.pi)
    sin_phi = np.sin(phi)
    sin_u = np.sqrt(1.0 - (c * sin_phi) ** 2)
    u = np.arccos(c * sin_phi)
    gv = np.asarray(g(u), dtype=float)
    if spec.exponent_sign > 0:
        integrand = (c * c) * np.cos(phi) ** 2 * gv / sin_u
    else:
        integrand = gv / sin_u
    return float((0.25 * math.pi) * (rule.weights @ integrand))


class AdaptiveResult(NamedTuple):
    value: float
    nodes: int
    est_error: float


def adaptive_integrate(spec: SqrtWeightedIntegral, g: Callable[[np.ndarray], np.ndarray],
                       tol: float, start: int = 16, cap: int = 4096) -> AdaptiveResult:
    """Double the node count until two successive estimates agree within tol.

    Raises QuadratureConvergenceError if the cap is reached first.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    count = start
    est = integrate_weighted(spec, g, gauss_legendre_rule(count))
    while count < cap:
        count *= 2
        new = integrate_weighted(spec, g, gauss_legendre_rule(count))
        diff = abs(new - est)
        if diff <= tol:
            return AdaptiveResult(value=new, nodes=count, est_error=diff)
        est = new
    raise QuadratureConvergenceError(
        f"no convergence to tol={tol} within {cap} nodes"
    )
