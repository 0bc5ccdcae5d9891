"""Orthogonal polynomials, log-gamma and Gauss quadrature rules.

Everything downstream — wavefunction normalisation, inner products,
matrix elements of the superalgebra generators — reduces to evaluating
generalized Laguerre and Jacobi polynomials and integrating their
products against the natural weights.  This module provides the stable
three-term recurrences, the parameter-shift derivative identities

    d/dz L_N^(alpha)(z)      = -L_{N-1}^(alpha+1)(z)
    d/dx P_n^(alpha,beta)(x) = (n+alpha+beta+1)/2 * P_{n-1}^(alpha+1,beta+1)(x)

and Gauss-Laguerre / Gauss-Jacobi rules with their accuracy contract
(an m-point rule integrates polynomials of degree <= 2m-1 against its
weight exactly, to roundoff).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, roots_genlaguerre, roots_jacobi

__all__ = [
    "QuadratureRule",
    "gauss_rule",
    "jacobi",
    "jacobi_deriv",
    "laguerre",
    "laguerre_deriv",
    "log_gamma",
]


def log_gamma(x):
    """ln Gamma(x) for x > 0 (scalar or array)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("log_gamma requires x > 0")
    out = gammaln(x)
    return float(out) if out.ndim == 0 else out


def laguerre(n: int, alpha: float, z):
    """Generalized Laguerre polynomial L_n^(alpha)(z) by forward recurrence."""
    if n < 0:
        raise ValueError("laguerre requires n >= 0")
    if alpha <= -1.0:
        raise ValueError("laguerre requires alpha > -1")
    z = np.asarray(z, dtype=float)
    p_prev = np.ones_like(z)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 1.0 + alpha - z
    for j in range(1, n):
        p, p_prev = ((2 * j + alpha + 1 - z) * p - (j + alpha) * p_prev) / (j + 1), p
    return p if p.ndim else float(p)


def laguerre_deriv(n: int, alpha: float, z):
    """dL_n^(alpha)/dz; identically zero for n = 0."""
    if n == 0:
        z = np.asarray(z, dtype=float)
        out = np.zeros_like(z)
        return out if out.ndim else 0.0
    return -laguerre(n - 1, alpha + 1.0, z)


def jacobi(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha,beta)(x) on [-1, 1] by recurrence."""
    if n < 0:
        raise ValueError("jacobi requires n >= 0")
    if alpha <= -1.0 or beta <= -1.0:
        raise ValueError("jacobi requires alpha, beta > -1")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + 1e-12):
        raise ValueError("jacobi argument must lie in [-1, 1]")
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 0.5 * ((alpha + beta + 2.0) * x + (alpha - beta))
    for j in range(2, n + 1):
        c1 = 2.0 * j * (j + alpha + beta) * (2 * j + alpha + beta - 2)
        c2 = (2 * j + alpha + beta - 1) * (alpha * alpha - beta * beta)
        c3 = (2 * j + alpha + beta - 1) * (2 * j + alpha + beta) * (2 * j + alpha + beta - 2)
        c4 = 2.0 * (j + alpha - 1) * (j + beta - 1) * (2 * j + alpha + beta)
        p, p_prev = ((c2 + c3 * x) * p - c4 * p_prev) / c1, p
    return p if p.ndim else float(p)


def jacobi_deriv(n: int, alpha: float, beta: float, x):
    """dP_n^(alpha,beta)/dx; identically zero for n = 0."""
    if n == 0:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        return out if out.ndim else 0.0
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, x)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of an m-point Gauss rule.

    kind 'gauss-laguerre': weight z^alpha e^-z on (0, inf);
    kind 'gauss-jacobi':   weight (1-x)^alpha (1+x)^beta on (-1, 1).
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    alpha: float
    beta: float
    order: int


def gauss_rule(kind: str, order: int, alpha: float = 0.0, beta: float = 0.0) -> QuadratureRule:
    """Build the m-point Gauss rule for the requested weight function."""
    if order < 1:
        raise ValueError("gauss_rule requires order >= 1")
    if kind == "gauss-laguerre":
        if alpha <= -1.0:
            raise ValueError("gauss-laguerre weight requires alpha > -1")
        nodes, weights = roots_genlaguerre(order, alpha)
    elif kind == "gauss-jacobi":
        if alpha <= -1.0 or beta <= -1.0:
            raise ValueError("gauss-jacobi weight requires alpha, beta > -1")
        nodes, weights = roots_jacobi(order, alpha, beta)
    else:
        raise ValueError(f"unknown quadrature kind {kind!r}")
    return QuadratureRule(np.asarray(nodes), np.asarray(weights), kind, float(alpha), float(beta), order)
