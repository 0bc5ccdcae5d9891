"""Model parameters, exact eigenfunctions, spectrum and inner products.

The planar Hamiltonian treated here is the deformed oscillator

    H_k = -d_r^2 - (1/r) d_r - (1/r^2) d_phi^2 + omega^2 r^2
          + (k^2/r^2) [a(a-1) sec^2(k phi) + b(b-1) csc^2(k phi)]

on 0 <= r < infinity, 0 < phi < pi/(2k).  Its bound states factor into
a Laguerre radial part in z = omega r^2 and a Jacobi angular part in
xi = -cos(2 k phi):

    Psi_{N,n} = C_{N,n} * (z/omega)^((n+(a+b)/2)k) L_N^((2n+a+b)k)(z) e^(-z/2)
                * cos^a(k phi) sin^b(k phi) P_n^((a-1/2, b-1/2))(xi)

with energies E_{N,n} = 2 omega [2N + (2n+a+b)k + 1].

Inner products use the measure r dr dphi.  Substituting z and xi maps
them onto Gauss-Laguerre x Gauss-Jacobi rules; the grid absorbs the
z^alpha e^-z and cos^2a sin^2b envelopes into its weights so that the
remaining integrand is polynomial and the quadrature exact.  Radial
reference exponents are chosen per angular sector (and per fermion
parity, which contributes a 1/z): see ``Grid.for_sector``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .specfun import gauss_rule, jacobi, laguerre, log_gamma

__all__ = [
    "Grid",
    "ModelParams",
    "Weights",
    "energy",
    "eval_angular",
    "eval_radial",
    "eval_wavefunction",
    "inner_product",
    "norm_constant",
    "susy_energy",
    "wavefunction_gram",
    "weights_of",
]


@dataclass(frozen=True)
class ModelParams:
    """Deformation k, coupling exponents a, b and oscillator frequency."""

    k: float
    a: float
    b: float
    omega: float = 1.0

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError("k must be positive")
        if not self.omega > 0:
            raise ValueError("omega must be positive")
        if not (self.a > 0 and self.b > 0):
            raise ValueError("a and b must be positive for normalizable states")

    @property
    def warn_regime(self) -> bool:
        """True when a or b lies in (0, 1/2]: normalizable but the
        angular quadrature weight exponents drop below zero."""
        return min(self.a, self.b) <= 0.5

    @property
    def phi_max(self) -> float:
        return math.pi / (2.0 * self.k)

    def sector_alpha(self, n: int) -> float:
        """Laguerre parameter (2n+a+b)k of the angular sector n."""
        return (2 * n + self.a + self.b) * self.k


@dataclass(frozen=True)
class Weights:
    """sp(2,R) lowest weight tau and so(2) charge q of a sector."""

    tau: float
    q: float


def energy(params: ModelParams, N: int, n: int) -> float:
    """E_{N,n} = 2 omega [2N + (2n+a+b)k + 1]."""
    return 2.0 * params.omega * (2 * N + params.sector_alpha(n) + 1.0)


def susy_energy(params: ModelParams, N: int, n: int) -> float:
    """Excitation energy above the ground state, 4 omega (N + n k)."""
    return energy(params, N, n) - energy(params, 0, 0)


def weights_of(params: ModelParams, n: int) -> Weights:
    """tau = (n + (a+b)/2) k + 1/2 and q = -[(a+b)k + 1]/2."""
    tau = (n + 0.5 * (params.a + params.b)) * params.k + 0.5
    q = -0.5 * ((params.a + params.b) * params.k + 1.0)
    return Weights(tau, q)


def eval_radial(params: ModelParams, N: int, n: int, z):
    """Unnormalized radial factor (z/omega)^((n+(a+b)/2)k) L_N^(alpha)(z) e^(-z/2)."""
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise ValueError("radial argument z = omega r^2 must be >= 0")
    alpha = params.sector_alpha(n)
    p = 0.5 * alpha
    with np.errstate(divide="ignore"):
        logpow = np.where(z > 0, p * (np.log(np.where(z > 0, z, 1.0)) - math.log(params.omega)), -np.inf)
    pref = np.where(z > 0, np.exp(logpow - 0.5 * z), 0.0)
    out = pref * laguerre(N, alpha, z)
    return out if out.ndim else float(out)


def eval_angular(params: ModelParams, n: int, phi):
    """Unnormalized angular factor cos^a sin^b P_n^((a-1/2, b-1/2))(xi)."""
    phi = np.asarray(phi, dtype=float)
    if np.any(phi <= 0) or np.any(phi >= params.phi_max):
        raise ValueError("phi must lie strictly inside (0, pi/(2k))")
    c = np.cos(params.k * phi)
    s = np.sin(params.k * phi)
    xi = -np.cos(2.0 * params.k * phi)
    out = c**params.a * s**params.b * jacobi(n, params.a - 0.5, params.b - 0.5, np.clip(xi, -1.0, 1.0))
    return out if out.ndim else float(out)


def norm_constant(params: ModelParams, N: int, n: int) -> float:
    """Normalization constant of Psi_{N,n}, with the (-1)^N phase.

    The phase makes the raising/lowering matrix elements of the radial
    sp(2,R) ladder positive.  Gamma-function ratios are evaluated in
    log space and exponentiated once.
    """
    if N < 0 or n < 0:
        raise ValueError("quantum numbers must be nonnegative")
    a, b, k = params.a, params.b, params.k
    alpha = params.sector_alpha(n)
    log_rad = 0.5 * (
        math.log(2.0) + (alpha + 1.0) * math.log(params.omega) + log_gamma(N + 1.0) - log_gamma(N + alpha + 1.0)
    )
    log_ang = 0.5 * (
        math.log(2.0 * k)
        + log_gamma(n + 1.0)
        + math.log(2 * n + a + b)
        + log_gamma(a + b + n)
        - log_gamma(a + n + 0.5)
        - log_gamma(b + n + 0.5)
    )
    return (-1.0) ** N * math.exp(log_rad + log_ang)


def eval_wavefunction(params: ModelParams, N: int, n: int, r, phi):
    """Normalized eigenfunction Psi_{N,n}(r, phi) at interior points."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    z = params.omega * r**2
    out = norm_constant(params, N, n) * eval_radial(params, N, n, z) * eval_angular(params, n, phi)
    return out if np.ndim(out) else float(out)


# ---------------------------------------------------------------------------
# Quadrature grids


@lru_cache(maxsize=256)
def _laguerre_rule(order: int, alpha_key: float):
    return gauss_rule("gauss-laguerre", order, alpha=alpha_key)


@lru_cache(maxsize=64)
def _jacobi_rule(order: int, alpha_key: float, beta_key: float):
    return gauss_rule("gauss-jacobi", order, alpha=alpha_key, beta=beta_key)


class Grid:
    """Tensor quadrature grid for the measure r dr dphi.

    ``alpha`` is the radial reference exponent: sums against the plain
    weights are exact whenever the integrand has the form
    z^alpha e^-z * poly(z)  x  cos^2a sin^2b * poly(xi)
    (shifted angular envelopes contribute (1-xi^2)/4 polynomial
    factors and stay exact).
    """

    def __init__(self, params: ModelParams, alpha: float, m_rad: int = 80, m_ang: int = 80):
        if alpha <= -1.0:
            raise ValueError("radial reference exponent must exceed -1")
        self.params = params
        self.alpha = float(alpha)
        self.m_rad = m_rad
        self.m_ang = m_ang

        rad = _laguerre_rule(m_rad, round(self.alpha, 12))
        self.z_nodes = rad.nodes
        self.r_nodes = np.sqrt(rad.nodes / params.omega)
        # plain weights: sum_i wz_i f(z_i) == integral f dz / (2 omega)
        # for f = z^alpha e^-z poly; computed in logs to dodge overflow
        self.wz = np.exp(np.log(rad.weights) + rad.nodes - self.alpha * np.log(rad.nodes)) / (2.0 * params.omega)

        ang = _jacobi_rule(m_ang, round(params.a - 0.5, 12), round(params.b - 0.5, 12))
        self.xi_nodes = ang.nodes
        self.phi_nodes = np.arccos(-ang.nodes) / (2.0 * params.k)
        self.wphi = ang.weights / (2.0 * params.k * (1.0 - ang.nodes) ** params.a * (1.0 + ang.nodes) ** params.b)

        rr, pp = np.meshgrid(self.r_nodes, self.phi_nodes, indexing="ij")
        self.r = rr.ravel()
        self.phi = pp.ravel()
        self.w = np.outer(self.wz, self.wphi).ravel()
        self.npts = self.r.size

    @classmethod
    def for_sector(cls, params: ModelParams, n: int, odd: bool = False, m_rad: int = 80, m_ang: int = 80) -> "Grid":
        """Grid whose radial exponent matches sector n; ``odd`` subtracts
        the 1/z carried by a pair of one-fermion factors."""
        return cls(params, params.sector_alpha(n) - (1.0 if odd else 0.0), m_rad, m_ang)

    @classmethod
    def for_pair(cls, params: ModelParams, n1: int, n2: int, m_rad: int = 80, m_ang: int = 80) -> "Grid":
        """Grid exact for products of sector-n1 and sector-n2 scalar states."""
        return cls(params, (n1 + n2 + params.a + params.b) * params.k, m_rad, m_ang)

    def inner(self, f: np.ndarray, g: np.ndarray) -> float:
        """Integral of f*g (summed over spinor components if present)."""
        f = np.asarray(f)
        g = np.asarray(g)
        if f.shape != g.shape or f.shape[-1] != self.npts:
            raise ValueError("mismatched grids: fields must be sampled on this grid")
        prod = np.sum(f * g, axis=0) if f.ndim == 2 else f * g
        return float(np.dot(self.w, prod))


def inner_product(grid: Grid, f: np.ndarray, g: np.ndarray) -> float:
    """Quadrature inner product over the shared tensor grid."""
    return grid.inner(f, g)


def wavefunction_gram(params: ModelParams, pairs_max: tuple[int, int], m_rad: int = 80, m_ang: int = 80) -> np.ndarray:
    """Gram matrix of the normalized eigenfunctions with N <= pairs_max[0]
    and n <= pairs_max[1].  Cross-sector entries use the pair grid whose
    radial exponent keeps the integrand polynomial."""
    N_max, n_max = pairs_max
    labels = [(N, n) for n in range(n_max + 1) for N in range(N_max + 1)]
    grids = {s: Grid.for_pair(params, s, 0, m_rad, m_ang) for s in range(2 * n_max + 1)}
    fields: dict[tuple[int, int, int], np.ndarray] = {}

    def sample(N, n, s):
        key = (N, n, s)
        if key not in fields:
            g = grids[s]
            fields[key] = eval_wavefunction(params, N, n, g.r, g.phi)
        return fields[key]

    gram = np.zeros((len(labels), len(labels)))
    for i, (N1, n1) in enumerate(labels):
        for j, (N2, n2) in enumerate(labels):
            if j < i:
                continue
            s = n1 + n2
            gram[i, j] = gram[j, i] = grids[s].inner(sample(N1, n1, s), sample(N2, n2, s))
    return gram
