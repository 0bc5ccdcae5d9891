"""Closed-form ladder data and irreducible-representation bases.

For a fixed angular quantum number n the bound states organize into a
single superalgebra irrep.  Writing

    lam = (n + a + b) k      mu = n k      alpha_n = lam + mu = (2n+a+b)k
    tau = (n + (a+b)/2) k + 1/2            q = -[(a+b)k + 1]/2

the zero-fermion states |tau, tau+N, q> carry the radial ladder

    K+ -> sqrt((N+1)(2 tau + N))     K- -> sqrt(N (2 tau + N - 1)),

the odd raising operators generate one- and two-fermion states with
closed-form expansions (``v_action``), and the one-fermion states
recombine into two orthonormal radial towers with lowest weights
tau -/+ 1/2 (``mixing_coeffs``).  For n = 0 the one-fermion towers
coincide, the two-fermion tower is empty and the irrep is a shortened
(atypical) lowest-weight one.

This module also evaluates the quadratic and cubic Casimir operators,
as matrix polynomials in the eight generator matrices and as closed
forms n(n+a+b)k^2 and -(a+b) n (n+a+b) k^3 / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, norm_constant, weights_of
from .states import OCC_VAC, OCC_XBAR, OCC_XYBAR, OCC_YBAR, CatalogState, term

__all__ = [
    "BasisState",
    "IrrepLabel",
    "casimir_eigenvalues",
    "casimir_matrices",
    "classify",
    "k_ladder_coeff",
    "mixing_coeffs",
    "one_fermion_state",
    "overlap",
    "sector_basis",
    "sp2_family_state",
    "two_fermion_state",
    "v_action",
    "zero_fermion_state",
]

FAMILIES = ("zero", "lower", "upper", "double")


def _lam_mu(params: ModelParams, n: int) -> tuple[float, float]:
    return (n + params.a + params.b) * params.k, n * params.k


def k_ladder_coeff(direction: str, tau: float, N: int) -> float:
    """Radial ladder matrix element sqrt((N+1)(2tau+N)) or sqrt(N(2tau+N-1))."""
    if direction == "+":
        return math.sqrt((N + 1.0) * (2.0 * tau + N))
    if direction == "-":
        return math.sqrt(N * (2.0 * tau + N - 1.0))
    raise ValueError("direction must be '+' or '-'")


def zero_fermion_state(params: ModelParams, N: int, n: int) -> CatalogState:
    """Normalized |tau, tau+N, q> = Psi_{N,n} x fermion vacuum."""
    return CatalogState.of(term(norm_constant(params, N, n), N, n, OCC_VAC))


def v_action(direction: str, params: ModelParams, N: int, n: int) -> CatalogState:
    """Exact finite expansion of the odd raising/lowering action on
    the zero-fermion state |tau, tau+N, q>.

    The 1/sqrt(z) prefactor of the one-fermion pieces is carried by
    the occupation convention of the catalog terms.
    """
    lam, mu = _lam_mu(params, n)
    alpha = lam + mu
    c = norm_constant(params, N, n)
    if direction == "+":
        return CatalogState.of(
            term(c * (N + lam + 1.0), N, n, OCC_XBAR),
            term(-c * (N + 1.0), N + 1, n, OCC_XBAR),
            term(-c * lam, N, n, OCC_YBAR),
        )
    if direction == "-":
        return CatalogState.of(
            term(c * (N + mu), N, n, OCC_XBAR),
            term(-c * (N + alpha), N - 1, n, OCC_XBAR),
            term(c * lam, N, n, OCC_YBAR),
        )
    raise ValueError("direction must be '+' or '-'")


def one_fermion_state(sign: str, params: ModelParams, N: int, n: int) -> CatalogState:
    """Normalized one-fermion state |+-, tau+N+-1/2, q+1/2>."""
    lam, mu = _lam_mu(params, n)
    if sign == "+":
        return v_action("+", params, N, n).scaled(1.0 / math.sqrt(N + lam + 1.0))
    if sign == "-":
        if N + mu == 0.0:
            return CatalogState.zero()
        return v_action("-", params, N, n).scaled(1.0 / math.sqrt(N + mu))
    raise ValueError("sign must be '+' or '-'")


def two_fermion_state(params: ModelParams, N: int, n: int) -> CatalogState:
    """Normalized |+-, tau+N, q+1>; identically zero for n = 0."""
    lam, mu = _lam_mu(params, n)
    if n == 0:
        return CatalogState.zero()
    c = norm_constant(params, N, n)
    return CatalogState.of(term(c * lam / math.sqrt(mu * lam), N, n, OCC_XYBAR))


def overlap(params: ModelParams, N: int, n: int) -> float:
    """Overlap of the two normalized one-fermion states at equal weight,

        sqrt( N [N + (2n+a+b)k] / ([N + (n+a+b)k] [N + nk]) ),

    defined for N >= 1 (there is no lowering image at N = 0)."""
    if N < 1:
        raise ValueError("overlap requires N >= 1")
    lam, mu = _lam_mu(params, n)
    return math.sqrt(N * (N + lam + mu) / ((N + lam) * (N + mu)))


def mixing_coeffs(params: ModelParams, N: int, n: int) -> tuple[float, float, float, float]:
    """Coefficients (alpha_N, beta_N, gamma_N, delta_N) recombining the
    one-fermion states into the orthonormal tau-1/2 and tau+1/2 towers."""
    if n < 1:
        raise ValueError("mixing_coeffs requires n >= 1 (denominators vanish at n = 0)")
    lam, mu = _lam_mu(params, n)
    alpha_n = lam + mu
    a_N = math.sqrt((N + alpha_n) * (N + mu) / (mu * alpha_n))
    b_N = -math.sqrt(N * (N + lam) / (mu * alpha_n))
    g_N = math.sqrt((N + 1.0) * (N + mu + 1.0) / (lam * alpha_n))
    d_N = -math.sqrt((N + lam + 1.0) * (N + alpha_n + 1.0) / (lam * alpha_n))
    return a_N, b_N, g_N, d_N


def sp2_family_state(params: ModelParams, family: str, level: int, n: int) -> CatalogState:
    """Orthonormal basis state of one sp(2,R) tower inside sector n.

    family 'zero':   |tau, tau+level, q>
    family 'lower':  |tau-1/2, tau-1/2+level, q+1/2>   (n >= 1 only)
    family 'upper':  |tau+1/2, tau+1/2+level, q+1/2>
    family 'double': |tau, tau+level, q+1>             (n >= 1 only)
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    if family == "zero":
        return zero_fermion_state(params, level, n)
    if family == "double":
        if n == 0:
            raise ValueError("two-fermion tower is empty for n = 0")
        return two_fermion_state(params, level, n)
    if family == "upper":
        if n == 0:
            return one_fermion_state("+", params, level, n)
        _, _, g_N, d_N = mixing_coeffs(params, level, n)
        return one_fermion_state("-", params, level + 1, n).scaled(g_N) + one_fermion_state(
            "+", params, level, n
        ).scaled(d_N)
    if family == "lower":
        if n == 0:
            raise ValueError("lower one-fermion tower is absent for n = 0")
        a_N, b_N, _, _ = mixing_coeffs(params, level, n)
        state = one_fermion_state("-", params, level, n).scaled(a_N)
        if level >= 1:
            state = state + one_fermion_state("+", params, level - 1, n).scaled(b_N)
        return state
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class BasisState:
    """One orthonormal basis state with its expected weight labels."""

    n: int
    family: str
    level: int
    state: CatalogState
    k0: float
    y: float


def sector_basis(params: ModelParams, n: int, levels: int) -> list[BasisState]:
    """Orthonormal super-basis of sector n up to radial level ``levels``."""
    w = weights_of(params, n)
    families = ("zero", "upper") if n == 0 else FAMILIES
    offsets = {"zero": (0.0, 0.0), "lower": (-0.5, 0.5), "upper": (0.5, 0.5), "double": (0.0, 1.0)}
    out = []
    for family in families:
        dk0, dy = offsets[family]
        for level in range(levels + 1):
            out.append(
                BasisState(
                    n,
                    family,
                    level,
                    sp2_family_state(params, family, level, n),
                    w.tau + dk0 + level,
                    w.q + dy,
                )
            )
    return out


def casimir_matrices(mats: dict[str, np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Quadratic and cubic Casimir operators as matrix polynomials,

        C2 = K0(K0-1) - Y(Y+1) - K+K- + V-W+ - V+W-
        C3 = (K0+Y)(K0-Y-1)(Y+1/2) - (Y+1/2)K+K-
             + [K-V+ - (K0-3Y)V-]W+/2 + [K+V- - (K0+3Y)V+]W-/2.
    """
    K0, Kp, Km, Y = mats["K0"], mats["K+"], mats["K-"], mats["Y"]
    Vp, Vm, Wp, Wm = mats["V+"], mats["V-"], mats["W+"], mats["W-"]
    eye = np.eye(K0.shape[0])
    c2 = K0 @ (K0 - eye) - Y @ (Y + eye) - Kp @ Km + Vm @ Wp - Vp @ Wm
    c3 = (
        (K0 + Y) @ (K0 - Y - eye) @ (Y + 0.5 * eye)
        - (Y + 0.5 * eye) @ Kp @ Km
        + 0.5 * (Km @ Vp - (K0 - 3.0 * Y) @ Vm) @ Wp
        + 0.5 * (Kp @ Vm - (K0 + 3.0 * Y) @ Vp) @ Wm
    )
    return c2, c3


def casimir_eigenvalues(params: ModelParams, n: int) -> tuple[float, float]:
    """Closed-form Casimir pair of sector n; both vanish at n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, a, b = params.k, params.a, params.b
    c2 = n * (n + a + b) * k * k
    return c2, -0.5 * (a + b) * k * c2


@dataclass(frozen=True)
class IrrepLabel:
    """Classification of the sector-n irrep and its even-subalgebra content."""

    n: int
    kind: str  # 'atypical-LWS' or 'non-LWS'
    blocks: tuple[tuple[float, float], ...]
    motion_integral_eigenvalue: float


def classify(params: ModelParams, n: int) -> IrrepLabel:
    """Irrep kind, (tau-like, q-like) block list and the eigenvalue
    (2n+a+b)^2 k^2 of the angular integral of motion."""
    w = weights_of(params, n)
    x_eig = (2 * n + params.a + params.b) ** 2 * params.k**2
    if n == 0:
        blocks = ((w.tau, w.q), (w.tau + 0.5, w.q + 0.5))
        return IrrepLabel(n, "atypical-LWS", blocks, x_eig)
    blocks = ((w.tau, w.q), (w.tau - 0.5, w.q + 0.5), (w.tau + 0.5, w.q + 0.5), (w.tau, w.q + 1.0))
    return IrrepLabel(n, "non-LWS", blocks, x_eig)
