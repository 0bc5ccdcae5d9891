"""Catalog states and their analytic evaluation as spinor fields.

A catalog state is a finite linear combination of factorized basis
functions closed under the action of all eight superalgebra
generators.  Each term is labelled by (N, n, shift, occ):

    occ 0 (vacuum):   Z_N^((2n+a+b)k)(z)          Phi_n^(a,b)(phi)        |00>
    occ 1 (xbar):     z^(-1/2) Z_N^((2n+a+b)k)(z) Phi_n^(a,b)(phi)        bdag_xbar|0>
    occ 2 (ybar):     z^(-1/2) Z_N^((2n+a+b)k)(z) Phi_{n-1}^(a+1,b+1)     bdag_ybar|0>
    occ 3 (xbar ybar):          Z_N^((2n+a+b)k)(z) Phi_{n-1}^(a+1,b+1)    bdag_xbar bdag_ybar|0>

where Z and Phi are the radial/angular eigenfunction factors.  The
``shift`` field records the (a,b) -> (a+1,b+1) shift explicitly; terms
with a negative radial or angular index are the zero function (the
ladder expansions use that sentinel implicitly).

Because the barred fermion modes depend on phi, a term's fixed-basis
spinor components pick up cos(phi)/sin(phi) factors, and the angular
derivative acts on those too.  ``state_bundle`` returns the exact
values and first/second polar derivatives of every fixed-basis
component on a set of sample points; the generator module assembles
its differential operators pointwise from these bundles, so there is
no discretization error anywhere.

Spinor fields themselves are plain (4, npts) float arrays in the fixed
fermion basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .model import ModelParams
from .specfun import jacobi, laguerre

__all__ = [
    "CatalogState",
    "CatalogTerm",
    "OCC_VAC",
    "OCC_XBAR",
    "OCC_XYBAR",
    "OCC_YBAR",
    "StateBundle",
    "state_bundle",
    "state_field",
    "zero_field",
]

OCC_VAC, OCC_XBAR, OCC_YBAR, OCC_XYBAR = 0, 1, 2, 3

FERMION_NUMBER = {OCC_VAC: 0, OCC_XBAR: 1, OCC_YBAR: 1, OCC_XYBAR: 2}

# default (a,b) shift per occupation, following the ladder expansions
_OCC_SHIFT = {OCC_VAC: 0, OCC_XBAR: 0, OCC_YBAR: 1, OCC_XYBAR: 1}


@dataclass(frozen=True)
class CatalogTerm:
    coeff: float
    N: int
    n: int
    shift: int
    occ: int

    @property
    def angular_index(self) -> int:
        return self.n - self.shift

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0.0 or self.N < 0 or self.angular_index < 0


def term(coeff: float, N: int, n: int, occ: int, shift: int | None = None) -> CatalogTerm:
    """Catalog term with the occupation's conventional (a,b) shift."""
    return CatalogTerm(float(coeff), N, n, _OCC_SHIFT[occ] if shift is None else shift, occ)


@dataclass(frozen=True)
class CatalogState:
    """Finite linear combination of catalog terms (immutable)."""

    terms: tuple[CatalogTerm, ...]

    @classmethod
    def of(cls, *terms_: CatalogTerm) -> "CatalogState":
        return cls(tuple(t for t in terms_ if not t.is_zero))

    @classmethod
    def zero(cls) -> "CatalogState":
        return cls(())

    def __add__(self, other: "CatalogState") -> "CatalogState":
        return CatalogState(self.terms + other.terms).simplify()

    def scaled(self, c: float) -> "CatalogState":
        return CatalogState(tuple(replace(t, coeff=c * t.coeff) for t in self.terms))

    def simplify(self) -> "CatalogState":
        acc: dict[tuple, float] = {}
        for t in self.terms:
            if t.is_zero:
                continue
            key = (t.N, t.n, t.shift, t.occ)
            acc[key] = acc.get(key, 0.0) + t.coeff
        return CatalogState(
            tuple(CatalogTerm(c, N, n, shift, occ) for (N, n, shift, occ), c in acc.items() if c != 0.0)
        )

    @property
    def is_zero(self) -> bool:
        return all(t.is_zero for t in self.terms)

    def fermion_parity(self) -> int:
        """0 for even (0- or 2-fermion) states, 1 for odd; mixed parity is rejected."""
        parities = {FERMION_NUMBER[t.occ] % 2 for t in self.terms if not t.is_zero}
        if not parities:
            return 0
        if len(parities) > 1:
            raise ValueError("catalog state mixes fermion parities")
        return parities.pop()


@dataclass
class StateBundle:
    """Values and polar derivatives of the four fixed-basis components."""

    val: np.ndarray
    d_r: np.ndarray
    d_rr: np.ndarray
    d_phi: np.ndarray
    d_phiphi: np.ndarray

    @classmethod
    def zeros(cls, npts: int) -> "StateBundle":
        return cls(*(np.zeros((4, npts)) for _ in range(5)))


def _radial_parts(trm: CatalogTerm, params: ModelParams, z: np.ndarray):
    """(R, dR/dz, d2R/dz2) for the term's radial factor."""
    alpha = params.sector_alpha(trm.n)
    p = 0.5 * alpha - (0.5 if FERMION_NUMBER[trm.occ] == 1 else 0.0)
    logz = np.log(z)
    pref = np.exp(p * logz - 0.5 * z - 0.5 * alpha * math.log(params.omega))
    L = laguerre(trm.N, alpha, z)
    Ld = -laguerre(trm.N - 1, alpha + 1.0, z) if trm.N >= 1 else np.zeros_like(z)
    Ldd = laguerre(trm.N - 2, alpha + 2.0, z) if trm.N >= 2 else np.zeros_like(z)
    g = p / z - 0.5
    R = pref * L
    Rz = pref * (g * L + Ld)
    Rzz = pref * ((g * g - p / z**2) * L + 2.0 * g * Ld + Ldd)
    return R, Rz, Rzz


def _angular_parts(trm: CatalogTerm, params: ModelParams, phi: np.ndarray):
    """(A, dA/dphi, d2A/dphi2) for the term's angular factor."""
    A_exp = params.a + trm.shift
    B_exp = params.b + trm.shift
    m = trm.angular_index
    mu, nu = A_exp - 0.5, B_exp - 0.5
    k = params.k

    c = np.cos(k * phi)
    s = np.sin(k * phi)
    xi = np.clip(-np.cos(2.0 * k * phi), -1.0, 1.0)
    tan, cot = s / c, c / s

    env = c**A_exp * s**B_exp
    env1 = env * k * (B_exp * cot - A_exp * tan)
    env2 = env * ((k * (B_exp * cot - A_exp * tan)) ** 2 - k * k * (B_exp / s**2 + A_exp / c**2))

    P = jacobi(m, mu, nu, xi)
    Pd = 0.5 * (m + mu + nu + 1.0) * jacobi(m - 1, mu + 1.0, nu + 1.0, xi) if m >= 1 else np.zeros_like(xi)
    Pdd = (
        0.25 * (m + mu + nu + 1.0) * (m + mu + nu + 2.0) * jacobi(m - 2, mu + 2.0, nu + 2.0, xi)
        if m >= 2
        else np.zeros_like(xi)
    )
    xi1 = 4.0 * k * s * c
    xi2 = 4.0 * k * k * (c * c - s * s)
    Pphi = Pd * xi1
    Pphiphi = Pdd * xi1 * xi1 + Pd * xi2

    A0 = env * P
    A1 = env1 * P + env * Pphi
    A2 = env2 * P + 2.0 * env1 * Pphi + env * Pphiphi
    return A0, A1, A2


def _occupation_trig(occ: int, phi: np.ndarray):
    """Nonzero fixed-basis components as (index, t, t', t'') triples."""
    one = np.ones_like(phi)
    zero = np.zeros_like(phi)
    if occ == OCC_VAC:
        return [(0, one, zero, zero)]
    if occ == OCC_XYBAR:
        # bdag_xbar bdag_ybar|0> = bdag_x bdag_y|0> for every phi
        return [(3, one, zero, zero)]
    c, s = np.cos(phi), np.sin(phi)
    if occ == OCC_XBAR:
        return [(1, c, -s, -c), (2, s, c, -s)]
    if occ == OCC_YBAR:
        return [(1, -s, -c, s), (2, c, -s, -c)]
    raise ValueError(f"unknown occupation {occ}")


def state_bundle(state: CatalogState, params: ModelParams, r: np.ndarray, phi: np.ndarray) -> StateBundle:
    """Exact values and polar derivatives of the state's components."""
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if np.any(r <= 0) or np.any(phi <= 0) or np.any(phi >= params.phi_max):
        raise ValueError("sample points must lie strictly inside the domain")
    z = params.omega * r**2
    out = StateBundle.zeros(r.size)
    for trm in state.terms:
        if trm.is_zero:
            continue
        R, Rz, Rzz = _radial_parts(trm, params, z)
        A0, A1, A2 = _angular_parts(trm, params, phi)
        u = R * A0
        u_r = 2.0 * params.omega * r * Rz * A0
        u_rr = (2.0 * params.omega * Rz + 4.0 * params.omega * z * Rzz) * A0
        u_p = R * A1
        u_pp = R * A2
        for idx, t, t1, t2 in _occupation_trig(trm.occ, phi):
            c = trm.coeff
            out.val[idx] += c * t * u
            out.d_r[idx] += c * t * u_r
            out.d_rr[idx] += c * t * u_rr
            out.d_phi[idx] += c * (t1 * u + t * u_p)
            out.d_phiphi[idx] += c * (t2 * u + 2.0 * t1 * u_p + t * u_pp)
    return out


def state_field(state: CatalogState, params: ModelParams, r: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Sample the state as a (4, npts) fixed-basis spinor field."""
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    z = params.omega * r**2
    vals = np.zeros((4, r.size))
    for trm in state.terms:
        if trm.is_zero:
            continue
        R, _, _ = _radial_parts(trm, params, z)
        A0, _, _ = _angular_parts(trm, params, phi)
        u = R * A0
        for idx, t, _, _ in _occupation_trig(trm.occ, phi):
            vals[idx] += trm.coeff * t * u
    return vals


def zero_field(npts: int) -> np.ndarray:
    return np.zeros((4, npts))
