import math

import numpy as np
import pytest

from ttwsusy.model import (
    Grid,
    ModelParams,
    energy,
    eval_angular,
    eval_radial,
    eval_wavefunction,
    inner_product,
    norm_constant,
    susy_energy,
    wavefunction_gram,
    weights_of,
)
from ttwsusy.specfun import laguerre

P_UNIT = ModelParams(k=1.0, a=1.0, b=1.0, omega=1.0)
P_GEN = ModelParams(k=2.0, a=1.5, b=2.5, omega=1.0)


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            ModelParams(k=0.0, a=1.0, b=1.0)
        with pytest.raises(ValueError):
            ModelParams(k=1.0, a=1.0, b=1.0, omega=-2.0)
        with pytest.raises(ValueError):
            ModelParams(k=1.0, a=-0.3, b=1.0)

    def test_warn_regime_flag(self):
        assert not P_GEN.warn_regime
        assert ModelParams(k=1.0, a=0.4, b=1.0).warn_regime


class TestSpectrum:
    def test_energy_values(self):
        assert energy(P_UNIT, 0, 0) == pytest.approx(6.0)
        assert energy(ModelParams(k=3.0, a=1.0, b=1.0), 1, 1) == pytest.approx(30.0)

    def test_ground_state_formula(self):
        p = ModelParams(k=2.5, a=1.3, b=0.9, omega=0.8)
        assert energy(p, 0, 0) == pytest.approx(2 * p.omega * ((p.a + p.b) * p.k + 1.0))

    def test_susy_energy_values(self):
        assert susy_energy(P_GEN, 0, 0) == 0.0
        assert susy_energy(ModelParams(k=2.0, a=1.0, b=1.0), 1, 1) == pytest.approx(12.0)
        assert susy_energy(ModelParams(k=2.5, a=1.0, b=1.0, omega=0.7), 2, 1) == pytest.approx(12.6)

    def test_susy_energy_is_energy_difference_exactly(self):
        p = ModelParams(k=math.sqrt(2.0), a=1.2, b=0.8, omega=0.9)
        for N in range(5):
            for n in range(5):
                assert susy_energy(p, N, n) == energy(p, N, n) - energy(p, 0, 0)
                assert susy_energy(p, N, n) == pytest.approx(4 * p.omega * (N + n * p.k), rel=1e-13)


class TestWeights:
    def test_values(self):
        w = weights_of(P_UNIT, 0)
        assert (w.tau, w.q) == pytest.approx((1.5, -1.5))
        assert weights_of(P_GEN, 1).tau == pytest.approx(6.5)

    def test_charge_independent_of_n(self):
        qs = {weights_of(P_GEN, n).q for n in range(6)}
        assert len(qs) == 1

    def test_atypicality_relation(self):
        for n in range(7):
            w = weights_of(P_GEN, n)
            assert w.tau + w.q == pytest.approx(n * P_GEN.k, abs=1e-12)
            assert (w.tau + w.q == 0) == (n == 0)


class TestFactors:
    def test_radial_vanishes_at_origin(self):
        assert eval_radial(P_GEN, 0, 0, 0.0) == 0.0

    def test_radial_ratio_is_laguerre(self):
        z = 1.7
        alpha = P_GEN.sector_alpha(2)
        ratio = eval_radial(P_GEN, 1, 2, z) / eval_radial(P_GEN, 0, 2, z)
        assert ratio == pytest.approx(laguerre(1, alpha, z), rel=1e-13)

    def test_radial_decay(self):
        # positive and decaying at large z relative to the peak scale
        assert 0 < eval_radial(P_GEN, 0, 0, 60.0) < eval_radial(P_GEN, 0, 0, 8.0)

    def test_angular_ground_value(self):
        assert eval_angular(P_UNIT, 0, math.pi / 4) == pytest.approx(0.5, rel=1e-14)

    def test_angular_node(self):
        p = ModelParams(k=2.0, a=1.0, b=1.0)
        assert eval_angular(p, 1, math.pi / 8) == pytest.approx(0.0, abs=1e-14)

    def test_angular_mirror_parity(self):
        p = ModelParams(k=2.0, a=1.3, b=1.3)
        for n in range(5):
            left = eval_angular(p, n, p.phi_max - 0.31)
            right = eval_angular(p, n, 0.31)
            assert left == pytest.approx((-1) ** n * right, rel=1e-12)

    def test_angular_domain_error(self):
        with pytest.raises(ValueError):
            eval_angular(P_GEN, 0, 0.0)
        with pytest.raises(ValueError):
            eval_angular(P_GEN, 0, P_GEN.phi_max)


class TestNormalization:
    def test_norm_constant_sign(self):
        for n in range(3):
            assert norm_constant(P_GEN, 0, n) > 0
            assert norm_constant(P_GEN, 1, n) < 0
            assert norm_constant(P_GEN, 2, n) > 0

    def test_unit_norm(self):
        grid = Grid.for_pair(P_GEN, 0, 0, 48, 48)
        f = eval_wavefunction(P_GEN, 0, 0, grid.r, grid.phi)
        assert inner_product(grid, f, f) == pytest.approx(1.0, abs=1e-10)

    def test_orthogonality(self):
        grid = Grid.for_pair(P_GEN, 0, 0, 48, 48)
        f = eval_wavefunction(P_GEN, 0, 0, grid.r, grid.phi)
        g = eval_wavefunction(P_GEN, 1, 0, grid.r, grid.phi)
        assert inner_product(grid, f, g) == pytest.approx(0.0, abs=1e-10)

    def test_gram_identity(self):
        gram = wavefunction_gram(P_GEN, (4, 4), 64, 64)
        assert np.max(np.abs(gram - np.eye(gram.shape[0]))) < 1e-9

    def test_ground_state_positive(self):
        rng = np.random.default_rng(3)
        r = rng.uniform(0.1, 3.0, 200)
        phi = rng.uniform(0.02, 0.98, 200) * P_GEN.phi_max
        assert np.all(eval_wavefunction(P_GEN, 0, 0, r, phi) > 0)

    def test_boundary_error(self):
        with pytest.raises(ValueError):
            eval_wavefunction(P_GEN, 0, 0, 0.0, 0.3)


class TestGrid:
    def test_mismatched_grids_rejected(self):
        g1 = Grid.for_sector(P_GEN, 0, m_rad=24, m_ang=24)
        g2 = Grid.for_sector(P_GEN, 0, m_rad=32, m_ang=32)
        f = eval_wavefunction(P_GEN, 0, 0, g1.r, g1.phi)
        g = eval_wavefunction(P_GEN, 0, 0, g2.r, g2.phi)
        with pytest.raises(ValueError):
            inner_product(g1, f, g)

    def test_invalid_exponent(self):
        with pytest.raises(ValueError):
            Grid(P_GEN, -1.5)
