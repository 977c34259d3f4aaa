import math

import numpy as np
import pytest

from wigner_lab import (
    SIGMA_X_BASIS,
    SIGMA_Z_BASIS,
    SpinDensityMatrix,
    apparatus_states,
    boost_params,
    boosted_orthogonality_residual,
    born_probabilities,
    click_simulator,
    cross_trace,
    detector_efficiency,
    gauss_hermite_grid,
    make_setup,
    momentum_on_shell,
    packet_efficiency,
    reduce,
    sigma_x_packet,
    static_orthogonality_residual,
)
from wigner_lab.measurement import normalized_system
from wigner_lab.wigner import boost_packet


def ideal_setup(overlap_c, v, xi=0.05, order=16, record_mode="ideal"):
    amp = 1.0 / math.sqrt(2.0 + 2.0 * overlap_c)
    return make_setup(amp, amp, overlap_c, xi, boost_params(v), order=order, record_mode=record_mode)


class TestBornProbabilities:
    def test_pure_state_in_own_basis(self):
        rho = SpinDensityMatrix(0.0, 1.0)  # pure +x eigenstate
        p_up, p_diag = born_probabilities(rho, SIGMA_X_BASIS)
        assert p_up == pytest.approx(1.0, abs=1e-14)
        assert p_diag == pytest.approx(0.0, abs=1e-14)

    def test_static_sigma_x_packet(self, packet_005):
        rho = reduce(packet_005)
        p_up, p_diag = born_probabilities(rho, SIGMA_X_BASIS)
        assert p_up == pytest.approx(1.0, abs=1e-10)

    def test_sigma_z_basis_splits_evenly(self, packet_005):
        rho = reduce(packet_005)
        p_up, p_diag = born_probabilities(rho, SIGMA_Z_BASIS)
        assert p_up == pytest.approx(0.5, abs=1e-10)
        assert p_diag == pytest.approx(0.5, abs=1e-10)

    def test_probabilities_sum_to_one(self, packet_005, boost_08):
        rho = reduce(boost_packet(packet_005, boost_08))
        p_up, p_diag = born_probabilities(rho, SIGMA_X_BASIS)
        assert p_up + p_diag == pytest.approx(1.0, abs=1e-12)

    def test_non_orthonormal_basis_rejected(self):
        rho = SpinDensityMatrix(0.0, 0.0)
        skewed = (np.array([1.0, 0.0]), np.array([0.6, 0.8]))
        with pytest.raises(ValueError, match="orthonormal"):
            born_probabilities(rho, skewed)


class TestStaticOrthogonality:
    def test_orthogonal_outcomes_allow_any_record(self):
        setup = ideal_setup(0.0, 0.5)
        for overlap in (0.0, 0.5, 1.0, 0.3 + 0.1j):
            assert static_orthogonality_residual(setup, overlap) == 0.0

    def test_identical_records_carry_no_imprint(self):
        setup = ideal_setup(0.5, 0.5)
        assert static_orthogonality_residual(setup, 1.0) == 0.0

    def test_unphysical_recorder(self):
        setup = ideal_setup(0.5, 0.0)
        assert static_orthogonality_residual(setup, 0.0) == pytest.approx(0.5, rel=1e-15)

    def test_equals_composite_norm_deficit(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            alpha = complex(rng.normal(), rng.normal())
            beta = complex(rng.normal(), rng.normal())
            c = complex(0.3 * rng.normal(), 0.3 * rng.normal())
            alpha, beta = normalized_system(alpha, beta, c)
            setup = make_setup(alpha, beta, c, 0.05, boost_params(0.0), order=8)
            overlap = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) / 2.0
            residual = static_orthogonality_residual(setup, overlap)
            # norm of psi_S minus norm of the post-measurement composite state
            norm_psi = abs(alpha) ** 2 + abs(beta) ** 2 + 2 * (np.conj(alpha) * beta * c).real
            norm_phi = abs(alpha) ** 2 + abs(beta) ** 2 + 2 * (np.conj(alpha) * beta * c * overlap).real
            deficit = norm_psi - norm_phi
            assert deficit == pytest.approx(2 * (np.conj(alpha) * beta * residual).real, abs=1e-12)


class TestApparatusStates:
    def test_static_detector_is_ideal(self):
        rho_blank, rho_up, rho_diag = apparatus_states(ideal_setup(0.3, 0.0))
        assert cross_trace(rho_up, rho_diag) <= 1e-10
        assert rho_blank.purity == pytest.approx(1.0, abs=1e-10)
        # orthogonal rank-1 projectors
        assert np.allclose(rho_up.matrix @ rho_up.matrix, rho_up.matrix, atol=1e-10)

    def test_cross_trace_two_routes_agree(self, boost_08):
        _, rho_up, rho_diag = apparatus_states(ideal_setup(0.3, 0.8))
        g, d = rho_up.gamma, rho_up.delta
        closed = (1.0 + g * g - abs(d) ** 2) / 2.0
        assert cross_trace(rho_up, rho_diag) == pytest.approx(closed, abs=1e-12)

    def test_moving_detector_degrades(self):
        # record distinguishability degrades by the coherence deficit of the
        # boosted blank packet (about 3.1e-4 at xi/m = 0.05, v = 0.8)
        _, rho_up, rho_diag = apparatus_states(ideal_setup(0.3, 0.8, order=24))
        ct = cross_trace(rho_up, rho_diag)
        deficit = 1.0 - abs(rho_up.delta)
        assert ct == pytest.approx(deficit, rel=2e-3)
        assert ct == pytest.approx(3.115e-4, rel=1e-2)

    def test_degradation_positive_for_moving_frames(self):
        for v in (0.3, 0.5, 0.8):
            _, rho_up, rho_diag = apparatus_states(ideal_setup(0.3, v))
            assert cross_trace(rho_up, rho_diag) > 0.0

    def test_purity_bookkeeping(self):
        for v in (0.0, 0.5, 0.9):
            for rho in apparatus_states(ideal_setup(0.5, v)):
                assert 0.5 - 1e-12 <= rho.purity <= 1.0 + 1e-12


class TestBoostedOrthogonality:
    def test_orthogonal_outcomes_invariant_across_frames(self):
        for v in (0.0, 0.3, 0.5, 0.8, 0.95):
            assert boosted_orthogonality_residual(ideal_setup(0.0, v)) == 0.0

    def test_static_ideal_recorder_violates_for_overlapping_kets(self):
        residual = boosted_orthogonality_residual(ideal_setup(0.3, 0.0))
        assert residual == pytest.approx(0.09, abs=1e-10)

    def test_no_imprint_devices_always_pass(self):
        for v in (0.0, 0.5, 0.9):
            setup = ideal_setup(0.3, v, record_mode="none")
            assert boosted_orthogonality_residual(setup) == 0.0
            _, rho_up, rho_diag = apparatus_states(setup)
            assert np.array_equal(rho_up.matrix, rho_diag.matrix)

    def test_nonzero_unless_records_identical(self):
        for v in (0.3, 0.8):
            setup = ideal_setup(0.7, v)
            _, rho_up, rho_diag = apparatus_states(setup)
            distinct = np.abs(rho_up.matrix - rho_diag.matrix).max() > 1e-12
            assert distinct
            assert boosted_orthogonality_residual(setup) > 0.0


class TestDetectorEfficiency:
    def test_unit_at_rest_frame(self):
        b0 = boost_params(0.0)
        rng = np.random.default_rng(21)
        for _ in range(50):
            p = momentum_on_shell(rng.uniform(-2, 2, size=3), 1.0)
            assert detector_efficiency(p, b0) == pytest.approx(1.0, abs=1e-10)

    def test_rest_momentum_value_is_lorentz_factor(self, boost_08):
        # measured: the printed efficiency carries the measure factor q0/p0 and
        # evaluates to gamma = 5/3 at the packet center for v = 0.8
        rest = momentum_on_shell((0.0, 0.0, 0.0), 1.0)
        assert detector_efficiency(rest, boost_08) == pytest.approx(5.0 / 3.0, rel=1e-12)

    def test_nonnegative_everywhere(self):
        rng = np.random.default_rng(33)
        for v in (0.3, 0.8, 0.95):
            b = boost_params(v)
            for _ in range(100):
                p = momentum_on_shell(rng.uniform(-3, 3, size=3), 1.0)
                assert detector_efficiency(p, b) >= 0.0

    def test_packet_report_static(self):
        rep = packet_efficiency(0.05, boost_params(0.0))
        assert rep.eta_packet_avg == pytest.approx(1.0, abs=1e-10)
        assert not rep.bound_violated

    def test_packet_report_flags_bound_violation(self, boost_08):
        # eta > 1 occurs near the packet center for any v != 0; the report
        # surfaces it instead of clamping
        rep = packet_efficiency(0.05, boost_08)
        assert rep.bound_violated
        assert rep.eta_max > 1.0
        assert rep.eta_min >= 0.0
        assert rep.eta_packet_avg == pytest.approx(1.666407, rel=1e-5)


class TestClickSimulator:
    def test_static_frame_is_deterministic_unity(self):
        setup = ideal_setup(0.0, 0.0)
        stats = click_simulator(setup, 50_000, seed=7)
        assert stats["static"].p_hat_up == 1.0
        assert stats["boosted"].p_hat_up == 1.0
        assert stats["static"].n_up + stats["static"].n_diag == 50_000

    def test_same_seed_reproduces_exactly(self):
        setup = ideal_setup(0.0, 0.8)
        a = click_simulator(setup, 20_000, seed=123)
        b = click_simulator(setup, 20_000, seed=123)
        assert a == b

    def test_different_seeds_differ(self):
        setup = ideal_setup(0.0, 0.8, xi=0.3)
        a = click_simulator(setup, 20_000, seed=1)
        b = click_simulator(setup, 20_000, seed=2)
        assert a["boosted"].n_up != b["boosted"].n_up

    def test_frequencies_match_born_probabilities(self, boost_08):
        xi = 0.3
        grid = gauss_hermite_grid(xi, 16)
        setup = make_setup(1.0, 0.0, 0.0, xi, boost_08, grid=grid)
        n = 200_000
        stats = click_simulator(setup, n, seed=99)
        rho = reduce(boost_packet(sigma_x_packet(xi, grid), boost_08))
        p_up, _ = born_probabilities(rho, SIGMA_X_BASIS)
        st = stats["boosted"]
        assert abs(st.p_hat_up - p_up) <= 4.0 * st.stderr_up

    def test_sample_count_validated(self):
        with pytest.raises(ValueError):
            click_simulator(ideal_setup(0.0, 0.5), 0, seed=1)
