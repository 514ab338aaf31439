import numpy as np
import pytest

from floqssh import (
    StateSet,
    classify_edge_modes,
    localization_profile,
    quasienergies,
    realspace_evolution,
    wipr,
    zero_mode_count,
)
from floqssh.invariants import MINUS, PLUS, singular_spectrum

from conftest import PERIOD, reference_drive, reference_model


def uniform_state(L):
    v = np.ones(2 * L, dtype=complex)
    return v / np.linalg.norm(v)


def delta_state(L, site):
    v = np.zeros(2 * L, dtype=complex)
    v[site] = 1.0
    return v


def stateset_from_columns(columns, energies=None):
    V = np.column_stack(columns)
    L = V.shape[0] // 2
    E = np.zeros(V.shape[1], dtype=complex) if energies is None else np.asarray(energies)
    return StateSet(E, V, L)


def regime_states(f, cells=25):
    op = realspace_evolution(reference_model(cells=cells), reference_drive(f))
    return StateSet.from_spectrum(quasienergies(op))


class TestWipr:
    def test_uniform_states(self):
        L = 10
        states = stateset_from_columns([uniform_state(L)] * (2 * L))
        assert wipr(states) == pytest.approx(1.0 / (2 * L), abs=1e-12)

    def test_delta_at_first_cell(self):
        L = 8
        states = stateset_from_columns([delta_state(L, 0)] * (2 * L))
        assert wipr(states) == pytest.approx(1.0 - L / 2.0, abs=1e-12)

    def test_rejects_unnormalized(self):
        L = 4
        states = stateset_from_columns([2.0 * uniform_state(L)] * (2 * L))
        with pytest.raises(ValueError):
            wipr(states)

    def test_global_phase_invariance(self, rng):
        states = regime_states(0.5, cells=12)
        phases = np.exp(1j * rng.uniform(0, 2 * np.pi, 24))
        rotated = StateSet(states.energies, states.vectors * phases[None, :], states.cells)
        assert wipr(rotated) == pytest.approx(wipr(states), abs=1e-12)

    def test_mirror_symmetric_weights_cancel(self):
        # cell weights symmetric about cell index L/2 (cells x and L-x
        # paired, no weight on the unpaired last cell) cancel pairwise in
        # the position weighting; cells are 1-based, the array 0-based
        L = 12
        profile = np.zeros(L)
        profile[3 - 1] = profile[(L - 3) - 1] = 0.3
        profile[5 - 1] = profile[(L - 5) - 1] = 0.2
        profile[L // 2 - 1] = 1.0 - 2 * (0.3 + 0.2)
        psi = np.zeros(2 * L, dtype=complex)
        psi[0::2] = np.sqrt(profile)
        states = stateset_from_columns([psi] * (2 * L))
        assert abs(wipr(states)) < 1e-10

    def test_skin_effect_is_strongly_negative(self):
        val = wipr(regime_states(0.5))
        assert val < -1.0


class TestLocalizationProfile:
    def test_delta_site(self):
        L = 6
        p = localization_profile(delta_state(L, 4), L)  # site a_3
        assert p[2] == pytest.approx(1.0)
        assert p.sum() == pytest.approx(1.0, abs=1e-10)

    def test_uniform(self):
        L = 9
        p = localization_profile(uniform_state(L), L)
        assert np.allclose(p, 1.0 / L, atol=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            localization_profile(np.ones(7), 4)

    def test_zero_mode_decays_exponentially_from_left(self):
        states = regime_states(0.5, cells=60)
        n = int(np.argmin(np.abs(states.energies)))
        p = localization_profile(states.vectors[:, n], 60)
        x = np.arange(1, 21)
        y = np.log(p[:20])
        slope, intercept = np.polyfit(x, y, 1)
        fit = slope * x + intercept
        ss_res = np.sum((y - fit) ** 2)
        ss_tot = np.sum((y - y.mean()) ** 2)
        assert slope < 0
        assert 1 - ss_res / ss_tot > 0.95


class TestClassifyEdgeModes:
    def test_uniform_zero_energy_states_fail_localization(self):
        L = 20
        states = stateset_from_columns([uniform_state(L)] * (2 * L))
        modes = classify_edge_modes(states, PERIOD, "zero")
        assert modes == []

    def test_regime_one_counts(self):
        states = regime_states(1.0)
        zero = classify_edge_modes(states, PERIOD, "zero", energy_tol=0.1)
        pi = classify_edge_modes(states, PERIOD, "pi", energy_tol=0.15)
        assert len(zero) == 1
        assert len(pi) == 2
        assert all(m.side == "left" for m in zero + pi)

    def test_trivial_phase_is_empty(self):
        states = regime_states(0.05)
        assert classify_edge_modes(states, PERIOD, "zero") == []
        assert classify_edge_modes(states, PERIOD, "pi") == []

    def test_bad_mode_name(self):
        states = regime_states(0.05, cells=6)
        with pytest.raises(ValueError):
            classify_edge_modes(states, PERIOD, "tau")

    @pytest.mark.parametrize(
        "f,expect_zero,expect_pi",
        [(0.05, 0, 0), (0.5, 1, 0), (1.0, 1, 2)],
    )
    def test_counts_match_singular_route(self, f, expect_zero, expect_pi):
        states = regime_states(f, cells=40)
        zero = classify_edge_modes(states, PERIOD, "zero", energy_tol=0.1)
        pi = classify_edge_modes(states, PERIOD, "pi", energy_tol=0.15)
        assert len(zero) == expect_zero
        assert len(pi) == expect_pi

        def spectra(sign):
            return [
                singular_spectrum(
                    realspace_evolution(reference_model(cells=L), reference_drive(f)), sign
                )
                for L in (20, 40, 60, 80)
            ]

        assert len(zero) == zero_mode_count(spectra(MINUS))
        assert len(pi) == zero_mode_count(spectra(PLUS))

    @pytest.mark.xfail(
        reason="between the two zone-edge transitions the protected pi mode "
        "exists only in the singular spectrum; the finite-size eigenvalue "
        "spectrum keeps a size-independent offset from the zone edge, so "
        "eigenstate counting cannot see it at any accessible size",
        strict=True,
    )
    def test_counts_match_singular_route_middle_phase(self):
        f = 0.92
        states = regime_states(f, cells=40)
        pi = classify_edge_modes(states, PERIOD, "pi", energy_tol=0.15)

        def spectra(sign):
            return [
                singular_spectrum(
                    realspace_evolution(reference_model(cells=L), reference_drive(f)), sign
                )
                for L in (20, 40, 60, 80)
            ]

        assert len(pi) == zero_mode_count(spectra(PLUS)) == 1
