"""Tests for the high-temperature closed forms and the regime logic."""

import logging
import math

import numpy as np
import pytest

from spin_ring.discord import DomainError, InequalityViolationError, RegimeError
from spin_ring.discord.analytic import (
    AppendixReport,
    HTParameters,
    InequalityViolation,
    Regime,
    classify_regime,
    correlation_crossing,
    fit_crossing_ratio,
    ht_classical,
    ht_coefficients,
    ht_conditional_entropy,
    ht_correlations,
    ht_discord,
    ht_mutual_information,
    regime_boundaries,
    verify_appendix_inequalities,
)
from spin_ring.discord.analytic._crossing import discord_minus_classical
from spin_ring.discord.analytic._regime import ARCTAN_SQRT2, QUARTER_TURN
from spin_ring.discord.qinfo import (
    CorrelationMethod,
    MeasurementDirection,
    conditional_entropy,
)
from spin_ring.discord.state import SystemConfig, evolved_sector_state

LN2 = math.log(2)


class TestHTParameters:
    def test_from_config(self, ring_dominant):
        p = HTParameters.from_config(ring_dominant)
        assert math.isclose(p.u, 0.03)
        assert math.isclose(p.v, 0.06)
        assert math.isclose(p.prefactor, 1 / (8 * LN2))

    @pytest.mark.parametrize(("u", "v"), [(0.0, 0.1), (0.1, 1.0), (-0.1, 0.1)])
    def test_range(self, u, v):
        with pytest.raises(DomainError):
            HTParameters(u=u, v=v, num_spins=3)


##############################################################################
# Regimes


class TestClassify:
    def test_ring_dominant_everywhere(self):
        cfg = SystemConfig.from_u(5, 2.0, 0.05)
        tags = {classify_regime(cfg, tau).tag for tau in np.linspace(0, np.pi / 2, 41)}
        assert tags == {Regime.IY_SZ}

    @pytest.mark.parametrize(
        ("n_total", "gamma", "tau", "expected"),
        [
            (5, 0.45, 0.5, Regime.IZ_SY),
            (5, 0.45, 0.85, Regime.UNCLASSIFIED),
            (5, 0.42, 0.85, Regime.IZ_SY),
            (5, 0.3, 1.2, Regime.IZ_SX),
            (5, 0.36, 1.2, Regime.UNCLASSIFIED),
            (4, 0.3, 1.2, Regime.UNCLASSIFIED),
            (2, 0.5, 0.5, Regime.UNCLASSIFIED),
            (2, 1.5, 0.5, Regime.IY_SZ),
            (5, 0.3, 0.0, Regime.UNCLASSIFIED),
            (5, 0.3, np.pi / 2, Regime.UNCLASSIFIED),
        ],
    )
    def test_conditions(self, n_total, gamma, tau, expected):
        tag = classify_regime(SystemConfig.from_u(n_total, gamma, 0.05), tau)
        assert tag.tag is expected
        assert tag.is_classified is (expected is not Regime.UNCLASSIFIED)

    def test_axes(self):
        assert [r.axis for r in Regime] == ["z", "y", "x", None]

    def test_quarter_turn_belongs_to_the_mid_window(self, caplog):
        cfg = SystemConfig.from_u(5, 0.4, 0.05)
        with caplog.at_level(logging.WARNING):
            tag = classify_regime(cfg, QUARTER_TURN)
        assert tag.tag is Regime.IZ_SY
        assert tag.near_boundary
        assert "boundary" in caplog.text

    @pytest.mark.parametrize("tau", [-0.1, 1.6])
    def test_outside_window(self, tau):
        with pytest.raises(DomainError, match="window"):
            classify_regime(SystemConfig.from_u(5, 0.4, 0.05), tau)

    def test_boundaries(self):
        b = regime_boundaries(5)
        assert b["gamma"]["ring_dominant"] == 1.0
        assert b["gamma"]["small_tau_y"] == 0.5
        assert math.isclose(b["gamma"]["mid_tau_y"], 0.4303, abs_tol=1e-4)
        assert math.isclose(b["gamma"]["large_tau_x"], 1 / math.sqrt(8))
        assert math.isclose(b["tau"]["arctan_sqrt2"], 0.9553, abs_tol=1e-4)


##############################################################################
# Closed forms


class TestClosedForms:
    def test_ring_dominant_examples(self):
        u = 0.03
        cfg = SystemConfig.from_u(3, 2.0, u)
        expected = [0.0, u**2 * (1 - np.cos(np.pi / 4) ** 4) / (8 * LN2), u**2 / (8 * LN2)]
        for tau, d in zip([0.0, np.pi / 4, np.pi / 2], expected, strict=True):
            value, tag = ht_discord(cfg, tau)
            assert tag.tag is Regime.IY_SZ
            assert math.isclose(value, d, rel_tol=1e-12, abs_tol=1e-20)

    def test_unclassified_needs_override(self):
        cfg = SystemConfig.from_u(5, 0.45, 0.05)
        with pytest.raises(RegimeError):
            ht_discord(cfg, 0.85)
        value, tag = ht_discord(cfg, 0.85, regime="IzSy")
        assert value > 0
        assert tag.tag is Regime.IZ_SY
        with pytest.raises(RegimeError):
            ht_classical(cfg, 0.85, regime=Regime.UNCLASSIFIED)

    def test_override_checks_window(self):
        with pytest.raises(DomainError):
            ht_discord(SystemConfig.from_u(5, 0.3, 0.05), 2.0, regime="IzSx")

    @pytest.mark.parametrize(
        ("gamma", "tau"), [(2.0, 0.7), (0.3, 0.5), (0.4, 0.85), (0.3, 1.3)]
    )
    def test_correlations_add_up(self, gamma, tau):
        cfg = SystemConfig.from_u(5, gamma, 0.05)
        report = ht_correlations(cfg, tau)
        assert report.method is CorrelationMethod.ANALYTIC_HT
        assert report.optimal_direction == MeasurementDirection.along(report.regime.axis)
        assert math.isclose(
            report.discord + report.classical,
            ht_mutual_information(cfg, tau),
            rel_tol=1e-9,
        )

    @pytest.mark.parametrize(
        ("gamma", "tau"), [(2.0, 0.7), (0.3, 0.5), (0.4, 0.85), (0.3, 1.3)]
    )
    def test_regime_axis_minimizes(self, gamma, tau):
        cfg = SystemConfig.from_u(5, gamma, 0.05)
        tag = classify_regime(cfg, tau)
        values = {
            axis: ht_conditional_entropy(cfg, tau, MeasurementDirection.along(axis))
            for axis in "xyz"
        }
        assert min(values, key=values.get) == tag.axis

    def test_conditional_entropy_residual_is_fourth_order(self):
        cfg = SystemConfig(5, 1.0, 0.08, 0.1)
        for tau in (0.4, 0.9):
            for axis in "xyz":
                n = MeasurementDirection.along(axis)
                residual = [
                    abs(
                        conditional_entropy(evolved_sector_state(c, tau), n)
                        - ht_conditional_entropy(c, tau, n)
                    )
                    for c in (cfg, cfg.with_beta_scaled(0.5))
                ]
                assert 12 < residual[0] / residual[1] < 20

    def test_coefficients_meet_at_arctan_sqrt2(self):
        """For odd N both brackets and both discord branches agree there."""
        cfg = SystemConfig.from_u(5, 0.3, 0.05)
        bx, by = ht_coefficients(cfg, ARCTAN_SQRT2)
        assert math.isclose(bx, by, rel_tol=1e-12)
        d_y, _ = ht_discord(cfg, ARCTAN_SQRT2, regime="IzSy")
        d_x, _ = ht_discord(cfg, ARCTAN_SQRT2, regime="IzSx")
        assert math.isclose(d_y, d_x, rel_tol=1e-12)


##############################################################################
# Inequalities


class TestInequalities:
    @pytest.mark.parametrize("n_total", [3, 5, 7, 9])
    def test_no_violations(self, n_total):
        report = verify_appendix_inequalities(n_total)
        assert report.passed
        assert report.check() is report
        assert report.worst_margin >= -1e-12

    def test_odd_rings_check_the_x_window(self):
        assert "x_exceeds_y" in verify_appendix_inequalities(5).margins
        assert "x_exceeds_y" not in verify_appendix_inequalities(4).margins

    def test_check_raises(self):
        report = AppendixReport(
            5,
            {"y_bracket_positive": -1.0},
            (InequalityViolation("y_bracket_positive", 0.1, 0.2, -1.0),),
        )
        assert not report.passed
        with pytest.raises(InequalityViolationError, match="y_bracket_positive"):
            report.check()

    def test_too_few_spins(self):
        with pytest.raises(DomainError):
            verify_appendix_inequalities(1)


##############################################################################
# Quantum versus classical


class TestCrossing:
    def test_fitted_ratio(self):
        gamma = fit_crossing_ratio(9)
        assert math.isclose(gamma, 0.2227, abs_tol=1e-3)
        # the fitted pair lies inside the small-time y window
        assert gamma < regime_boundaries(9)["gamma"]["small_tau_y"]
        assert math.isclose(correlation_crossing(gamma, 9), 0.521, abs_tol=1e-9)

    def test_crossing_is_resolution_independent(self):
        taus = [correlation_crossing(0.2227, 9, resolution=r) for r in (501, 2001, 8001)]
        assert max(taus) - min(taus) < 1e-6
        assert 0 < taus[0] < QUARTER_TURN

    def test_classical_dominates_before_the_crossing(self):
        tau = correlation_crossing(0.2227, 9)
        assert discord_minus_classical(0.2227, 9, Regime.IZ_SY, tau / 2) < 0
        assert discord_minus_classical(0.2227, 9, Regime.IZ_SY, (tau + QUARTER_TURN) / 2) > 0

    def test_classical_returns_at_late_times(self):
        gamma = 0.2227
        assert gamma < regime_boundaries(9)["gamma"]["large_tau_x"]
        assert discord_minus_classical(gamma, 9, Regime.IZ_SX, 1.0) > 0
        assert discord_minus_classical(gamma, 9, Regime.IZ_SX, 1.5) < 0
        tau = correlation_crossing(gamma, 9, Regime.IZ_SX, (ARCTAN_SQRT2, np.pi / 2))
        assert 1.2 < tau < 1.45

    def test_no_crossing(self):
        assert correlation_crossing(2.0, 9) is None

    def test_depends_on_gamma_only(self):
        """D - C scales as u**2 at fixed gamma."""
        tau = 0.4
        small = SystemConfig.from_u(9, 0.2, 0.02)
        large = SystemConfig.from_u(9, 0.2, 0.04)
        diff = [
            ht_discord(c, tau, regime="IzSy")[0] - ht_classical(c, tau, regime="IzSy")[0]
            for c in (small, large)
        ]
        assert math.isclose(diff[1] / diff[0], 4.0, rel_tol=1e-9)

    def test_bad_bracket(self):
        with pytest.raises(DomainError, match="bracket"):
            fit_crossing_ratio(9, bracket=(0.3, 0.5))

    def test_bad_window(self):
        with pytest.raises(DomainError):
            correlation_crossing(0.2, 9, window=(1.0, 0.5))
