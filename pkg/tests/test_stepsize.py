"""Stepsize schedules."""

import math

import pytest

from acfgm.errors import ConfigError, InvalidInputError
from acfgm.solver.policy import BETA_MAX, Adaptive, Hoelder, SolverConfig
from acfgm.solver.stepsize import second_stepsize, stepsize_adaptive, stepsize_simple


def test_beta_max_value():
    assert BETA_MAX == pytest.approx(1.0 - math.sqrt(6.0) / 3.0)
    assert BETA_MAX == pytest.approx(0.18350341907227397)


def test_second_stepsize_example():
    eta, tau = stepsize_simple(2, 0.4, 1.0, BETA_MAX)
    assert eta == 0.25
    assert tau == 1.0
    assert (1.0 - BETA_MAX) * 0.4 == pytest.approx(0.3266, abs=1e-4)


def test_third_stepsize_with_zero_curvature_keeps_eta():
    eta, tau = stepsize_simple(3, 0.25, 0.0, BETA_MAX)
    assert eta == 0.25
    assert tau == 1.5


def test_fourth_stepsize_example():
    eta, tau = stepsize_simple(4, 0.25, 1.0, BETA_MAX)
    assert eta == pytest.approx(1.0 / 3.0)
    assert tau == 2.0


def test_second_stepsize_zero_curvature():
    assert second_stepsize(0.4, 0.0, BETA_MAX) == pytest.approx((1.0 - BETA_MAX) * 0.4)


def test_adaptive_example():
    eta, tau = stepsize_adaptive(3, 0.0, 0.25, 1.0, 0.0, 1.0, BETA_MAX)
    assert eta == 0.25
    assert tau == pytest.approx(1.5)


def test_adaptive_second_step():
    assert stepsize_adaptive(2, 0.3, 0.4, 0.0, 0.0, 1.0, BETA_MAX) == (0.25, 1.0)


def test_adaptive_zero_curvature_increments_by_half_alpha():
    eta, tau = stepsize_adaptive(5, 0.4, 0.3, 2.0, 1.5, 0.0, BETA_MAX)
    assert eta == pytest.approx(min(4.0 / 3.0 * 0.3, 2.5 / 2.0 * 0.3))
    assert tau == pytest.approx(2.2)


def test_adaptive_alpha_one_reproduces_simple():
    eta_s, eta_a = 0.25, 0.25
    tau_pp, tau_p = 0.0, 1.0
    for t in range(3, 40):
        L = 1.0 + 0.5 * math.sin(t)
        eta_s, tau_s = stepsize_simple(t, eta_s, L, BETA_MAX)
        eta_a, tau_a = stepsize_adaptive(t, 1.0, eta_a, tau_p, tau_pp, L, BETA_MAX)
        assert eta_a == pytest.approx(eta_s, rel=1e-12)
        assert tau_a == pytest.approx(tau_s, rel=1e-12)
        tau_pp, tau_p = tau_p, tau_a


def test_schedules_reject_bad_arguments():
    with pytest.raises(InvalidInputError):
        stepsize_simple(1, 0.4, 1.0, BETA_MAX)
    with pytest.raises(ConfigError):
        stepsize_simple(2, 0.4, 1.0, 0.5)
    with pytest.raises(ConfigError):
        stepsize_adaptive(3, 1.5, 0.25, 1.0, 0.0, 1.0, BETA_MAX)


def test_config_validation():
    with pytest.raises(ConfigError):
        SolverConfig(beta=0.5)
    with pytest.raises(ConfigError):
        SolverConfig(beta=0.0)
    assert SolverConfig(beta=0.1835034190722739).beta > 0
    with pytest.raises(ConfigError):
        Adaptive(alpha=-0.1)
    with pytest.raises(ConfigError):
        Hoelder(epsilon=0.0)
    with pytest.raises(ConfigError):
        Hoelder(epsilon=1e-3, alpha=2.0)
