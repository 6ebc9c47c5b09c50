import math

import numpy as np
import pytest

from ikwave import (IntegratorConfig, NegativeRadicand, NewtonDiverged,
                    crest_slope, extreme_profile, included_angle,
                    solve_critical)
from ikwave.extreme_wave import CriticalPoint, _residuals
from ikwave.profile_ode import denominator


def test_critical_point_digits(critical_point):
    cp = critical_point
    assert cp.delta_c == pytest.approx(0.62633493, abs=5e-9)
    assert cp.eta_c0 == pytest.approx(0.687926, abs=1e-6)
    assert cp.u_c0 == pytest.approx(-0.797196, abs=1e-6)
    assert cp.c_c == pytest.approx(1.26153, abs=1e-5)
    assert cp.v_c0 == pytest.approx(cp.c_c + cp.u_c0, abs=1e-15)
    assert cp.v_c0 > 0.0


def test_critical_point_residuals(critical_point):
    cp = critical_point
    F1, F2, *_ = _residuals(cp.delta_c, cp.u_c0)
    assert abs(F1) <= 1e-12
    assert abs(F2) <= 1e-12
    # the critical condition is exactly a vanishing crest denominator
    d0 = denominator((cp.eta_c0, cp.u_c0, 0.0), cp.c_c, cp.delta_c)
    assert abs(d0) <= 1e-10


def test_newton_is_deterministic(critical_point):
    again = solve_critical()
    assert again.delta_c == critical_point.delta_c
    assert again.u_c0 == critical_point.u_c0


def test_newton_diverged_reporting():
    with pytest.raises(NewtonDiverged) as info:
        solve_critical(tol=1e-30, max_iter=3)
    assert info.value.iterate is not None
    assert info.value.residuals is not None


def test_crest_slope_values(critical_point):
    slope_nondim, slope_dim = crest_slope(critical_point)
    assert slope_dim == pytest.approx(0.24397, abs=1e-4)
    assert slope_nondim == pytest.approx(-0.38952, abs=1e-4)
    assert slope_nondim == pytest.approx(critical_point.slope_nondim, abs=1e-14)
    assert slope_dim == pytest.approx(critical_point.slope_dim, abs=1e-14)


def test_negative_radicand_detected(critical_point):
    cp = critical_point
    broken = CriticalPoint(
        delta_c=cp.delta_c, eta_c0=cp.eta_c0, u_c0=cp.c_c * 0.1 - cp.c_c,
        c_c=cp.c_c, v_c0=0.1 * cp.c_c, slope_nondim=0.0, slope_dim=0.0,
        theta_deg=180.0,
    )
    with pytest.raises(NegativeRadicand):
        crest_slope(broken)


def test_included_angle():
    assert included_angle(0.0) == 180.0
    assert included_angle(math.tan(math.radians(30.0))) == pytest.approx(120.0, abs=1e-12)
    assert included_angle(0.24397) == pytest.approx(152.6, abs=0.05)
    with pytest.raises(ValueError):
        included_angle(-0.1)


def test_critical_angle(critical_point):
    assert critical_point.theta_deg == pytest.approx(152.6, abs=0.05)
    expect = 180.0 - 2.0 * math.degrees(math.atan(critical_point.slope_dim))
    assert critical_point.theta_deg == pytest.approx(expect, abs=1e-12)


@pytest.fixture(scope="module")
def extreme(critical_point):
    return extreme_profile(critical_point, IntegratorConfig())


def test_extreme_peak_and_corner(critical_point, extreme):
    assert extreme.eta_max == pytest.approx(0.687926, abs=1e-6)
    assert extreme.kappa0 is None
    center = len(extreme.x) // 2
    assert extreme.x[center] == 0.0
    assert extreme.eta[center] == extreme.eta_max


def test_extreme_identities_and_denominator(extreme):
    assert np.max(np.abs(extreme.I1)) <= 1e-7
    assert np.max(np.abs(extreme.I2)) <= 1e-7
    positive = extreme.x > 0.0
    assert np.all(extreme.d[positive] > 0.0)


def test_one_sided_slope_by_difference_quotient(critical_point, extreme):
    # first-order one-sided quotients at h and h/2, Richardson extrapolated
    eta0 = critical_point.eta_c0

    def quotient(h):
        return (float(extreme.interpolant(h)[0]) - eta0) / h

    q1, q2 = quotient(1e-3), quotient(5e-4)
    richardson = 2.0 * q2 - q1
    assert q2 == pytest.approx(critical_point.slope_nondim, abs=5e-3)
    assert richardson == pytest.approx(critical_point.slope_nondim, abs=1e-3)


def test_crest_velocity_relation(critical_point):
    # v_c(0) u'(0+) + eta'(0+) = 0 ties the one-sided derivatives together
    slope = critical_point.slope_nondim
    u_prime = -slope / critical_point.v_c0
    assert critical_point.v_c0 * u_prime + slope == 0.0


def test_denominator_growth_off_the_crest(critical_point, extreme):
    # one-sided derivative of d along the profile vs its closed form
    cp = critical_point
    H, v, c = 1.0 + cp.eta_c0, cp.v_c0, cp.c_c
    expected = (3.0 * v * v - 8.0 * H - 3.0 * c / v) * cp.slope_nondim

    def d_at(x):
        return denominator(extreme.interpolant(x), cp.c_c, cp.delta_c)

    q1 = d_at(1e-3) / 1e-3
    q2 = d_at(5e-4) / 5e-4
    richardson = 2.0 * q2 - q1
    assert richardson == pytest.approx(expected, rel=1e-4)
    assert expected > 0.0  # d increases away from the degenerate crest
