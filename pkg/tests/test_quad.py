"""Unit tests for the endpoint-regularized quadrature routines."""

import math

import pytest
from mpmath import mp

from swkblab import quad
from swkblab.errors import NegativeIntegrand, NoConvergence


def test_config_validation():
    with pytest.raises(ValueError):
        quad.QuadratureConfig(abs_tol=0.0, rel_tol=0.0)
    with pytest.raises(ValueError):
        quad.QuadratureConfig(base_rule_order=4)
    with pytest.raises(ValueError):
        quad.QuadratureConfig(precision_digits=10)


def test_for_digits_policy():
    cfg = quad.QuadratureConfig.for_digits(50)
    assert cfg.precision_digits == 50
    assert cfg.abs_tol == pytest.approx(1e-44)
    assert quad.QuadratureConfig.for_digits(0) == quad.QuadratureConfig()


def test_gauss_legendre_rule_integrates_polynomials():
    x, w = quad.gauss_legendre_rule(8, 0)
    # Exact for degree <= 15; check x^14.
    got = sum(wi * xi ** 14 for xi, wi in zip(x, w))
    assert got == pytest.approx(2.0 / 15.0, rel=1e-13)


def test_gauss_legendre_rule_extended_precision():
    x, w = quad.gauss_legendre_rule(12, 40)
    with mp.workdps(40):
        got = sum(wi * xi ** 10 for xi, wi in zip(x, w))
        assert abs(got - mp.mpf(2) / 11) < mp.mpf(10) ** -35


def test_sqrt_endpoints_semicircle():
    # integral of sqrt(x (1 - x)) over [0, 1] is pi / 8.
    value = quad.integrate_sqrt_endpoints(lambda x: x * (1 - x), 0.0, 1.0)
    assert value == pytest.approx(math.pi / 8, abs=1e-13)


def test_sqrt_endpoints_error_estimate():
    value, err = quad.integrate_sqrt_endpoints(
        lambda x: x * (1 - x), 0.0, 1.0, return_error=True)
    assert err < 1e-12
    assert value == pytest.approx(math.pi / 8, abs=1e-13)


def test_sqrt_endpoints_extended_precision():
    cfg = quad.QuadratureConfig.for_digits(50)
    with mp.workdps(50):
        value = quad.integrate_sqrt_endpoints(
            lambda x: x * (1 - x), mp.mpf(0), mp.mpf(1), cfg)
        assert abs(value - mp.pi / 8) < mp.mpf(10) ** -40


def test_sqrt_endpoints_rejects_interior_negativity():
    with pytest.raises(NegativeIntegrand):
        quad.integrate_sqrt_endpoints(lambda x: 0.25 - (x - 0.5) ** 2 * 4,
                                      0.0, 1.0)


def test_sqrt_endpoints_rejects_degenerate_interval():
    with pytest.raises(ValueError):
        quad.integrate_sqrt_endpoints(lambda x: x, 1.0, 1.0)


def test_inv_sqrt_endpoints_arcsine_weight():
    # integral of 1 / sqrt(x (1 - x)) over [0, 1] is pi.
    value = quad.integrate_inv_sqrt_endpoints(
        lambda x: 1.0 / math.sqrt(x * (1 - x)), 0.0, 1.0)
    assert value == pytest.approx(math.pi, rel=1e-13)


def test_inv_sqrt_endpoints_weighted_moment():
    # integral of x / sqrt(x (1 - x)) over [0, 1] is pi / 2.
    value = quad.integrate_inv_sqrt_endpoints(
        lambda x: x / math.sqrt(x * (1 - x)), 0.0, 1.0)
    assert value == pytest.approx(math.pi / 2, rel=1e-13)


def test_no_convergence_on_hostile_integrand():
    cfg = quad.QuadratureConfig(abs_tol=1e-13, max_refinements=1)
    with pytest.raises(NoConvergence):
        quad.integrate_sqrt_endpoints(
            lambda x: x * (1 - x) * (2 + math.sin(200 * x)), 0.0, 1.0, cfg)


def test_adaptive_oracle_semicircle():
    value = quad.integrate_adaptive_oracle(
        lambda x: mp.sqrt(x * (1 - x)), 0, 1)
    assert float(value) == pytest.approx(math.pi / 8, abs=1e-12)


def test_adaptive_oracle_agrees_with_substitution():
    f = lambda x: (x - 0.3) * (2.1 - x) * (1 + x * x)
    a = quad.integrate_sqrt_endpoints(f, 0.3, 2.1)
    b = quad.integrate_adaptive_oracle(lambda x: mp.sqrt(f(x)), 0.3, 2.1)
    assert float(b) == pytest.approx(a, abs=1e-11)
