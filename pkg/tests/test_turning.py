"""Unit tests for turning-point location."""

import math

import pytest
from mpmath import mp

from swkblab import model, turning
from swkblab.errors import NoTurningPoints


def test_brent_simple_root():
    f = lambda x: x * x - 2.0
    root, fr = turning.brent(f, 1.0, 2.0, f(1.0), f(2.0), 1e-14)
    assert root == pytest.approx(math.sqrt(2), rel=1e-12)
    assert abs(fr) < 1e-12


def test_brent_requires_bracket():
    f = lambda x: x * x + 1.0
    with pytest.raises(ValueError):
        turning.brent(f, 0.0, 1.0, f(0.0), f(1.0), 1e-14)


def test_conventional_closed_form_satisfies_defining_equation():
    for n in (1, 3, 7):
        for ell in (1.0, 2.0, 10.0):
            tp = turning.conventional_turning_points(n, ell)
            assert abs(tp.residual_left) < 1e-10
            assert abs(tp.residual_right) < 1e-10


def test_swkb_matches_conventional_at_zero_deformation():
    p = model.ModelParams(ell=2.0, alpha=0.0)
    got = turning.swkb_turning_points(3, p)
    want = turning.conventional_turning_points(3, 2.0)
    assert got.x_left == pytest.approx(want.x_left, rel=1e-12)
    assert got.x_right == pytest.approx(want.x_right, rel=1e-12)


def test_swkb_deformation_shifts_roots():
    p0 = model.ModelParams(ell=1.0, alpha=0.0)
    p1 = model.ModelParams(ell=1.0, alpha=1.0)
    a = turning.swkb_turning_points(1, p0)
    b = turning.swkb_turning_points(1, p1)
    assert a.x_left != pytest.approx(b.x_left, rel=1e-6)
    assert b.x_left < b.x_right


def test_swkb_rejects_n_zero():
    with pytest.raises(NoTurningPoints):
        turning.swkb_turning_points(0, model.ModelParams())


def test_turning_points_ordering_enforced():
    with pytest.raises(ValueError):
        turning.TurningPoints(2.0, 1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        turning.TurningPoints(-1.0, 1.0, 0.0, 0.0)


def test_extended_precision_roots_are_mpf():
    p = model.ModelParams(ell=100.0, alpha=1.0)
    tp = turning.swkb_turning_points(2, p, digits=50)
    assert isinstance(tp.x_left, mp.mpf)
    with mp.workdps(50):
        pw = model.ModelParams(mp.mpf(100), mp.mpf(1), mp.mpf(1))
        res = model.energy_level(2, pw) - model.w(tp.x_left, pw) ** 2
        assert abs(res) < mp.mpf(10) ** -35


def test_jwkb_regular_pair_for_ell_two():
    p = model.ModelParams(ell=2.0, alpha=0.0)
    tp = turning.jwkb_turning_points(1, p)
    assert 0 < tp.x_left < tp.x_right
    assert abs(tp.residual_left) < 1e-10
    assert abs(tp.residual_right) < 1e-10


def test_jwkb_origin_wall_for_ell_one():
    # The minus-partner centrifugal coefficient vanishes at ell = 1, the
    # allowed region reaches the domain edge, and only the outer root is a
    # genuine turning point; residual_left records the nonzero gap there.
    p = model.ModelParams(ell=1.0, alpha=0.0)
    tp = turning.jwkb_turning_points(0, p)
    assert tp.x_left < 1e-4
    assert float(tp.residual_left) > 0.1
    assert abs(tp.residual_right) < 1e-10


def test_jwkb_energy_override_and_below_minimum():
    p = model.ModelParams(ell=2.0, alpha=0.0)
    tp = turning.jwkb_turning_points(0, p, energy=1.0)
    assert tp.x_left < tp.x_right
    with pytest.raises(NoTurningPoints):
        turning.jwkb_turning_points(0, p, energy=-100.0)


def test_default_root_tol_policy():
    assert turning.default_root_tol(0) == 1e-14
    assert turning.default_root_tol(50) == 1e-46
