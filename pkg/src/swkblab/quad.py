"""Quadrature for integrands with square-root endpoint behavior.

The action-type integrals handled here either vanish like
sqrt((x - x_L)(x_R - x)) at both limits or diverge like the reciprocal of
that factor.  Both cases are regularized analytically by the substitution

    x(theta) = x_L + (x_R - x_L) * sin(theta)^2,   theta in [0, pi/2],

whose Jacobian (x_R - x_L) * 2 sin(theta) cos(theta) either supplies the
vanishing factor or cancels the divergence, leaving a smooth integrand that
a composite Gauss-Legendre rule resolves spectrally.  Panel counts double
until two successive estimates agree to tolerance; the summation order is
fixed, so results are deterministic for a given configuration.

A tanh-sinh routine from mpmath serves as the independent cross-check; it
works on the raw integrand directly and shares no code with the
substitution path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from mpmath import mp

from ._real import working_precision, to_working, sqrt_r, sin_r, cos_r, pi_r
from .errors import NegativeIntegrand, NoConvergence


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances, rule order, refinement budget, and working precision.

    ``precision_digits`` = 0 means native doubles; otherwise all arithmetic
    runs in mpmath at that many decimal digits.
    """

    abs_tol: float = 1e-13
    rel_tol: float = 0.0
    max_refinements: int = 14
    base_rule_order: int = 24
    precision_digits: int = 0

    def __post_init__(self):
        if not (self.abs_tol > 0 or self.rel_tol > 0):
            raise ValueError("need abs_tol > 0 or rel_tol > 0")
        if self.base_rule_order < 8:
            raise ValueError("base_rule_order must be >= 8")
        d = self.precision_digits
        if d != 0 and not 20 <= d <= 200:
            raise ValueError("precision_digits must be 0 or in [20, 200]")

    @classmethod
    def for_digits(cls, digits: int) -> "QuadratureConfig":
        """Default configuration for a given working precision."""
        if digits == 0:
            return cls()
        return cls(abs_tol=10.0 ** (6 - digits), precision_digits=digits)


@lru_cache(maxsize=None)
def gauss_legendre_rule(order: int, digits: int):
    """Nodes and weights on [-1, 1]; computed by Newton iteration for mpf."""
    if digits == 0:
        x, w = np.polynomial.legendre.leggauss(order)
        return tuple(x.tolist()), tuple(w.tolist())
    nodes, weights = [], []
    with mp.workdps(digits + 10):
        stop = mp.mpf(10) ** (-(digits + 8))
        for i in range(1, order + 1):
            x = mp.cos(mp.pi * (i - mp.mpf(1) / 4) / (order + mp.mpf(1) / 2))
            dp = None
            for _ in range(100):
                p0, p1 = mp.mpf(1), x
                for k in range(2, order + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = order * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < stop:
                    break
            nodes.append(+x)
            weights.append(2 / ((1 - x * x) * dp * dp))
    return tuple(nodes), tuple(weights)


def _integrate_smooth(fn, t_hi, cfg: QuadratureConfig):
    """Composite Gauss-Legendre of fn over [0, t_hi] with panel doubling.

    Returns (value, error_estimate); the estimate is the last inter-level
    difference.  Raises NoConvergence when the refinement budget runs out.
    """
    digits = cfg.precision_digits
    order = max(cfg.base_rule_order, digits)
    xi, wi = gauss_legendre_rule(order, digits)
    abs_tol = to_working(cfg.abs_tol, digits)
    rel_tol = to_working(cfg.rel_tol, digits)
    half_unit = to_working(0.5, digits)

    prev = None
    panels = 1
    for _ in range(cfg.max_refinements + 1):
        width = t_hi / panels
        contributions = []
        for j in range(panels):
            mid = (j + half_unit) * width
            half = width / 2
            for k in range(order):
                contributions.append(wi[k] * half * fn(mid + half * xi[k]))
        total = math.fsum(contributions) if digits == 0 else sum(contributions)
        if prev is not None:
            err = abs(total - prev)
            if err <= max(abs_tol, rel_tol * abs(total)):
                return total, err
        prev = total
        panels *= 2
    raise NoConvergence(
        f"no convergence after {cfg.max_refinements} panel doublings "
        f"(last estimate {prev})"
    )


def _sin_sq_map(x_l, x_r, digits):
    """Return (x(theta), jacobian(theta)) callables for the substitution."""
    span = x_r - x_l
    if not span > 0:
        raise ValueError(f"need x_L < x_R, got {x_l} >= {x_r}")

    def x_of(theta):
        s = sin_r(theta)
        return x_l + span * s * s

    def jac(theta):
        return span * 2 * sin_r(theta) * cos_r(theta)

    return x_of, jac


def integrate_sqrt_endpoints(f, x_l, x_r, cfg: QuadratureConfig | None = None,
                             return_error: bool = False):
    """Integrate sqrt(f(x)) over (x_L, x_R) where f has simple zeros at both ends.

    ``f`` itself (not its square root) is the callable; values that dip
    trivially below zero near the endpoints, as happens when the limits are
    numerical roots, are clamped.  A substantially negative value raises
    NegativeIntegrand, which usually signals wrong turning points.
    """
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    with working_precision(digits):
        x_l = to_working(x_l, digits)
        x_r = to_working(x_r, digits)
        x_of, jac = _sin_sq_map(x_l, x_r, digits)
        # Scale for the negativity guard: f at mid-interval.
        scale = abs(f((x_l + x_r) / 2))
        floor = -1e-7 * float(max(scale, 1))
        zero = to_working(0, digits)

        def transformed(theta):
            v = f(x_of(theta))
            if v < 0:
                if float(v) < floor:
                    raise NegativeIntegrand(
                        f"integrand reached {v} inside the interval"
                    )
                v = zero
            return sqrt_r(v) * jac(theta)

        value, err = _integrate_smooth(transformed, pi_r(digits) / 2, cfg)
    return (value, err) if return_error else value


def integrate_inv_sqrt_endpoints(g, x_l, x_r, cfg: QuadratureConfig | None = None,
                                 return_error: bool = False):
    """Integrate g over (x_L, x_R) where g diverges like the inverse square
    root of (x - x_L)(x_R - x) at the ends.

    ``g`` is the full integrand; the substitution's Jacobian cancels the
    divergence, and nodes never touch the endpoints.
    """
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    with working_precision(digits):
        x_l = to_working(x_l, digits)
        x_r = to_working(x_r, digits)
        x_of, jac = _sin_sq_map(x_l, x_r, digits)

        def transformed(theta):
            return g(x_of(theta)) * jac(theta)

        value, err = _integrate_smooth(transformed, pi_r(digits) / 2, cfg)
    return (value, err) if return_error else value


def integrate_adaptive_oracle(f, a, b, cfg: QuadratureConfig | None = None,
                              return_error: bool = False):
    """Independent cross-check: tanh-sinh quadrature on the raw integrand.

    Handles algebraic endpoint singularities natively and shares nothing
    with the substitution path above.  Runs at a minimum of 25 digits so the
    double-precision comparisons in the test suite are meaningful.
    """
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    dps = max(25, digits + 5)
    with mp.workdps(dps):
        value, err = mp.quad(f, [mp.mpf(a), mp.mpf(b)], error=True,
                             method="tanh-sinh", maxdegree=10)
        if err > 1e-6 * (1 + abs(value)):
            raise NoConvergence(
                f"oracle error estimate {err} too large for value {value}"
            )
    with working_precision(digits):
        value = to_working(value, digits)
        err = to_working(err, digits)
    return (value, err) if return_error else value
