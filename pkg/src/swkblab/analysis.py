"""Action integrals, residuals, slope estimators, and parameter sweeps.

Everything is phrased at omega = 1 internally (the action integral is
invariant under frequency rescaling; an optional ``omega`` argument exists
so the test suite can verify exactly that).  Precision escalates with the
angular parameter and with the finite-difference exponent, because the
difference quotient compares an integral against its exact limit and the
increment shrinks far below double precision for large parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from mpmath import mp

from . import model
from ._real import working_precision, to_working, sqrt_r, sin_r, pi_r
from .errors import PrecisionInsufficient
from .quad import (QuadratureConfig, integrate_sqrt_endpoints,
                   _integrate_smooth)
from .turning import (TurningPoints, swkb_turning_points,
                      conventional_turning_points, jwkb_turning_points)


@dataclass(frozen=True)
class SWKBResult:
    """One evaluated action integral with its residual from n*pi."""

    n: int
    ell: float
    alpha: float
    integral: float
    residual: float
    turning: TurningPoints | None
    quad_error_estimate: float


@dataclass(frozen=True)
class SlopeReport:
    """The three slope estimators at zero deformation for one (n, ell)."""

    n: int
    ell: float
    closed_form: float
    integral_form: float
    finite_difference: float
    delta_alpha: float
    gamma: float


@dataclass(frozen=True)
class SweepSeries:
    """Ordered (control, value, residual) records from a one-parameter sweep."""

    control_name: str
    records: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        controls = [r[0] for r in self.records]
        if any(b <= a for a, b in zip(controls, controls[1:])):
            raise ValueError("sweep controls must be strictly increasing")

    def controls(self):
        return [r[0] for r in self.records]

    def values(self):
        return [r[1] for r in self.records]

    def residuals(self):
        return [r[2] for r in self.records]


def recommended_digits(ell, lam=None) -> int:
    """Working-precision policy: doubles for small parameters, 50 digits for
    large ell or fine difference steps, 100 digits for ell around 1000."""
    if ell >= 1000:
        return 100
    if ell > 10 or (lam is not None and lam >= 4):
        return 50
    return 0


def _escalate(cfg: QuadratureConfig, digits: int) -> QuadratureConfig:
    if digits <= cfg.precision_digits:
        return cfg
    return replace(cfg, precision_digits=digits, abs_tol=10.0 ** (6 - digits))


def swkb_integral(n: int, ell, alpha, cfg: QuadratureConfig | None = None,
                  omega=1.0) -> SWKBResult:
    """I(n, ell, alpha): the action integral between the W^2 turning points.

    Defined as zero for n = 0, where the turning points coincide.
    """
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    with working_precision(digits):
        zero = to_working(0, digits)
        if n == 0:
            return SWKBResult(0, ell, alpha, zero, zero, None, zero)
        p = model.ModelParams(to_working(ell, digits),
                              to_working(omega, digits),
                              to_working(alpha, digits))
        energy = model.energy_level(n, p)
        tp = swkb_turning_points(n, p, digits=digits)

        def f(x):
            return energy - model.w(x, p) ** 2

        value, err = integrate_sqrt_endpoints(f, tp.x_left, tp.x_right, cfg,
                                              return_error=True)
        residual = 1 - value / (n * pi_r(digits))
        return SWKBResult(n, ell, alpha, value, residual, tp, err)


def swkb_residual(n: int, ell, alpha, cfg: QuadratureConfig | None = None):
    """R = 1 - I/(n*pi); zero iff the quantization condition is exact."""
    if n < 1:
        raise ValueError("the residual is defined for n >= 1")
    return swkb_integral(n, ell, alpha, cfg).residual


def slope_closed_form(n: int, ell, digits: int = 0):
    """Analytic derivative of I with respect to alpha at alpha = 0.

    Evaluated in mpmath regardless of mode: the two bracket terms cancel to
    a tiny difference at large ell and doubles would lose most digits.
    """
    work = max(30, digits, int(2 * math.log10(max(float(ell), 10))) + 30)
    with mp.workdps(work):
        nn = mp.mpf(n)
        el = mp.mpf(ell)
        spread = 4 * mp.sqrt(nn * (nn + el))
        u_l = 2 * (2 * nn + el) - spread
        u_r = 2 * (2 * nn + el) + spread
        value = mp.pi * (
            (4 * el - 1) / mp.sqrt((u_l + 2 * el - 1) * (u_r + 2 * el - 1))
            - (4 * el + 1) / mp.sqrt((u_l + 2 * el + 1) * (u_r + 2 * el + 1))
        )
        value = +value
    return value if digits else float(value)


def slope_integral_form(n: int, ell, cfg: QuadratureConfig | None = None):
    """The same derivative as a quadrature over the undeformed turning points.

    The integrand carries an inverse-square-root endpoint divergence, and
    evaluating E - w0^2 near its own roots cancels catastrophically.  Both
    problems disappear at once: in u = x^2 units E - w0^2 factors as
    (u_r - u)(u - u_l)/(4u) with closed-form roots, and under the
    x = x_l + span * sin(theta)^2 substitution the singular factors combine
    with the Jacobian into the smooth weight 4x / sqrt((x + x_l)(x_r + x)).
    The leading minus sign of the derivative formula is applied here.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    with working_precision(digits):
        p = model.ModelParams(to_working(ell, digits), to_working(1, digits),
                              to_working(0, digits))
        tp = conventional_turning_points(n, ell, 1.0, digits=digits)
        x_l, x_r = tp.x_left, tp.x_right
        span = x_r - x_l

        def fn(theta):
            s = sin_r(theta)
            x = x_l + span * s * s
            weight = 4 * x / sqrt_r((x + x_l) * (x_r + x))
            return model.w0(x, p) * model.w_h(x, p) * weight

        value, _ = _integrate_smooth(fn, pi_r(digits) / 2, cfg)
    return -value


def slope_finite_difference(n: int, ell, delta_alpha=1e-5,
                            cfg: QuadratureConfig | None = None):
    """One-sided difference quotient (I(da) - n*pi) / da.

    The base value is the analytic n*pi, not a computed integral, so the
    quotient probes only the alpha-dependence.  Raises
    PrecisionInsufficient when the quadrature error estimate exceeds one
    percent of the expected increment.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 < delta_alpha <= 0.1:
        raise ValueError(f"delta_alpha must lie in (0, 0.1], got {delta_alpha}")
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    with working_precision(digits):
        da = to_working(delta_alpha, digits)
        result = swkb_integral(n, ell, da, cfg)
        expected = slope_closed_form(n, ell, digits=digits)
        if float(result.quad_error_estimate) > 0.01 * abs(float(expected)) * float(da):
            raise PrecisionInsufficient(
                f"quadrature error {result.quad_error_estimate} swamps the "
                f"expected increment {expected * da}; raise precision_digits"
            )
        return (result.integral - n * pi_r(digits)) / da


def gamma(n: int, ell, delta_alpha=1e-5, cfg: QuadratureConfig | None = None):
    """Fractional slope defect (closed form minus difference quotient) / closed form."""
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    fd = slope_finite_difference(n, ell, delta_alpha, cfg)
    with mp.workdps(max(30, digits)):
        cf = slope_closed_form(n, ell, digits=max(30, digits))
        value = (cf - mp.mpf(fd)) / cf
    return value if digits else float(value)


def slope_report(n: int, ell, delta_alpha=1e-5,
                 cfg: QuadratureConfig | None = None) -> SlopeReport:
    """All three estimators side by side for one (n, ell)."""
    cfg = cfg or QuadratureConfig()
    cf = slope_closed_form(n, ell, digits=cfg.precision_digits)
    intg = slope_integral_form(n, ell, cfg)
    fd = slope_finite_difference(n, ell, delta_alpha, cfg)
    g = float((mp.mpf(cf) - mp.mpf(fd)) / mp.mpf(cf))
    return SlopeReport(n, float(ell), float(cf), float(intg), float(fd),
                       float(delta_alpha), g)


def convergence_sweep(n: int, ell, lambdas,
                      cfg: QuadratureConfig | None = None):
    """Slope defect versus difference-step exponent, with a line fit.

    For each exponent the step is 10**(-lambda); the series records
    (lambda, log10(defect), defect) and the return value pairs it with the
    least-squares slope, which should sit at -1.
    """
    cfg = cfg or QuadratureConfig()
    records = []
    for lam in lambdas:
        lam = float(lam)
        if not 1 <= lam <= 6:
            raise ValueError(f"lambda must lie in [1, 6], got {lam}")
        digits = max(cfg.precision_digits, recommended_digits(ell, lam))
        cfg_l = _escalate(cfg, digits)
        if digits:
            with mp.workdps(digits):
                da = mp.mpf(10) ** (-mp.mpf(lam))
                g = float(gamma(n, ell, da, cfg_l))
        else:
            g = float(gamma(n, ell, 10.0 ** (-lam), cfg_l))
        records.append((lam, math.log10(g), g))
    series = SweepSeries("lambda", tuple(records))
    slope = float(np.polyfit(series.controls(), series.values(), 1)[0])
    return series, slope


def alpha_sweep(n: int, ell, alphas,
                cfg: QuadratureConfig | None = None) -> SweepSeries:
    """Residual R as the deformation runs over ``alphas`` (increasing)."""
    cfg = cfg or QuadratureConfig()
    records = []
    for a in alphas:
        res = swkb_integral(n, ell, a, cfg)
        records.append((float(a), float(res.integral), float(res.residual)))
    return SweepSeries("alpha", tuple(records))


def residual_crossing(n: int, ell, cfg: QuadratureConfig | None = None,
                      lo=0.05, hi=1.0, step=0.05, alpha_tol=1e-6):
    """Locate the sign change of R(alpha) in (0, 1).

    Returns (crossing_alpha or None, number_of_sign_changes) where the
    count covers the scan grid away from the trivial zero at alpha = 0.
    """
    cfg = cfg or QuadratureConfig()
    grid = np.arange(lo, hi + step / 2, step)
    values = [float(swkb_residual(n, ell, float(a), cfg)) for a in grid]
    changes = [i for i in range(len(values) - 1)
               if (values[i] < 0 <= values[i + 1]) or (values[i + 1] < 0 <= values[i])]
    if not changes:
        return None, 0
    a, b = float(grid[changes[0]]), float(grid[changes[0] + 1])
    fa = values[changes[0]]
    while b - a > alpha_tol:
        mid = 0.5 * (a + b)
        fm = float(swkb_residual(n, ell, mid, cfg))
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b), len(changes)


def n_sweep(ell, n_values, alpha=1.0,
            cfg: QuadratureConfig | None = None) -> SweepSeries:
    """Residual R versus quantum number at fixed deformation (default 1)."""
    cfg = _escalate(cfg or QuadratureConfig(), recommended_digits(ell))
    records = []
    for n in n_values:
        res = swkb_integral(int(n), ell, alpha, cfg)
        records.append((float(n), float(res.integral), float(res.residual)))
    return SweepSeries("n", tuple(records))


def jwkb_integral(n: int, ell, alpha, cfg: QuadratureConfig | None = None):
    """Action integral of sqrt(E - V_minus) over its own turning points.

    Reported for comparison against (n + 1/2) * pi; no Langer-type
    correction is applied.
    """
    cfg = cfg or QuadratureConfig()
    digits = cfg.precision_digits
    with working_precision(digits):
        p = model.ModelParams(to_working(ell, digits), to_working(1, digits),
                              to_working(alpha, digits))
        energy = model.energy_level(n, p)
        tp = jwkb_turning_points(n, p, digits=digits)

        def f(x):
            return energy - model.potential(x, p, "minus")

        x_left = tp.x_left
        if abs(float(tp.residual_left)) > 1e-6 * (1 + float(energy)):
            # Allowed region touches the origin (no inner turning point);
            # integrate from zero, where the integrand stays finite.
            x_left = to_working(0, digits)
        return integrate_sqrt_endpoints(f, x_left, tp.x_right, cfg)
