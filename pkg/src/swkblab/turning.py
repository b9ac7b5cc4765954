"""Location of the classical turning points for the action integrals.

The defining functions (energy minus squared superpotential, or energy
minus partner potential) are scanned for sign changes on a log-spaced grid
and each bracket is polished by Brent's method.  The scan runs in doubles
for speed; the polish runs at the working precision.  The degree-six root
condition is never formed as a polynomial, which keeps large angular
parameters free of coefficient blow-up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from mpmath import mp

from . import model
from ._real import working_precision, to_working, sqrt_r
from .errors import NoTurningPoints, MultipleRoots

SCAN_POINTS = 4096


@dataclass(frozen=True)
class TurningPoints:
    """Ordered pair of positive roots with the defining-function residuals."""

    x_left: float
    x_right: float
    residual_left: float
    residual_right: float

    def __post_init__(self):
        if not 0 < self.x_left < self.x_right:
            raise ValueError(
                f"turning points must satisfy 0 < x_left < x_right, "
                f"got ({self.x_left}, {self.x_right})"
            )


def brent(f, a, b, fa, fb, xtol, eps=2.2e-16, max_iter=500):
    """Safeguarded bracketed root refinement (Brent); generic over float/mpf."""
    if fa == 0:
        return a, fa
    if fb == 0:
        return b, fb
    if (fa > 0) == (fb > 0):
        raise ValueError("root is not bracketed")
    c, fc = a, fa
    d = e = b - a
    for _ in range(max_iter):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2 * eps * abs(b) + xtol / 2
        xm = (c - b) / 2
        if abs(xm) <= tol1 or fb == 0:
            return b, fb
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2 * xm * s
                q = 1 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2 * xm * q * (q - r) - (b - a) * (r - 1))
                q = (q - 1) * (r - 1) * (s - 1)
            if p > 0:
                q = -q
            p = abs(p)
            if 2 * p < min(3 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b = b + d
        else:
            b = b + (tol1 if xm > 0 else -tol1)
        fb = f(b)
    raise RuntimeError("brent failed to converge")


def _scan_brackets(f_vec, lo, hi, points=SCAN_POINTS):
    """Sign-change brackets of a vectorized function on a log-spaced grid."""
    xs = np.exp(np.linspace(math.log(lo), math.log(hi), points))
    vals = np.asarray(f_vec(xs), dtype=float)
    flips = np.nonzero(np.diff(np.signbit(vals)))[0]
    return [(xs[i], xs[i + 1]) for i in flips]


def default_root_tol(digits: int) -> float:
    """Relative x-tolerance: 1e-14 in doubles, four digits of headroom in mpf."""
    return 1e-14 if digits == 0 else 10.0 ** (4 - digits)


def _two_positive_roots(f_vec, f_work, lo, hi, tol, digits, label):
    """Bracket-scan plus Brent polish; enforces exactly two positive roots."""
    brackets = _scan_brackets(f_vec, lo, hi)
    if not brackets:
        raise NoTurningPoints(f"no sign change of {label} on [{lo}, {hi}]")
    if len(brackets) == 1:
        raise NoTurningPoints(
            f"only one sign change of {label} found on [{lo}, {hi}]"
        )
    if len(brackets) > 2:
        raise MultipleRoots(
            f"{len(brackets)} sign changes of {label} found", brackets
        )
    eps = 2.2e-16 if digits == 0 else 10.0 ** (-digits)
    roots = []
    for a, b in brackets:
        a = to_working(a, digits)
        b = to_working(b, digits)
        fa, fb = f_work(a), f_work(b)
        if (fa > 0) == (fb > 0):
            # Working-precision sign disagrees with the double scan at a
            # grid point sitting essentially on the root; widen one cell.
            a, b = a * (1 - 1e-3), b * (1 + 1e-3)
            fa, fb = f_work(a), f_work(b)
        xtol = tol * float(max(abs(a), abs(b)))
        root, fr = brent(f_work, a, b, fa, fb, to_working(xtol, digits), eps=eps)
        roots.append((root, fr))
    roots.sort(key=lambda rf: rf[0])
    (x1, r1), (x2, r2) = roots
    return TurningPoints(x1, x2, r1, r2)


def _scan_range(ell, omega, energy):
    lo = 1e-6 * math.sqrt(2 * ell / omega)
    hi = 4 * math.sqrt(energy) / omega + 4 * math.sqrt(2 * ell / omega)
    return lo, hi


def swkb_turning_points(n: int, p: model.ModelParams, tol: float | None = None,
                        digits: int = 0) -> TurningPoints:
    """The two positive roots of E_n - W(x)^2 = 0 for n >= 1."""
    if n < 1:
        raise NoTurningPoints(
            "n = 0 has coincident turning points (E_0 = 0, W^2 >= 0)"
        )
    tol = tol if tol is not None else default_root_tol(digits)
    pf = model.ModelParams(float(p.ell), float(p.omega), float(p.alpha))
    e_f = float(model.energy_level(n, pf))

    def f_vec(x):
        return e_f - model.w(x, pf) ** 2

    with working_precision(digits):
        pw = model.ModelParams(to_working(p.ell, digits),
                               to_working(p.omega, digits),
                               to_working(p.alpha, digits))
        e_w = model.energy_level(n, pw)

        def f_work(x):
            return e_w - model.w(x, pw) ** 2

        lo, hi = _scan_range(pf.ell, pf.omega, e_f)
        return _two_positive_roots(f_vec, f_work, lo, hi, tol, digits,
                                   "E - W^2")


def conventional_turning_points(n: int, ell, omega=1.0,
                                digits: int = 0) -> TurningPoints:
    """Closed-form turning points of the undeformed (alpha = 0) problem.

    In u = omega * x^2 units the roots are u = 2(2n + ell) -/+ 4 sqrt(n(n + ell)).
    """
    if n < 1:
        raise NoTurningPoints("n = 0 has coincident turning points")
    with working_precision(digits):
        ell_w = to_working(ell, digits)
        om_w = to_working(omega, digits)
        n_w = to_working(n, digits)
        spread = 4 * sqrt_r(n_w * (n_w + ell_w))
        u_l = 2 * (2 * n_w + ell_w) - spread
        u_r = 2 * (2 * n_w + ell_w) + spread
        x_l = sqrt_r(u_l / om_w)
        x_r = sqrt_r(u_r / om_w)
        pw = model.ModelParams(ell_w, om_w, to_working(0, digits))
        e_w = model.energy_level(n, pw)
        return TurningPoints(x_l, x_r,
                             e_w - model.w0(x_l, pw) ** 2,
                             e_w - model.w0(x_r, pw) ** 2)


def jwkb_turning_points(n: int, p: model.ModelParams, tol: float | None = None,
                        digits: int = 0, energy=None) -> TurningPoints:
    """The two roots of E - V_minus(x) = 0 bounding the allowed region.

    ``energy`` overrides the bound-state value 2*n*omega when exploring
    arbitrary energies; n = 0 is legitimate here because V_minus dips below
    zero.  When the centrifugal coefficient ell*(ell-1) vanishes (ell = 1)
    V_minus stays finite at the origin and the allowed region can reach the
    domain edge; in that case x_left is the scan floor and residual_left is
    the (nonzero) value of E - V_minus there.
    """
    tol = tol if tol is not None else default_root_tol(digits)
    pf = model.ModelParams(float(p.ell), float(p.omega), float(p.alpha))
    e_f = float(energy) if energy is not None else float(model.energy_level(n, pf))

    def f_vec(x):
        return e_f - model.potential(x, pf, "minus")

    with working_precision(digits):
        pw = model.ModelParams(to_working(p.ell, digits),
                               to_working(p.omega, digits),
                               to_working(p.alpha, digits))
        e_w = to_working(e_f, digits) if energy is None else to_working(energy, digits)

        def f_work(x):
            return e_w - model.potential(x, pw, "minus")

        lo, hi = _scan_range(pf.ell, pf.omega, max(e_f, 1.0))
        brackets = _scan_brackets(f_vec, lo, hi)
        if not brackets:
            raise NoTurningPoints(
                f"energy {e_f} lies below the minimum of V_minus"
            )
        if len(brackets) > 2:
            raise MultipleRoots(
                f"{len(brackets)} sign changes of E - V_minus found", brackets
            )
        if len(brackets) == 1 and f_vec(np.asarray([lo]))[0] > 0:
            # Allowed region touches the origin; only the outer wall exists.
            eps = 2.2e-16 if digits == 0 else 10.0 ** (-digits)
            a = to_working(brackets[0][0], digits)
            b = to_working(brackets[0][1], digits)
            xtol = to_working(tol * float(abs(b)), digits)
            root, fr = brent(f_work, a, b, f_work(a), f_work(b), xtol, eps=eps)
            edge = to_working(lo, digits)
            return TurningPoints(edge, root, f_work(edge), fr)
        return _two_positive_roots(f_vec, f_work, lo, hi, tol, digits,
                                   "E - V_minus")
