"""Superpotential family of the deformed radial oscillator.

The family interpolates linearly (through the deformation parameter
``alpha``) between the plain radial-oscillator superpotential and its
rational extension, which carries an intrinsic dependence on the quantum
scale.  All functions accept floats, mpmath ``mpf`` scalars, or numpy
arrays for ``x``; they are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParameterError

#: The quantum scale is frozen to one; it is not a runtime parameter.
HBAR = 1.0


@dataclass(frozen=True)
class ModelParams:
    """One superpotential instance: angular parameter, frequency, deformation.

    ``ell >= 1`` keeps the rational-term denominators strictly positive on
    x > 0; ``alpha`` runs from 0 (undeformed) to 1 (fully extended).
    """

    ell: float = 1.0
    omega: float = 1.0
    alpha: float = 0.0

    def __post_init__(self):
        if not self.ell >= 1:
            raise ParameterError(f"ell must be >= 1, got {self.ell}")
        if not self.omega > 0:
            raise ParameterError(f"omega must be positive, got {self.omega}")
        if not (0 <= self.alpha <= 1):
            raise ParameterError(f"alpha must lie in [0, 1], got {self.alpha}")


def _check_positive(x):
    if np.ndim(x) == 0:
        if not x > 0:
            raise DomainError(f"x must be positive, got {x}")
    elif not (np.asarray(x) > 0).all():
        raise DomainError("all evaluation points must be positive")


def w0(x, p: ModelParams):
    """Base superpotential omega*x/2 - ell/x."""
    _check_positive(x)
    return p.omega * x / 2 - p.ell / x


def w_h(x, p: ModelParams):
    """Deformation term, evaluated in the combined single-fraction form.

    Algebraically identical to :func:`w_h_two_term`; the combined form
    4*omega*x / ((omega*x^2 + 2*ell - 1)(omega*x^2 + 2*ell + 1)) avoids the
    cancellation the two-term difference suffers at large ell.
    """
    _check_positive(x)
    d = p.omega * x * x + 2 * p.ell
    return 4 * p.omega * x / ((d - 1) * (d + 1))


def w_h_two_term(x, p: ModelParams):
    """Deformation term as the raw difference of two simple fractions.

    Kept for identity checks only; production code uses :func:`w_h`.
    """
    _check_positive(x)
    d = p.omega * x * x + 2 * p.ell
    return 2 * p.omega * x / (d - 1) - 2 * p.omega * x / (d + 1)


def w(x, p: ModelParams):
    """Full superpotential w0 + alpha * w_h."""
    return w0(x, p) + p.alpha * w_h(x, p)


def w_prime(x, p: ModelParams):
    """Analytic x-derivative of :func:`w` (no finite differencing)."""
    _check_positive(x)
    d = p.omega * x * x + 2 * p.ell
    dd = d * d - 1
    base = p.omega / 2 + p.ell / (x * x)
    rational = 4 * p.omega * (dd - 4 * p.omega * x * x * d) / (dd * dd)
    return base + p.alpha * rational


def _w_h_prime(x, p: ModelParams):
    d = p.omega * x * x + 2 * p.ell
    dd = d * d - 1
    return 4 * p.omega * (dd - 4 * p.omega * x * x * d) / (dd * dd)


def potential(x, p: ModelParams, which: str = "minus"):
    """Partner potential w^2 -/+ w' selected by ``which`` in {minus, plus}.

    Expanded so the 1/x^2 pieces of w^2 and w' combine analytically into a
    single centrifugal term; the naive difference cancels catastrophically
    near the origin.  The cross term 2*w0*w_h is likewise regular at zero
    once the explicit factor of x is cancelled.
    """
    _check_positive(x)
    if which not in ("minus", "plus"):
        raise ValueError(f"which must be 'minus' or 'plus', got {which!r}")
    sign = -1 if which == "minus" else 1
    om, el, al = p.omega, p.ell, p.alpha
    d = om * x * x + 2 * el
    centrifugal = el * (el + sign) / (x * x)
    base = om * om * x * x / 4 - om * (el - sign / 2) + centrifugal
    cross = 4 * om * (om * x * x - 2 * el) / ((d - 1) * (d + 1))
    wh = w_h(x, p)
    return base + al * (cross + sign * _w_h_prime(x, p)) + al * al * wh * wh


def energy_level(n: int, p: ModelParams):
    """Exact bound-state energy 2*n*omega; independent of ell and alpha."""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    return 2 * n * p.omega
