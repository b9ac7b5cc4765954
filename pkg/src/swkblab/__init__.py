"""Numerical laboratory for the SWKB quantization condition of the
deformed radial oscillator.

The package evaluates the SWKB action integral for a one-parameter family
of superpotentials interpolating between the plain radial oscillator and
its rational extension, and quantifies where the quantization condition is
exact and where (and by how much) it fails.
"""

from .errors import (SwkbError, DomainError, ParameterError, NoTurningPoints,
                     MultipleRoots, NegativeIntegrand, NoConvergence,
                     PrecisionInsufficient, GridTooCoarse, MissedState)
from .model import (HBAR, ModelParams, w0, w_h, w_h_two_term, w, w_prime,
                    potential, energy_level)
from .quad import (QuadratureConfig, gauss_legendre_rule,
                   integrate_sqrt_endpoints, integrate_inv_sqrt_endpoints,
                   integrate_adaptive_oracle)
from .turning import (TurningPoints, swkb_turning_points,
                      conventional_turning_points, jwkb_turning_points)
from .shape_invariance import SIResidualReport, si_residual, si_max_residual
from .spectrum import SpectrumResult, numerov_solve
from .analysis import (SWKBResult, SlopeReport, SweepSeries,
                       recommended_digits, swkb_integral, swkb_residual,
                       slope_closed_form, slope_integral_form,
                       slope_finite_difference, gamma, slope_report,
                       convergence_sweep, alpha_sweep, residual_crossing,
                       n_sweep, jwkb_integral)

__version__ = "0.1.0"

__all__ = [
    "HBAR", "ModelParams", "w0", "w_h", "w_h_two_term", "w", "w_prime",
    "potential", "energy_level",
    "QuadratureConfig", "gauss_legendre_rule", "integrate_sqrt_endpoints",
    "integrate_inv_sqrt_endpoints", "integrate_adaptive_oracle",
    "TurningPoints", "swkb_turning_points", "conventional_turning_points",
    "jwkb_turning_points",
    "SIResidualReport", "si_residual", "si_max_residual",
    "SpectrumResult", "numerov_solve",
    "SWKBResult", "SlopeReport", "SweepSeries", "recommended_digits",
    "swkb_integral", "swkb_residual", "slope_closed_form",
    "slope_integral_form", "slope_finite_difference", "gamma",
    "slope_report", "convergence_sweep", "alpha_sweep", "residual_crossing",
    "n_sweep", "jwkb_integral",
    "SwkbError", "DomainError", "ParameterError", "NoTurningPoints",
    "MultipleRoots", "NegativeIntegrand", "NoConvergence",
    "PrecisionInsufficient", "GridTooCoarse", "MissedState",
    "__version__",
]
