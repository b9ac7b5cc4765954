"""Independent eigenvalue oracle for the minus-partner potential.

A fourth-order Numerov propagation on (0, infinity) with the regular
small-x behavior psi ~ x^ell imposed at the inner edge and a hard zero at
the outer edge.  The regular exponent is ell, not ell + 1, because the
centrifugal coefficient of the minus-partner potential is ell * (ell - 1);
the exact ground state x^ell * exp(-omega x^2 / 4) confirms it.
Eigenvalues are located by bisection on the interior
node count, which is a nondecreasing integer function of the energy for
this discretization; the k-th jump is the k-th eigenvalue.  This route has
no poles to dodge and cannot silently skip a state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import model
from .errors import GridTooCoarse, MissedState


@dataclass(frozen=True)
class SpectrumResult:
    """Converged eigenvalues with node counts and the grid that produced them."""

    eigenvalues: tuple[float, ...]
    node_counts: tuple[int, ...]
    grid: tuple[float, float, float]
    achieved_tol: float


def _count_nodes(m, y0, y1):
    """Interior sign changes of the propagated solution.

    ``m`` is the one-step transfer coefficient sequence; the recurrence is
    y[k+1] = m[k] * y[k] - y[k-1].  Rescaling guards against overflow and
    does not affect signs.
    """
    nodes = 0
    coeffs = m.tolist()
    for k in range(1, len(coeffs) - 1):
        y2 = coeffs[k] * y1 - y0
        if (y2 < 0 < y1) or (y1 < 0 < y2):
            nodes += 1
        y0, y1 = y1, y2
        a = abs(y1)
        if a > 1e280:
            y0 /= a
            y1 /= a
    return nodes


def numerov_solve(p: model.ModelParams, n_max: int,
                  grid: tuple[float, float, float] | None = None,
                  e_tol: float = 1e-8) -> SpectrumResult:
    """Lowest n_max + 1 eigenvalues of the minus-partner Schroedinger problem.

    ``grid`` is (x_min, x_max, step); defaults cover the classically allowed
    region of the highest requested state with ten units of margin.  The
    inner edge is raised automatically to where the Numerov step parameter
    h^2 V / 12 is small, since the recurrence produces spurious oscillations
    (and bogus node counts) where it is of order one; the wavefunction is
    x^ell-small there, so nothing physical is lost.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    omega = float(p.omega)
    ell = float(p.ell)
    if grid is None:
        e_top = 2 * (n_max + 1) * omega
        x_max = 2.0 * np.sqrt(e_top / omega) / np.sqrt(omega) + 10.0
        grid = (1e-4, x_max, 1e-3)
    x_min, x_max, step = (float(v) for v in grid)
    if step > 1e-2:
        raise GridTooCoarse(f"step {step} cannot support tolerance {e_tol}")

    xs = np.arange(x_min, x_max, step)
    v = np.asarray(model.potential(xs, p, "minus"), dtype=float)

    # Raise the inner edge until the step parameter is harmless.
    t0 = step * step * v / 12.0
    usable = np.nonzero(t0 < 0.05)[0]
    if usable.size < 100:
        raise GridTooCoarse("fewer than 100 usable grid points")
    start = int(usable[0])
    xs = xs[start:]
    v = v[start:]

    def nodes_at(energy: float) -> int:
        t = step * step * (v - energy) / 12.0
        m = (2.0 + 10.0 * t) / (1.0 - t)
        psi0 = xs[0] ** ell
        psi1 = xs[1] ** ell
        return _count_nodes(m, (1.0 - t[0]) * psi0, (1.0 - t[1]) * psi1)

    e_lo = float(min(v.min(), 0.0)) - 0.5
    e_hi = 2 * omega * (n_max + 1) + omega
    for _ in range(60):
        if nodes_at(e_hi) >= n_max + 1:
            break
        e_hi *= 1.5
    else:
        raise MissedState(f"could not bracket {n_max + 1} states below {e_hi}")

    eigenvalues = []
    for k in range(n_max + 1):
        a, b = e_lo, e_hi
        while b - a > e_tol:
            mid = 0.5 * (a + b)
            if nodes_at(mid) >= k + 1:
                b = mid
            else:
                a = mid
        e_k = 0.5 * (a + b)
        if nodes_at(e_k - 2 * e_tol) != k or nodes_at(e_k + 2 * e_tol) != k + 1:
            raise MissedState(
                f"node count did not step cleanly through state {k} at {e_k}"
            )
        eigenvalues.append(e_k)

    return SpectrumResult(
        eigenvalues=tuple(eigenvalues),
        node_counts=tuple(range(n_max + 1)),
        grid=(float(xs[0]), x_max, step),
        achieved_tol=e_tol,
    )
