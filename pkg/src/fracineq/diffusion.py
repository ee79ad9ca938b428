"""Space-fractional diffusion on an interval and its a-priori energy bound.

The evolution u_t + (right derivative)(left derivative) u = 0 is
discretized variationally: the stiffness matrix is K = D^T Q D with D the
discrete fractional-derivative matrix restricted to functions vanishing at
the left endpoint and Q the trapezoid quadrature diagonal.  By construction
K is symmetric positive semidefinite and the discrete energy identity
u^T K u = ||d^alpha u||^2 holds exactly, so implicit Euler dissipates the
energy I(t) = ||u||^2 unconditionally.

The decay-rate constant lambda = (2*alpha - 1) * Gamma(alpha)^2 / (b-a)^(2*alpha)
comes from the L^2 Poincare-Sobolev bound with p = 2; integrating the
resulting differential inequality gives I(t) <= I(0) exp(-2 lambda t).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, SolveError
from .grids import Grid, GridFn
from .operators import operator_matrix
from .special import gamma_fn

__all__ = [
    "DiffusionProblem",
    "EnergyTrace",
    "AprioriReport",
    "decay_rate",
    "assemble_stiffness",
    "mass_diagonal",
    "step",
    "run",
    "check_apriori",
]


@dataclass(frozen=True)
class DiffusionProblem:
    """Initial-value problem data for the fractional diffusion run."""

    grid: Grid
    alpha: float
    u0: GridFn
    T: float
    dt: float

    def __post_init__(self):
        if not 0.5 < self.alpha <= 1.0:
            raise DomainError(f"diffusion requires alpha in (1/2, 1] (got {self.alpha})")
        if self.u0.grid != self.grid:
            raise DomainError("u0 must be sampled on the problem grid")
        if self.u0.samples[0] != 0.0:
            raise DomainError("u0 must vanish at the left endpoint")
        if not self.dt > 0.0:
            raise DomainError(f"requires dt > 0 (got {self.dt})")
        if not self.T >= self.dt:
            raise DomainError(f"requires T >= dt (got T={self.T}, dt={self.dt})")


@dataclass(frozen=True)
class EnergyTrace:
    """Time series of the squared L^2 norm, with the decay-rate constant."""

    times: np.ndarray
    energy: np.ndarray
    lam: float

    def __post_init__(self):
        times = np.array(self.times, dtype=float)
        energy = np.array(self.energy, dtype=float)
        if times.shape != energy.shape:
            raise DomainError("times and energy must have equal length")
        times.setflags(write=False)
        energy.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "energy", energy)


def decay_rate(grid: Grid, alpha: float) -> float:
    """lambda = (2*alpha - 1) * Gamma(alpha)^2 / (b - a)^(2*alpha)."""
    return (2.0 * alpha - 1.0) * gamma_fn(alpha) ** 2 / (grid.b - grid.a) ** (2.0 * alpha)


def _quadrature_diagonal(grid: Grid) -> np.ndarray:
    q = np.full(grid.n + 1, grid.h)
    q[0] = q[-1] = 0.5 * grid.h
    return q


def mass_diagonal(grid: Grid) -> np.ndarray:
    """Trapezoid mass diagonal for the unknowns u_1..u_n (u_0 removed)."""
    return _quadrature_diagonal(grid)[1:]


def assemble_stiffness(grid: Grid, alpha: float) -> np.ndarray:
    """K = D^T Q D with the derivative matrix restricted to u(a) = 0.

    K is exactly symmetric and positive semidefinite; u^T K u equals the
    discrete squared L^2 norm of the order-alpha derivative of the function
    with samples (0, u_1, ..., u_n).
    """
    if not 0.5 < alpha <= 1.0:
        raise DomainError(f"diffusion requires alpha in (1/2, 1] (got {alpha})")
    d_full = operator_matrix(grid, alpha, "caputo").weights
    d_restricted = d_full[:, 1:]
    q = _quadrature_diagonal(grid)
    k = d_restricted.T @ (q[:, None] * d_restricted)
    return 0.5 * (k + k.T)


def step(u: np.ndarray, stiffness: np.ndarray, mass: np.ndarray,
         dt: float) -> np.ndarray:
    """One implicit Euler step: solve (M + dt K) u_next = M u."""
    if dt <= 0.0:
        raise DomainError(f"requires dt > 0 (got {dt})")
    system = np.diag(mass) + dt * stiffness
    try:
        factor = scipy.linalg.cho_factor(system)
        return scipy.linalg.cho_solve(factor, mass * u)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise SolveError(f"implicit Euler solve failed: {exc}") from exc


def run(problem: DiffusionProblem) -> EnergyTrace:
    """Step from 0 to T recording I(t_k) = discrete squared L^2 norm."""
    grid = problem.grid
    k = assemble_stiffness(grid, problem.alpha)
    mass = mass_diagonal(grid)
    nsteps = int(np.floor(problem.T / problem.dt + 1e-12))
    u = problem.u0.samples[1:].copy()
    times = problem.dt * np.arange(nsteps + 1)
    energy = np.empty(nsteps + 1)
    energy[0] = float(u @ (mass * u))
    try:
        factor = scipy.linalg.cho_factor(np.diag(mass) + problem.dt * k)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise SolveError(f"implicit Euler solve failed: {exc}") from exc
    for j in range(1, nsteps + 1):
        u = scipy.linalg.cho_solve(factor, mass * u)
        energy[j] = float(u @ (mass * u))
    return EnergyTrace(times, energy, decay_rate(grid, problem.alpha))


@dataclass(frozen=True)
class AprioriReport:
    """Outcome of the energy-estimate checks on one trace."""

    monotone_ok: bool
    max_monotone_violation: float  # relative per-step increase, worst case
    first_violation_index: int | None
    exp_bound_ok: bool
    max_exp_excess: float  # worst I(t_k) - bound(t_k), <= 0 when satisfied
    rel_slack: float
    tol_exp: float


def check_apriori(trace: EnergyTrace, rel_slack: float = 1e-12,
                  tol_exp: float = 0.05) -> AprioriReport:
    """Check monotone decay and the exponential bound I(0) e^(-2 lambda t).

    Monotonicity allows a per-step relative slack for rounding; the
    exponential bound carries the multiplicative tolerance (1 + tol_exp).
    """
    if trace.energy.size == 0:
        raise DomainError("empty trace")
    energy = trace.energy
    prev = energy[:-1]
    increase = energy[1:] - prev
    scale = np.maximum(np.abs(prev), 1e-300)
    rel_increase = increase / scale
    bad = np.nonzero(rel_increase > rel_slack)[0]
    monotone_ok = bad.size == 0
    bound = energy[0] * np.exp(-2.0 * trace.lam * trace.times) * (1.0 + tol_exp)
    excess = energy - bound
    return AprioriReport(
        monotone_ok=monotone_ok,
        max_monotone_violation=float(rel_increase.max()) if rel_increase.size else 0.0,
        first_violation_index=int(bad[0] + 1) if not monotone_ok else None,
        exp_bound_ok=bool(np.all(excess <= 0.0)),
        max_exp_excess=float(excess.max()),
        rel_slack=rel_slack,
        tol_exp=tol_exp,
    )
