"""Fractional operators on uniform grids.

All left-sided operators are discretized by product integration: the data is
replaced by its piecewise-linear interpolant and the weakly singular kernel
is integrated exactly on each cell (closed-form moments).  This yields the
classical product-trapezoid rule for the fractional integral

    (I^a u)(t_n) ~= h^a / Gamma(a+2) * sum_j w_{n,j} u_j,

and the L1 scheme for the Caputo derivative of order 0 < a < 1,

    (d^a u)(t_n) ~= h^-a / Gamma(2-a) * sum_j (u_{j+1} - u_j)
                     ((n-j)^(1-a) - (n-j-1)^(1-a)).

Order a = 1 routes to classical finite differences (central in the
interior, second-order one-sided at the endpoints), honouring I^0 u = u and
D^1 u = u'.

Derivative outputs at the left endpoint are 0 for a < 1: the scheme's first
cell gives values ~ (t-a)^(1-a) which vanish as t -> a.

Hadamard operators are evaluated through the exact substitution
sigma = log(t/a), which turns the logarithmic kernel into the standard
power kernel on a companion grid uniform in sigma.  Their outputs live on
that companion grid; use :func:`from_log_grid` to resample back when nodal
values on the original grid are wanted.

Operator matrices are immutable and cached for moderate grid sizes, so
batch evaluations over function corpora reuse the assembled weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import toeplitz

from .errors import DomainError
from .grids import Grid, GridFn
from .special import gamma_fn

__all__ = [
    "OperatorMatrix",
    "OPERATOR_KINDS",
    "operator_matrix",
    "rl_integral",
    "rl_derivative",
    "caputo_derivative",
    "right_rl_derivative",
    "sequential_caputo",
    "hadamard_integral",
    "hadamard_derivative",
    "hadamard_integral_direct",
    "log_companion_grid",
    "to_log_grid",
    "from_log_grid",
    "reflect",
]

OPERATOR_KINDS = (
    "rl-integral",
    "rl-derivative",
    "caputo",
    "right-rl-derivative",
    "hadamard-integral",
    "hadamard-derivative",
)

#: matrices up to this many subintervals are kept in an LRU cache
_CACHE_MAX_N = 2048


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense quadrature-weight matrix realizing a fractional operator.

    Left-sided kinds with order < 1 are lower triangular (including the
    diagonal); the right-sided kind is upper triangular.  For Hadamard kinds
    ``grid`` is the companion grid uniform in log(t/a), not the t-grid the
    operand was sampled on.
    """

    grid: Grid
    order: float
    kind: str
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def apply(self, samples: np.ndarray) -> np.ndarray:
        return self.weights @ samples


def _check_integral_order(alpha: float) -> float:
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError(f"fractional integral requires alpha > 0 (got {alpha})")
    return alpha


def _check_derivative_order(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise DomainError(
            f"fractional derivative requires alpha in (0, 1] (got {alpha})"
        )
    return alpha


def _rl_integral_weights(n: int, alpha: float, h: float) -> np.ndarray:
    # product trapezoid: exact moments of (t-s)^(alpha-1) against hat functions
    k = np.arange(n + 2, dtype=float)
    kp = k ** (alpha + 1.0)
    band = np.zeros(n + 1)
    band[0] = 1.0
    band[1:] = kp[2:n + 2] - 2.0 * kp[1:n + 1] + kp[0:n]
    w = toeplitz(band, np.zeros(n + 1))
    i = np.arange(n + 1, dtype=float)
    with np.errstate(invalid="ignore"):
        col0 = (i - 1.0) ** (alpha + 1.0) - i**alpha * (i - alpha - 1.0)
    col0[0] = 0.0
    w[:, 0] = col0
    w[0, :] = 0.0
    return (h**alpha / gamma_fn(alpha + 2.0)) * w


def _l1_caputo_weights(n: int, alpha: float, h: float) -> np.ndarray:
    # L1 scheme: per-cell difference quotients against exact kernel moments
    k = np.arange(n + 1, dtype=float)
    beta = k ** (1.0 - alpha) - np.maximum(k - 1.0, 0.0) ** (1.0 - alpha)
    band = np.zeros(n + 1)
    band[0] = 1.0
    if n >= 2:
        band[1:n] = beta[2:n + 1] - beta[1:n]
    w = toeplitz(band, np.zeros(n + 1))
    w[:, 0] = -beta
    w[0, :] = 0.0
    return (h ** (-alpha) / gamma_fn(2.0 - alpha)) * w


def _fd1_weights(n: int, h: float) -> np.ndarray:
    # classical first derivative: central interior, one-sided second order ends
    w = np.zeros((n + 1, n + 1))
    w[0, 0], w[0, 1], w[0, 2] = -1.5, 2.0, -0.5
    rows = np.arange(1, n)
    w[rows, rows - 1] = -0.5
    w[rows, rows + 1] = 0.5
    w[n, n - 2], w[n, n - 1], w[n, n] = 0.5, -2.0, 1.5
    return w / h


def _rl_derivative_singular_profile(grid: Grid, alpha: float) -> np.ndarray:
    """Exact fractional derivative of the constant 1: (t-a)^(-alpha)/Gamma(1-alpha).

    The value at t = a is set to 0 by the left-endpoint convention; at
    alpha = 1 the profile vanishes identically (1/Gamma(0) = 0).
    """
    if alpha == 1.0:
        return np.zeros(grid.n + 1)
    s = np.zeros(grid.n + 1)
    s[1:] = (grid.nodes[1:] - grid.a) ** (-alpha) / gamma_fn(1.0 - alpha)
    return s


def _build_matrix(grid: Grid, alpha: float, kind: str) -> OperatorMatrix:
    n, h = grid.n, grid.h
    if kind == "rl-integral":
        w = _rl_integral_weights(n, _check_integral_order(alpha), h)
    elif kind == "caputo":
        _check_derivative_order(alpha)
        w = _fd1_weights(n, h) if alpha == 1.0 else _l1_caputo_weights(n, alpha, h)
    elif kind == "rl-derivative":
        _check_derivative_order(alpha)
        w = _build_matrix(grid, alpha, "caputo").weights.copy()
        profile = _rl_derivative_singular_profile(grid, alpha)
        w[:, 0] += profile
    elif kind == "right-rl-derivative":
        left = _build_matrix(grid, alpha, "rl-derivative").weights
        w = left[::-1, ::-1].copy()
    elif kind == "hadamard-integral":
        tau = log_companion_grid(grid)
        return OperatorMatrix(tau, alpha, kind,
                              _rl_integral_weights(tau.n, _check_integral_order(alpha), tau.h))
    elif kind == "hadamard-derivative":
        if not 0.0 < float(alpha) < 1.0:
            raise DomainError(
                f"hadamard derivative requires alpha in (0, 1) (got {alpha})"
            )
        tau = log_companion_grid(grid)
        return OperatorMatrix(tau, alpha, kind,
                              _l1_caputo_weights(tau.n, alpha, tau.h))
    else:
        raise DomainError(f"unknown operator kind {kind!r}")
    return OperatorMatrix(grid, alpha, kind, w)


@lru_cache(maxsize=32)
def _cached_matrix(grid: Grid, alpha: float, kind: str) -> OperatorMatrix:
    return _build_matrix(grid, alpha, kind)


def operator_matrix(grid: Grid, alpha: float, kind: str) -> OperatorMatrix:
    """Quadrature-weight matrix for one operator on one grid (cached when small)."""
    alpha = float(alpha)
    if grid.n <= _CACHE_MAX_N:
        return _cached_matrix(grid, alpha, kind)
    return _build_matrix(grid, alpha, kind)


def rl_integral(u: GridFn, alpha: float) -> GridFn:
    """Left fractional integral of order alpha > 0 at every node.

    Node 0 is the integral over an empty interval and is exactly 0.  At
    alpha = 1 the rule reduces to composite trapezoid, which is exact for
    the piecewise-linear data model.
    """
    m = operator_matrix(u.grid, _check_integral_order(alpha), "rl-integral")
    return GridFn(u.grid, m.apply(u.samples), name=u.name)


def caputo_derivative(u: GridFn, alpha: float) -> GridFn:
    """Caputo fractional derivative of order alpha in (0, 1] at every node."""
    m = operator_matrix(u.grid, _check_derivative_order(alpha), "caputo")
    return GridFn(u.grid, m.apply(u.samples), name=u.name)


def rl_derivative(u: GridFn, alpha: float) -> GridFn:
    """Riemann-Liouville derivative via the Caputo scheme plus boundary shift.

    For data vanishing at the left endpoint the two derivatives coincide and
    the returned samples are bit-identical with :func:`caputo_derivative`.
    Otherwise the exact singular contribution of the boundary value,
    u(a) (t-a)^(-alpha) / Gamma(1-alpha), is added analytically (its nodal
    value at t = a is set to 0 by the endpoint convention; the true limit
    diverges for u(a) != 0).
    """
    alpha = _check_derivative_order(alpha)
    if u.samples[0] == 0.0:
        return caputo_derivative(u, alpha)
    m = operator_matrix(u.grid, alpha, "caputo")
    shifted = u.samples - u.samples[0]
    out = m.apply(shifted) + u.samples[0] * _rl_derivative_singular_profile(u.grid, alpha)
    return GridFn(u.grid, out, name=u.name)


def reflect(u: GridFn) -> GridFn:
    """Reverse the sample order; represents t -> a + b - t on the same grid."""
    return GridFn(u.grid, u.samples[::-1].copy(), name=u.name)


def right_rl_derivative(u: GridFn, alpha: float) -> GridFn:
    """Right-sided Riemann-Liouville derivative by the mirror construction.

    Defined as reflect(left derivative(reflect(u))): the chain rule of the
    reflection t -> a + b - t carries the sign, so alpha = 1 yields -u'.
    """
    return reflect(rl_derivative(reflect(u), alpha))


def sequential_caputo(u: GridFn, alpha: float, beta: float) -> GridFn:
    """Composition d^alpha d^beta u, applied in order beta then alpha.

    No order-addition shortcut is taken; the composition is genuinely two
    scheme applications, preserving non-commutativity.
    """
    return caputo_derivative(caputo_derivative(u, beta), alpha)


def log_companion_grid(grid: Grid) -> Grid:
    """Uniform grid in sigma = log(t/a) over [0, log(b/a)], same n."""
    if grid.a <= 0.0:
        raise DomainError("hadamard operators require a > 0")
    return Grid(0.0, math.log(grid.b / grid.a), grid.n)


def to_log_grid(u: GridFn) -> GridFn:
    """Resample a grid function onto the companion grid (linear interpolation).

    Sample j of the result is u evaluated at t = a exp(sigma_j).
    """
    tau = log_companion_grid(u.grid)
    tnodes = u.grid.a * np.exp(tau.nodes)
    vals = np.interp(tnodes, u.grid.nodes, u.samples)
    vals[0] = u.samples[0]
    vals[-1] = u.samples[-1]
    return GridFn(tau, vals, name=u.name)


def from_log_grid(g: GridFn, grid: Grid) -> GridFn:
    """Resample a companion-grid function back onto the original t-grid."""
    tau_of_t = np.log(grid.nodes / grid.a)
    vals = np.interp(tau_of_t, g.grid.nodes, g.samples)
    vals[0] = g.samples[0]
    vals[-1] = g.samples[-1]
    return GridFn(grid, vals, name=g.name)


def hadamard_integral(u: GridFn, alpha: float) -> GridFn:
    """Hadamard fractional integral of order alpha > 0.

    Returned samples live on the companion grid: sample j is the operator
    value at t = a exp(sigma_j).
    """
    _check_integral_order(alpha)
    if u.grid.a <= 0.0:
        raise DomainError("hadamard operators require a > 0")
    m = operator_matrix(u.grid, alpha, "hadamard-integral")
    return GridFn(m.grid, m.apply(to_log_grid(u).samples), name=u.name)


def hadamard_derivative(u: GridFn, alpha: float,
                        allow_order_one: bool = False) -> GridFn:
    """Hadamard fractional derivative of order alpha in (0, 1).

    With ``allow_order_one`` the boundary order alpha = 1 is accepted and
    evaluates the limit operator t u'(t) (the first derivative on the
    logarithmic axis).  Output samples live on the companion grid.
    """
    alpha = float(alpha)
    if u.grid.a <= 0.0:
        raise DomainError("hadamard operators require a > 0")
    if alpha == 1.0:
        if not allow_order_one:
            raise DomainError(
                "hadamard derivative requires alpha in (0, 1); "
                "pass allow_order_one=True for the t*u'(t) limit"
            )
        # differentiate on the original grid and resample the smooth result:
        # resampling first and differencing after would amplify the
        # interpolation sawtooth by 1/h
        m = operator_matrix(u.grid, 1.0, "caputo")
        tu = GridFn(u.grid, u.grid.nodes * m.apply(u.samples), name=u.name)
        return to_log_grid(tu)
    m = operator_matrix(u.grid, alpha, "hadamard-derivative")
    return GridFn(m.grid, m.apply(to_log_grid(u).samples), name=u.name)


_GAUSS_NODES, _GAUSS_WEIGHTS = leggauss(20)


def hadamard_integral_direct(u: GridFn, alpha: float) -> GridFn:
    """Hadamard integral by direct quadrature of the logarithmic kernel in t.

    Independent cross-check of :func:`hadamard_integral`: it shares the
    companion-node samples and the piecewise-linear-in-log data model, but
    integrates (log(t/s))^(alpha-1) u(s) ds/s cell by cell in the original
    variable (Gauss-Legendre on regular cells, a closed-form power-rule
    moment on the singular last cell) instead of using the telescoped
    uniform-grid weights.
    """
    alpha = _check_integral_order(alpha)
    ut = to_log_grid(u)
    tau = ut.grid.nodes
    dtau = ut.grid.h
    a = u.grid.a
    tnodes = a * np.exp(tau)
    vals = ut.samples
    n = ut.grid.n
    out = np.zeros(n + 1)
    slope = (vals[1:] - vals[:-1]) / dtau
    inv_gamma = 1.0 / gamma_fn(alpha)
    for i in range(1, n + 1):
        big_t = tnodes[i]
        total = 0.0
        if i >= 2:
            j = np.arange(i - 1)
            s0, s1 = tnodes[j], tnodes[j + 1]
            mid, rad = 0.5 * (s0 + s1), 0.5 * (s1 - s0)
            s = mid[:, None] + rad[:, None] * _GAUSS_NODES[None, :]
            hat = vals[j, None] + slope[j, None] * (np.log(s / a) - tau[j, None])
            f = np.log(big_t / s) ** (alpha - 1.0) * hat / s
            total += float(np.dot(rad, f @ _GAUSS_WEIGHTS))
        # singular cell [t_{i-1}, t_i]: substitute w = log(t_i/s), integrate
        # the affine-in-sigma data exactly
        j = i - 1
        w0 = (tau[i] - tau[j]) ** alpha
        c_end = vals[j] + slope[j] * (tau[i] - tau[j])
        total += (c_end * w0
                  - slope[j] * w0 ** (1.0 + 1.0 / alpha) / (1.0 + 1.0 / alpha)) / alpha
        out[i] = inv_gamma * total
    return GridFn(ut.grid, out, name=u.name)
