#!/usr/bin/env python3
"""Space-fractional diffusion and its a-priori energy estimate.

Runs the implicit Euler simulator for several fractional orders, checks
that the energy I(t) = ||u||^2 never increases, and compares the trace with
the exponential bound I(0) exp(-2 lambda t) coming from the L^2 bound on
the fractional derivative.
"""

import numpy as np

from fracineq import (
    DiffusionProblem,
    GridFn,
    check_apriori,
    decay_rate,
    run,
    uniform_grid,
)

n, dt, T = 256, 1e-3, 1.0
grid = uniform_grid(0.0, 1.0, n)
u0 = GridFn(grid, grid.nodes.copy(), name="x")

print(f"grid n={n}, dt={dt}, T={T}, initial profile u0(x) = x")
print()
for alpha in (0.6, 0.75, 1.0):
    problem = DiffusionProblem(grid, alpha, u0, T=T, dt=dt)
    trace = run(problem)
    rep = check_apriori(trace)
    lam = decay_rate(grid, alpha)
    print(f"--- alpha = {alpha} (decay rate lambda = {lam:.4f}) ---")
    print("      t        I(t)         bound I(0)e^(-2 lambda t)")
    for k in (0, 100, 250, 500, 1000):
        bound = trace.energy[0] * np.exp(-2.0 * lam * trace.times[k])
        print(f"  {trace.times[k]:7.3f}  {trace.energy[k]:.6e}   {bound:.6e}")
    print(f"  monotone decay: {rep.monotone_ok} "
          f"(worst per-step increase {rep.max_monotone_violation:.1e})")
    print(f"  exponential bound with 5% slack: {rep.exp_bound_ok} "
          f"(worst excess {rep.max_exp_excess:.2e})")
    print()

print("The half-energy identity: one step dissipates exactly the discrete")
print("derivative energy, which is why the decay is unconditional.")
