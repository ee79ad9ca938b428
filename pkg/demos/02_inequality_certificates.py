#!/usr/bin/env python3
"""Inequality certificates over a random corpus.

Builds cases for a few families, evaluates both sides on seeded random
polynomials vanishing at the left endpoint, and prints the resulting
certificates.  Every ratio must stay below 1 + disc_tol: the continuum
inequalities are theorems, so a discrete violation beyond the estimated
discretization error would indicate a bug.
"""

from fracineq import (
    CorpusSpec,
    Family,
    InequalityCase,
    constant,
    evaluate_sides,
    generate,
    uniform_grid,
)

a, b, n = 1.0, 2.0, 512
grid = uniform_grid(a, b, n)
corpus = generate(CorpusSpec.polynomials(grid, degree=3, count=4, seed=7))

cases = [
    InequalityCase(Family.POINCARE_SOBOLEV, a=a, b=b, alpha=0.75, p=2.0),
    InequalityCase(Family.HARDY, a=a, b=b, alpha=0.75, p=2.0),
    InequalityCase(Family.WEIGHTED_HARDY, a=a, b=b, alpha=0.75, p=2.0, gamma=1.5),
    InequalityCase(Family.GAGLIARDO_NIRENBERG, a=a, b=b, alpha=0.75, p=2.0,
                   q=2.0, s=0.5),
    InequalityCase(Family.CKN, a=a, b=b, alpha=0.9, p=2.0, q=2.0, delta=0.5,
                   d=1.0, e=0.2),
    InequalityCase(Family.UNCERTAINTY, a=a, b=b, alpha=0.75, p=2.0),
]

print(f"interval ({a}, {b}), grid n={n}, corpus of {len(corpus)} random "
      "polynomials with u(a) = 0")
print()
for case in cases:
    print(f"--- {case.family.value}  (constant C = {constant(case):.6f}) ---")
    for u in corpus:
        cert = evaluate_sides(case, u)
        print(f"  {u.name:16s} lhs {cert.lhs:10.3e}  rhs {cert.rhs:10.3e}  "
              f"ratio {cert.ratio:8.5f}  tol {cert.disc_tol:.1e}  "
              f"{'pass' if cert.passed else 'FAIL'}")
    print()

print("equality-attaining probe: u(t) = t - a for the sup-norm bound at "
      "alpha = 1, p = 2 on (0, 1)")
probe_grid = uniform_grid(0.0, 1.0, 512)
probe = generate(CorpusSpec.powers(probe_grid, [1.0]))[0]
cert = evaluate_sides(
    InequalityCase(Family.POINCARE_SOBOLEV, a=0.0, b=1.0, alpha=1.0, p=2.0), probe)
print(f"  ratio = {cert.ratio:.12f} (the bound is tight here)")
