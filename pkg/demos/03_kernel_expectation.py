#!/usr/bin/env python3
"""The kernel expectation behind the star-dimension lower bound.

Any generator pair (G1, G2) turns a k1 x k2 coefficient matrix into a
length-n word by evaluating the associated bilinear form columnwise; the
image of that linear map is exactly the star product, so

    dim(C1 * C2) = k1*k2 - log_q |kernel|.

For random systematic generators the expected kernel size has an exact
rational closed form.  Three independent routes to the same number:

  1. the closed-form triple sum (exact rational),
  2. exhaustive enumeration of every systematic pair (exact rational),
  3. reproducible Monte Carlo (estimate with a standard error).

Jensen's inequality then turns route 1 into a lower bound on the
expected star dimension.
"""

from starprod import (
    Params,
    RandomModel,
    exact_expected_kernel,
    exact_expected_star_dim,
    expected_kernel_size,
    mc_kernel_size,
    star_dim_lower_bound,
)

p = Params(q=2, n=5, k1=2, k2=2)
formula = expected_kernel_size(p)
oracle = exact_expected_kernel(p)
mc = mc_kernel_size(p, samples=200_000, seed=1)

print(f"parameters: q={p.q}, n={p.n}, k1={p.k1}, k2={p.k2}")
print(f"closed form:          {formula} = {float(formula):.6f}")
print(f"full enumeration:     {oracle}  (equal: {formula == oracle})")
print(f"Monte Carlo (200000): {mc.mean_f64:.6f} +- {mc.stderr:.6f}")

res = star_dim_lower_bound(p)
true_mean = exact_expected_star_dim(p, RandomModel.SYSTEMATIC)
print(f"\nJensen bound on E[dim star]: {res.bound:.6f}")
print(f"exact E[dim star]:           {float(true_mean):.6f}  (bound holds: {res.bound <= float(true_mean)})")
