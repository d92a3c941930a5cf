#!/usr/bin/env python3
"""Intersection expectations and asymptotic behaviour.

Two trends worth seeing numerically:

* as the field grows, the expected kernel size approaches the simple
  expression 1 + q**(k1*k2 - n), so the expected star dimension
  approaches its ceiling min(k1*k2, n);
* two random subspaces of F_q^(k*k) of dimension k intersect, on
  average, in a space whose dimension vanishes as k grows, so the k*k
  pairwise basis products are typically distinct.

A conjectured growing-dimension limit for the kernel size is also
evaluated next to the exact values, with no claim attached.
"""

from starprod import (
    Params,
    expected_intersection_dim,
    expected_kernel_size,
    full_dim_probability_bound,
    kernel_conjecture_value,
    kernel_limit_value,
    mc_full_dim_frequency,
)

print("kernel expectation vs its large-field limit, (n, k1, k2) = (7, 2, 3):")
for q in (2, 3, 5, 7, 11, 13):
    p = Params(q, 7, 2, 3)
    e = expected_kernel_size(p)
    lim = kernel_limit_value(p)
    print(f"  q={q:>2}: E = {float(e):.6f}, 1 + q^(k1k2-n) = {float(lim):.6f}, gap = {float(abs(e-lim)):.6f}")

print("\nexpected intersection dimension at n = k*k, both codes k-dimensional, q = 2:")
for k in (2, 3, 4, 5):
    val = expected_intersection_dim(Params(2, k * k, k, k))
    print(f"  k={k}: {float(val):.6f}")

print("\nfull-dimension frequency next to the asymptotic bound (advisory, never asserted):")
p = Params(2, 8, 2, 3)
freq = mc_full_dim_frequency(p, samples=20_000, seed=3)
print(f"  (q,n,k1,k2) = (2,8,2,3): frequency = {freq.mean_f64:.4f}, bound value = {full_dim_probability_bound(2, 8, 2, 3):.4f}")

print("\nconjectured growing-dimension kernel limit vs exact values (exploratory):")
for k, n in [(2, 4), (3, 9)]:
    exact = expected_kernel_size(Params(2, n, k, k))
    conj = kernel_conjecture_value(2, k, k)
    print(f"  q=2, k1=k2={k}, n={n}: exact = {float(exact):.5f}, conjecture = {conj:.5f}")
