#!/usr/bin/env python3
"""Fixed-code star expectations and what they can distinguish.

For a fixed MDS code C and a uniformly random partner D the expectation
E[dim(C * D)] has a closed form when dim D = 1 or dim D >= n - dim C + 1,
and the value then depends on the parameters only.  In between it does
not: the package ships two monomially inequivalent [6, 3] MDS codes over
GF(7) whose expectations at dim D = 2 differ, which also shows the
expectation is not a matroid invariant.  Monomially equivalent codes, on
the other hand, can never be separated this way.

Here the partner dimension is 1 (19608 subspaces, instant).  The dim D =
2 case enumerates 6865251 subspaces and reproduces the exact rationals
13138498/2288417 vs 13154050/2288417; run it via

    starprod example-mds --l 2
"""

from starprod import expected_star_dim_mds, exact_expected_star_dim_fixed, monomial_invariance_check
from starprod.catalog import mds63_gf7_codes
from starprod.matrices import Mat
from starprod.fields import field_make
import numpy as np

c1, c2 = mds63_gf7_codes()

e1 = exact_expected_star_dim_fixed(c1, 1)
e2 = exact_expected_star_dim_fixed(c2, 1)
closed = expected_star_dim_mds(7, 6, 3, 1)
print("partner dimension 1 (covered by the closed form):")
print(f"  enumeration, code A: {e1}")
print(f"  enumeration, code B: {e2}")
print(f"  closed form:         {closed}")
print(f"  all equal: {e1 == e2 == closed}")

# a monomial change of coordinates never changes the expectation
f7 = field_make(7)
rng = np.random.default_rng(0)
perm = rng.permutation(6)
m = np.zeros((6, 6), dtype=np.int64)
for i, j in enumerate(perm):
    m[i, j] = rng.integers(1, 7)
check = monomial_invariance_check(c1, Mat(f7, m), 1)
print("\nafter a random monomial transformation:")
print(f"  {check.expectation_original} == {check.expectation_image}: {check.equal}")
