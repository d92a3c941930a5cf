#!/usr/bin/env python3
"""Linear codes and the star (Schur) product.

The star product of two codes is the span of all componentwise products
of their codewords.  This walks through the basic operations and the two
deterministic lower bounds on its dimension: the dual-distance bound for
non-degenerate codes, and the stronger bound when one code is MDS.
"""

from starprod import (
    dual,
    field_make,
    is_mds,
    min_distance,
    star_lower_bound_dual_distance,
    star_lower_bound_mds,
    star_product,
    support,
)
from starprod.catalog import evaluation_code, hamming_7_4, mds63_gf7_codes, repetition_code

h = hamming_7_4()
print("Hamming code: [%d, %d, %d]" % (h.n, h.k, min_distance(h)))
print("its dual (the simplex code):", dual(h), "distance", min_distance(dual(h)))

square = star_product(h, h)
print("Hamming * Hamming has dimension", square.k)
print("dual-distance lower bound:", star_lower_bound_dual_distance(h, h))

# the repetition code is the identity for the star product
f2 = field_make(2)
rep = repetition_code(f2, 7)
print("\nHamming * repetition == Hamming:", star_product(h, rep) == h)

# evaluation codes multiply like polynomials: degrees add
grs = evaluation_code(field_make(5), 2)
print("\n[5, 2] evaluation code is MDS:", is_mds(grs))
print("square has dimension", star_product(grs, grs).k, "(degree <= 2 polynomials)")
print("MDS lower bound min(n, k1 + k2 - 1):", star_lower_bound_mds(grs, grs))

c1, c2 = mds63_gf7_codes()
print("\nbuilt-in [6, 3] MDS pair over GF(7):")
print("supports:", sorted(support(c1)), sorted(support(c2)))
print("both MDS:", is_mds(c1), is_mds(c2))
print("dim(C1 * C2) =", star_product(c1, c2).k)
