#!/usr/bin/env python3
"""Application figures of merit driven by the star product.

Three protocol families read their key parameters straight off a star
product: private information retrieval (rate window), secure distributed
matrix multiplication (recovery threshold and straggler tolerance), and
binary CSS-T quantum code pairs (a containment condition).  Random codes
make poor ingredients for the first two precisely because their star
products are typically as large as possible.
"""

import json

from starprod import csst_envelope, field_make, pir_rate_bounds, sdmm_thresholds
from starprod.catalog import evaluation_code, repetition_code

f11 = field_make(11)
c = evaluation_code(f11, 3)  # [11, 3] polynomial evaluation code
d = evaluation_code(f11, 4)

pir = pir_rate_bounds(c, d)
print("PIR with two evaluation codes of dimensions 3 and 4 on 11 servers:")
print(" ", json.dumps(pir.to_json()))
print("  the upper bound equals 1 - (k1 + k2 - 1)/n =", 1 - (3 + 4 - 1) / 11)

sdmm = sdmm_thresholds(c, d)
print("\nSDMM with the same pair:")
print(" ", json.dumps(sdmm.to_json()))

f2 = field_make(2)
print("\nCSS-T feasibility over GF(2):")
for n in (2, 3, 4):
    rep = csst_envelope(repetition_code(f2, n))
    print(f"  repetition code of length {n}: {json.dumps(rep.to_json())}")
print("  (length 2 works: the square of the code stays inside its own dual)")
