#!/usr/bin/env python3
"""Finite fields and exact linear algebra.

Builds a prime field and an extension field, shows the integer encoding
of elements, and runs the canonical matrix operations: reduced row
echelon form, rank, and right kernels, plus the text format that the
command-line tools read and write.
"""

from starprod import Mat, field_make, format_matrix, rank, right_kernel_basis, rref

f7 = field_make(7)
print("GF(7):", "3 * 5 =", int(f7.mul(3, 5)), " inv(3) =", int(f7.inv(3)))

f4 = field_make(2, 2)
print("GF(4) modulus (constant term first):", f4.modulus)
print("encoding: 2 is x, 3 is x+1;  2*2 =", int(f4.mul(2, 2)), " 2*3 =", int(f4.mul(2, 3)))

f3 = field_make(3)
m = Mat(f3, [[1, 2, 0, 1], [2, 1, 1, 1], [0, 0, 1, 2]])
red, pivots = rref(m)
print("\nmatrix over GF(3):")
print(m.data)
print("RREF (pivots", pivots, "):")
print(red.data)
print("rank:", rank(m))

ker = right_kernel_basis(m)
print("right kernel basis rows:", ker.data.tolist())
print("rank + nullity =", rank(m), "+", ker.rows, "=", m.cols)

print("\ntext format, as consumed by the CLI:")
print(format_matrix(red), end="")
