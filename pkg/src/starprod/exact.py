"""Exact evaluation of the closed-form counts, expectations and bounds.

Everything here is integer or rational arithmetic (fractions.Fraction),
with floating point appearing only in the final logarithm or exponential
of a result.  That matters: the kernel-expectation formula is an
alternating sum of q-power terms whose cancellation would destroy any
fixed-precision evaluation.

Conventions, applied uniformly through binom() and qbinom(): binomial and
q-binomial coefficients are zero whenever any argument is negative or the
lower index exceeds the upper one, and the empty product is 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .errors import BadRange, UncoveredCase


def _prime_power(q: int) -> tuple:
    """Return (p, m) with q = p**m and p prime, else raise BadRange."""
    if q < 2:
        raise BadRange(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m = 0
    v = q
    while v % p == 0:
        v //= p
        m += 1
    if v != 1:
        raise BadRange(f"{q} is not a prime power")
    return p, m


@dataclass(frozen=True)
class Params:
    """A (q, n, k1, k2) parameter point, normalised so that k1 <= k2.

    The star product and every formula taking a Params are symmetric in
    the two dimensions; asymmetric operations take explicit arguments.
    """

    q: int
    n: int
    k1: int
    k2: int

    def __post_init__(self):
        _prime_power(self.q)
        if self.k1 > self.k2:
            lo, hi = self.k2, self.k1
            object.__setattr__(self, "k1", lo)
            object.__setattr__(self, "k2", hi)
        if not 1 <= self.k1 <= self.k2 <= self.n:
            raise BadRange(f"need 1 <= k1 <= k2 <= n, got k1={self.k1} k2={self.k2} n={self.n}")


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the zero convention for bad arguments."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def qbinom(n: int, k: int, q: int) -> int:
    """Gaussian binomial: the number of k-dim subspaces of F_q^n.

    Zero when k > n or any argument is negative; 1 on empty products.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (q ** (n - k + i) - 1) // (q**i - 1)
    return out


def count_zero_diag_rank(k1: int, k2: int, r: int, q: int) -> int:
    """Number of rank-r k1 x k2 matrices over F_q with zero diagonal.

    Inclusion-exclusion over the diagonal constraints; the alternating
    sum is always divisible by q**k1.
    """
    if not 0 <= r <= k1 <= k2:
        raise BadRange(f"need 0 <= r <= k1 <= k2, got r={r} k1={k1} k2={k2}")
    total = 0
    for i in range(k1 + 1):
        ci = binom(k1, i) * (q - 1) ** i
        for j in range(k1 + 1):
            qb = qbinom(k1 - i, j, q) * qbinom(k1 - j, k1 - r, q)
            if qb == 0:
                continue
            total += ci * (-1) ** (r - j) * q ** (j * k2 + binom(r - j, 2)) * qb
    quot, rem = divmod(total, q**k1)
    if rem:
        raise AssertionError("zero-diagonal count not divisible by q**k1")
    return quot


def count_zero_diag_rank_zerocols(k1: int, k2: int, r: int, ell: int, q: int) -> int:
    """Zero-diagonal rank-r count with a prescribed zero-column pattern.

    Counts matrices of count_zero_diag_rank type that additionally vanish
    on a fixed set of ell of the last k2 - k1 columns and are nonzero on
    each of the remaining ones.  Moebius inversion over column subsets
    reduces this to plain zero-diagonal counts at shrunken widths.
    """
    if not 0 <= r <= k1 <= k2:
        raise BadRange(f"need 0 <= r <= k1 <= k2, got r={r} k1={k1} k2={k2}")
    w = k2 - k1
    if not 0 <= ell <= w:
        raise BadRange(f"need 0 <= ell <= k2 - k1, got ell={ell}")
    total = 0
    for m in range(ell, w + 1):
        total += (-1) ** (m - ell) * binom(w - ell, m - ell) * count_zero_diag_rank(
            k1, k2 - m, r, q
        )
    return total


def zeros_of_form(r: int, k1: int, k2: int, q: int) -> int:
    """Number of zeros of any rank-r bilinear form on F_q^k1 x F_q^k2."""
    if k1 < 1 or k2 < 1:
        raise BadRange("form dimensions must be >= 1")
    if not 0 <= r <= min(k1, k2):
        raise BadRange(f"need 0 <= r <= min(k1, k2), got r={r}")
    return (q**r + q - 1) * q ** (k1 + k2 - r - 1)


def _gamma(j: int, q: int) -> Fraction:
    return Fraction(q**j + q - 1, q**j)


def _expected_kernel_size(p: Params, j_limit: str) -> Fraction:
    """Triple-sum kernel-size expectation; j_limit picks the (equivalent)
    upper summation limit: "min", "r" or "k1".  The zero conventions in
    qbinom make all three identical; the variants exist for tests."""
    q, n, k1, k2 = p.q, p.n, p.k1, p.k2
    total = Fraction(0)
    for r in range(k1 + 1):
        gr = _gamma(r, q) ** (n - k2)
        for i in range(k1 + 1):
            ci = binom(k1, i) * (q - 1) ** i
            if ci == 0:
                continue
            if j_limit == "min":
                jmax = min(r, k1 - i)
            elif j_limit == "r":
                jmax = r
            else:
                jmax = k1
            for j in range(jmax + 1):
                qb = qbinom(k1 - i, j, q) * qbinom(k1 - j, k1 - r, q)
                if qb == 0:
                    continue
                term = (
                    (-1) ** (r - j)
                    * gr
                    * _gamma(j, q) ** (k2 - k1)
                    * ci
                    * qb
                    * Fraction(q) ** (j * k2 - n + binom(r - j, 2))
                )
                total += term
    return total


def expected_kernel_size(p: Params) -> Fraction:
    """Exact expected kernel size of the bilinear evaluation map.

    Every generator pair (G1, G2) induces the linear map sending a k1 x k2
    coefficient matrix B to the length-n vector of values G1_col.T B
    G2_col; its image is the star product, so the kernel size determines
    the star dimension.  The expectation is over the systematic random
    model (identity block fixed, remaining columns uniform) and always
    satisfies E >= 1.
    """
    return _expected_kernel_size(p, "min")


class StarDimBound(NamedTuple):
    bound: float
    kernel_expectation: Fraction


def star_dim_lower_bound(p: Params) -> StarDimBound:
    """Jensen lower bound k1*k2 - log_q E[kernel size] on the expected
    star dimension, with the exact rational expectation alongside.

    The logarithm is taken at 40 decimal digits of working precision so
    the float result is correct to well over 10 significant digits.
    """
    e = expected_kernel_size(p)
    with mpmath.workdps(40):
        logq_e = (mpmath.log(e.numerator) - mpmath.log(e.denominator)) / mpmath.log(p.q)
        bound = float(p.k1 * p.k2 - logq_e)
    return StarDimBound(bound, e)


def expected_star_dim_mds(q: int, n: int, k1: int, k2: int) -> Fraction:
    """Expected star dimension of a fixed MDS [n, k1] code with a uniform
    random k2-dimensional code, in the two determined regimes.

    For k2 = 1 the star dimension is min(k1, support size of the line);
    for k2 >= n - k1 + 1 it equals the support size of the random code.
    In between the value depends on the particular MDS code, so
    UncoveredCase is raised.  Existence of an MDS [n, k1] code over F_q
    is assumed, not checked.
    """
    _prime_power(q)
    if not (1 <= k1 <= n and 1 <= k2 <= n):
        raise BadRange(f"need 1 <= k1, k2 <= n, got k1={k1} k2={k2} n={n}")
    if k2 == 1:
        num = sum(binom(n, i) * (q - 1) ** i * min(k1, i) for i in range(1, n + 1))
        return Fraction(num, q**n - 1)
    if k2 >= n - k1 + 1:
        total = 0
        for s in range(k2, n + 1):
            inner = sum(
                (-1) ** i * qbinom(s - i, k2, q) * binom(s, s - i) for i in range(s - k2 + 1)
            )
            total += s * binom(n, s) * inner
        return Fraction(total, qbinom(n, k2, q))
    raise UncoveredCase(
        f"2 <= k2 <= n - k1 (k2={k2}, n-k1={n - k1}): expectation depends on the code"
    )


def count_subspaces_with_support(q: int, n: int, ell: int, s: int) -> int:
    """Number of ell-dim subspaces of F_q^n whose support is a fixed
    s-element coordinate set, by inclusion-exclusion over subsets."""
    if not (0 <= ell <= n and 0 <= s <= n):
        raise BadRange(f"need 0 <= ell, s <= n, got ell={ell} s={s} n={n}")
    return sum((-1) ** (s - i) * binom(s, i) * qbinom(i, ell, q) for i in range(ell, s + 1))


def expected_intersection_dim(p: Params) -> Fraction:
    """Exact expected intersection dimension of two independent uniformly
    random subspaces of dimensions k1 and k2, by counting pairs with a
    prescribed intersection."""
    q, n, k1, k2 = p.q, p.n, p.k1, p.k2
    num = 0
    for i in range(1, k1 + 1):
        num += (
            i
            * qbinom(n, i, q)
            * qbinom(n - i, k1 - i, q)
            * q ** ((k1 - i) * (k2 - i))
            * qbinom(n - k1, k2 - i, q)
        )
    return Fraction(num, qbinom(n, k1, q) * qbinom(n, k2, q))


def kernel_limit_value(p: Params) -> Fraction:
    """The large-field limit expression 1 + q**(k1*k2 - n), evaluated
    exactly at the given q."""
    return 1 + Fraction(p.q) ** (p.k1 * p.k2 - p.n)


def full_dim_probability_bound_exponent(q: int, t: int) -> float:
    """The bound value 1 - ((2q - 1) / q**2)**t for an explicit exponent.

    A lower bound on the probability of a full-dimensional star product
    only asymptotically; at small parameters it is advisory and should be
    reported next to empirical frequencies, never asserted against them.
    """
    _prime_power(q)
    if t < 0:
        raise BadRange(f"exponent must be >= 0, got {t}")
    return float(1 - Fraction(2 * q - 1, q * q) ** t)


def full_dim_probability_bound(q: int, n: int, k1: int, k2: int) -> float:
    """Same bound with the exponent n - k1*k2 (requires n >= k1*k2)."""
    if n < k1 * k2:
        raise BadRange(f"need n >= k1*k2 for this form, got n={n}, k1*k2={k1 * k2}")
    return full_dim_probability_bound_exponent(q, n - k1 * k2)


def kernel_conjecture_value(q: int, k1: int, k2: int) -> float:
    """Conjectured growing-dimension kernel-size limit
    exp((q - 1) * k2 * (k1 - 1) / q**k1) + 1, for exploratory comparison
    against expected_kernel_size."""
    _prime_power(q)
    if k1 < 1 or k2 < 1:
        raise BadRange("dimensions must be >= 1")
    return math.exp((q - 1) * k2 * (k1 - 1) / q**k1) + 1.0
