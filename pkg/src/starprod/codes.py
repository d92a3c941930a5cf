"""Linear codes and their deterministic operations.

A LinearCode is a nonzero k-dimensional subspace of F_q^n held by its
canonical basis: the reduced row echelon form of any generator matrix.
Canonical storage makes code equality exact, which the enumeration and
expectation machinery relies on. When the pivot columns are the first k
coordinates the basis is literally a systematic generator [I_k | A] and
is exposed as such.

Operations (star product, dual, distance, projections, the deterministic
star-dimension lower bounds) are pure functions of their inputs.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    BudgetExceeded,
    DegenerateInput,
    FieldMismatch,
    LengthMismatch,
    NeitherMDS,
    ZeroCode,
    ZeroDual,
)
from .fields import FieldSpec
from .matrices import Mat, rank, rref, right_kernel_basis, stack

DEFAULT_DISTANCE_BUDGET = 2**24
_CHUNK = 1 << 16


class LinearCode:
    """A nonzero [n, k] code over a finite field, stored canonically."""

    __slots__ = ("field", "n", "k", "basis", "pivots", "systematic")

    def __init__(self, field: FieldSpec, basis: Mat, pivots: tuple):
        # trusted constructor: callers must pass an RREF basis of full rank
        self.field = field
        self.n = basis.cols
        self.k = basis.rows
        self.basis = basis
        self.pivots = pivots
        self.systematic = basis if pivots == tuple(range(self.k)) else None

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field.q, self.basis))

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"


def code_from_matrix(m: Mat) -> LinearCode:
    """The code spanned by the rows of m, canonicalised."""
    red, pivots = rref(m)
    k = len(pivots)
    if k == 0:
        raise ZeroCode("matrix spans the zero subspace")
    return LinearCode(m.field, Mat(m.field, red.data[:k]), pivots)


def _check_pair(c1: LinearCode, c2: LinearCode) -> None:
    if c1.field != c2.field:
        raise FieldMismatch(f"codes over {c1.field!r} and {c2.field!r}")
    if c1.n != c2.n:
        raise LengthMismatch(f"code lengths differ: {c1.n} vs {c2.n}")


def pairwise_product_rows(field: FieldSpec, gens1: np.ndarray, gens2: np.ndarray) -> np.ndarray:
    """Componentwise products of every row pair, batched.

    gens1 has shape (..., k1, n) and gens2 (..., k2, n); the result has
    shape (..., k1*k2, n) and spans the star product of the row spaces.
    """
    prod = field.mul(gens1[..., :, None, :], gens2[..., None, :, :])
    return prod.reshape(prod.shape[:-3] + (prod.shape[-3] * prod.shape[-2], prod.shape[-1]))


def star_product(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """The span of all componentwise products of codewords.

    Computed as the row space of the k1*k2 pairwise products of basis
    rows, so dim <= min(k1*k2, n).  Raises ZeroCode in the degenerate
    situation where the supports of the two codes are disjoint.
    """
    _check_pair(c1, c2)
    rows = pairwise_product_rows(c1.field, c1.basis.data, c2.basis.data)
    return code_from_matrix(Mat(c1.field, rows))


def dual(c: LinearCode) -> LinearCode:
    """The orthogonal complement under the standard bilinear form."""
    if c.k == c.n:
        raise ZeroDual("the full space has zero dual")
    return code_from_matrix(right_kernel_basis(c.basis))


def _min_weight_of_span(field: FieldSpec, basis: np.ndarray, budget: int) -> int:
    """Minimum Hamming weight over the nonzero span of the given rows.

    Enumerates one representative per projective point (scaling keeps
    weights), grouped by the position of the first nonzero message
    coordinate.  The budget is counted against the full q**k span.
    """
    k, n = basis.shape
    q = field.q
    if q**k > budget:
        raise BudgetExceeded(f"codeword enumeration q**k = {q}**{k} exceeds budget {budget}")
    best = n
    for lead in range(k):
        rest = k - lead - 1
        total = q**rest
        for start in range(0, total, _CHUNK):
            cnt = min(_CHUNK, total - start)
            idx = np.arange(start, start + cnt, dtype=np.int64)
            cw = np.broadcast_to(basis[lead], (cnt, n)).copy()
            place = total
            for t in range(rest):
                place //= q
                digit = (idx // place) % q
                cw = field.add(cw, field.mul(digit[:, None], basis[lead + 1 + t][None, :]))
            w = int(np.count_nonzero(cw, axis=1).min())
            best = min(best, w)
            if best == 1:
                return 1
    return best


def min_distance(c: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Minimum Hamming weight of a nonzero codeword, by enumeration."""
    return _min_weight_of_span(c.field, c.basis.data, budget)


def support(c: LinearCode) -> frozenset:
    """Coordinates where some codeword is nonzero."""
    return frozenset(int(i) for i in np.nonzero(c.basis.data.any(axis=0))[0])


def is_degenerate(c: LinearCode) -> bool:
    return len(support(c)) != c.n


def project(c: LinearCode, coords) -> LinearCode:
    """The code of restrictions to the given coordinates, canonicalised."""
    idx = sorted(set(int(i) for i in coords))
    if not idx:
        raise ValueError("projection needs a nonempty coordinate set")
    if idx[0] < 0 or idx[-1] >= c.n:
        raise ValueError(f"coordinates outside [0, {c.n})")
    return code_from_matrix(Mat(c.field, c.basis.data[:, idx]))


def is_mds(c: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> bool:
    """Whether the code meets the Singleton bound, d = n - k + 1."""
    return min_distance(c, budget) == c.n - c.k + 1


def intersection_dim(c1: LinearCode, c2: LinearCode) -> int:
    """dim of the intersection, via k1 + k2 - rank of the stacked bases."""
    _check_pair(c1, c2)
    return c1.k + c2.k - rank(stack(c1.basis, c2.basis))


def is_subcode(inner: LinearCode, outer: LinearCode) -> bool:
    """Whether every codeword of inner lies in outer."""
    _check_pair(inner, outer)
    return rank(stack(outer.basis, inner.basis)) == outer.k


def _require_nondegenerate(c1: LinearCode, c2: LinearCode) -> None:
    if is_degenerate(c1) or is_degenerate(c2):
        raise DegenerateInput("both codes must have full support")


def star_lower_bound_dual_distance(
    c1: LinearCode, c2: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET
) -> int:
    """Dual-distance lower bound on dim of the star product.

    For non-degenerate codes the star dimension is at least
    min(n, k1 + d(dual of C2) - 2, k2 + d(dual of C1) - 2).
    """
    _check_pair(c1, c2)
    _require_nondegenerate(c1, c2)
    d1 = min_distance(dual(c1), budget)
    d2 = min_distance(dual(c2), budget)
    return min(c1.n, c1.k + d2 - 2, c2.k + d1 - 2)


def star_lower_bound_mds(
    c1: LinearCode, c2: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET
) -> int:
    """MDS lower bound min(n, k1 + k2 - 1) on dim of the star product.

    Valid for non-degenerate codes when at least one of them is MDS.
    """
    _check_pair(c1, c2)
    _require_nondegenerate(c1, c2)
    if not (is_mds(c1, budget) or is_mds(c2, budget)):
        raise NeitherMDS("the bound needs at least one MDS operand")
    return min(c1.n, c1.k + c2.k - 1)
