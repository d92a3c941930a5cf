"""Exhaustive ground truth for the closed forms, at small parameters.

Everything here enumerates a finite probability space completely and
aggregates with exact integer arithmetic, so results are rationals the
formula modules must match exactly.  Enumerations charge an EnumBudget up
front and fail loudly rather than truncate; an oracle that silently
samples is not an oracle.

Two enumeration orders matter and are deliberately different:

* systematic generators are enumerated as matrices (distinct matrices may
  share a row space), mirroring the systematic random model exactly;
* subspaces are enumerated once each via their canonical RREF bases
  (pivot column sets, then free entries), mirroring the uniform model.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, NamedTuple

import numpy as np

from .codes import LinearCode, code_from_matrix, pairwise_product_rows
from .errors import BadRange, BudgetExceeded, NotMonomial
from .exact import Params, qbinom
from .fields import FieldSpec, field_from_order
from .matrices import Mat, mat_mul, rank_many
from .sampling import RandomModel

DEFAULT_BUDGET = 2**26
_PAIR_BLOCK = 1 << 14
_SUBSPACE_BLOCK = 1 << 15


@dataclass
class EnumBudget:
    """Item budget for exhaustive enumerations."""

    max_items: int = DEFAULT_BUDGET
    observed: int = 0

    def charge(self, count: int) -> None:
        self.observed += count
        if self.observed > self.max_items:
            raise BudgetExceeded(
                f"enumeration of {self.observed} items exceeds budget {self.max_items}"
            )


def _budget(budget) -> EnumBudget:
    return budget if budget is not None else EnumBudget()


def _mixed_radix(idx: np.ndarray, q: int, width: int) -> np.ndarray:
    """Base-q digits of each index, most significant digit first."""
    out = np.empty((idx.size, width), dtype=np.int64)
    place = q**width
    for t in range(width):
        place //= q
        out[:, t] = (idx // place) % q
    return out


def _systematic_blocks(field: FieldSpec, n: int, k: int, block: int) -> Iterator[np.ndarray]:
    """All systematic generators [I_k | A] as (B, k, n) tensors, A in
    lexicographic order (first row first)."""
    q = field.q
    width = k * (n - k)
    total = q**width
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        g = np.zeros((idx.size, k, n), dtype=np.int64)
        g[:, np.arange(k), np.arange(k)] = 1
        if width:
            g[:, :, k:] = _mixed_radix(idx, q, width).reshape(idx.size, k, n - k)
        yield g


def _free_positions(pivots: tuple, n: int) -> list:
    pivot_set = set(pivots)
    return [
        (i, c) for i in range(len(pivots)) for c in range(pivots[i] + 1, n) if c not in pivot_set
    ]


def _subspace_blocks(field: FieldSpec, n: int, k: int, block: int, pivot_sets=None) -> Iterator[np.ndarray]:
    """Canonical RREF bases of all k-dim subspaces as (B, k, n) tensors.

    Iterates pivot column sets in lexicographic order, then free entries
    in lexicographic order; restricting pivot_sets enumerates a slice.
    """
    q = field.q
    if pivot_sets is None:
        pivot_sets = itertools.combinations(range(n), k)
    for pivots in pivot_sets:
        positions = _free_positions(tuple(pivots), n)
        base = np.zeros((k, n), dtype=np.int64)
        base[np.arange(k), list(pivots)] = 1
        total = q ** len(positions)
        for start in range(0, total, block):
            idx = np.arange(start, min(start + block, total), dtype=np.int64)
            mats = np.broadcast_to(base, (idx.size, k, n)).copy()
            if positions:
                digits = _mixed_radix(idx, q, len(positions))
                for t, (i, c) in enumerate(positions):
                    mats[:, i, c] = digits[:, t]
            yield mats


def systematic_count(q: int, n: int, k: int) -> int:
    return q ** ((n - k) * k)


def _check_dims(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise BadRange(f"need 1 <= k <= n, got k={k} n={n}")


def enumerate_systematic(field: FieldSpec, n: int, k: int, budget=None) -> Iterator[LinearCode]:
    """Every systematic generator [I_k | A], one code object per matrix."""
    _check_dims(n, k)
    _budget(budget).charge(systematic_count(field.q, n, k))
    for g in _systematic_blocks(field, n, k, _SUBSPACE_BLOCK):
        for mat in g:
            yield code_from_matrix(Mat(field, mat))


def enumerate_subspaces(field: FieldSpec, n: int, k: int, budget=None) -> Iterator[LinearCode]:
    """Every k-dimensional subspace of F_q^n, exactly once."""
    _check_dims(n, k)
    _budget(budget).charge(qbinom(n, k, field.q))
    for block in _subspace_blocks(field, n, k, _SUBSPACE_BLOCK):
        for mat in block:
            m = Mat(field, mat)
            pivots = tuple(int(np.argmax(row != 0)) for row in mat)
            yield LinearCode(field, m, pivots)


def _pair_dim_histogram(field, blocks1_factory, blocks2_factory, k1, k2, n) -> np.ndarray:
    """Histogram of star dimensions over the full cartesian pair space."""
    hist = np.zeros(min(k1 * k2, n) + 1, dtype=object)
    hist[:] = 0
    for g1 in blocks1_factory():
        inner = max(1, _PAIR_BLOCK // max(1, g1.shape[0]))
        for g2 in blocks2_factory():
            for s2 in range(0, g2.shape[0], inner):
                part2 = g2[s2 : s2 + inner]
                prod = pairwise_product_rows(
                    field, g1[:, None, :, :], part2[None, :, :, :]
                ).reshape(g1.shape[0] * part2.shape[0], k1 * k2, n)
                dims = rank_many(field, prod)
                cnt = np.bincount(dims, minlength=hist.size)
                for d, c in enumerate(cnt):
                    if c:
                        hist[d] += int(c)
    return hist


def exact_expected_kernel(p: Params, budget=None) -> Fraction:
    """Exact average kernel size of the bilinear evaluation map over all
    systematic generator pairs: per pair the kernel size is
    q**(k1*k2 - star dimension)."""
    field = field_from_order(p.q)
    n1 = systematic_count(p.q, p.n, p.k1)
    n2 = systematic_count(p.q, p.n, p.k2)
    _budget(budget).charge(n1 * n2)
    hist = _pair_dim_histogram(
        field,
        lambda: _systematic_blocks(field, p.n, p.k1, 64),
        lambda: _systematic_blocks(field, p.n, p.k2, _SUBSPACE_BLOCK),
        p.k1,
        p.k2,
        p.n,
    )
    kk = p.k1 * p.k2
    total = sum(c * p.q ** (kk - d) for d, c in enumerate(hist))
    return Fraction(total, n1 * n2)


def exact_expected_star_dim(p: Params, model: RandomModel, budget=None) -> Fraction:
    """Exact average star dimension over all pairs under the model."""
    field = field_from_order(p.q)
    if model is RandomModel.SYSTEMATIC:
        n1 = systematic_count(p.q, p.n, p.k1)
        n2 = systematic_count(p.q, p.n, p.k2)
        b1 = lambda: _systematic_blocks(field, p.n, p.k1, 64)
        b2 = lambda: _systematic_blocks(field, p.n, p.k2, _SUBSPACE_BLOCK)
    else:
        n1 = qbinom(p.n, p.k1, p.q)
        n2 = qbinom(p.n, p.k2, p.q)
        b1 = lambda: _subspace_blocks(field, p.n, p.k1, 64)
        b2 = lambda: _subspace_blocks(field, p.n, p.k2, _SUBSPACE_BLOCK)
    _budget(budget).charge(n1 * n2)
    hist = _pair_dim_histogram(field, b1, b2, p.k1, p.k2, p.n)
    return Fraction(sum(d * c for d, c in enumerate(hist)), n1 * n2)


def exact_expected_star_dim_fixed(
    c: LinearCode, ell: int, budget=None, threads: int = 1
) -> Fraction:
    """Exact average of dim(C star D) over all ell-dim subspaces D.

    The enumeration is partitioned by pivot column set, so it can run on
    several threads with exact integer partial sums; the result does not
    depend on the partitioning.
    """
    field = c.field
    n = c.n
    total_subspaces = qbinom(n, ell, field.q)
    _budget(budget).charge(total_subspaces)
    basis = c.basis.data

    def work(pivots) -> int:
        acc = 0
        for block in _subspace_blocks(field, n, ell, _SUBSPACE_BLOCK, [pivots]):
            prod = pairwise_product_rows(field, basis[None, :, :], block)
            acc += int(rank_many(field, prod).sum())
        return acc

    pivot_sets = list(itertools.combinations(range(n), ell))
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            dim_sum = sum(ex.map(work, pivot_sets))
    else:
        dim_sum = sum(work(ps) for ps in pivot_sets)
    return Fraction(dim_sum, total_subspaces)


def exact_expected_intersection(p: Params, budget=None) -> Fraction:
    """Exact average of dim(C1 meet C2) over all subspace pairs."""
    field = field_from_order(p.q)
    n1 = qbinom(p.n, p.k1, p.q)
    n2 = qbinom(p.n, p.k2, p.q)
    _budget(budget).charge(n1 * n2)
    total = 0
    for g1 in _subspace_blocks(field, p.n, p.k1, 64):
        inner = max(1, _PAIR_BLOCK // max(1, g1.shape[0]))
        for g2 in _subspace_blocks(field, p.n, p.k2, _SUBSPACE_BLOCK):
            for s2 in range(0, g2.shape[0], inner):
                part2 = g2[s2 : s2 + inner]
                b1, b2 = g1.shape[0], part2.shape[0]
                stacked = np.empty((b1 * b2, p.k1 + p.k2, p.n), dtype=np.int64)
                stacked[:, : p.k1] = np.repeat(g1, b2, axis=0)
                stacked[:, p.k1 :] = np.tile(part2, (b1, 1, 1))
                ranks = rank_many(field, stacked)
                total += int((p.k1 + p.k2 - ranks).sum())
    return Fraction(total, n1 * n2)


@dataclass
class ZeroDiagCounts:
    """Exhaustive zero-diagonal matrix counts.

    by_rank maps rank -> count; by_rank_and_zero_set maps
    (rank, frozenset of all-zero columns among the trailing k2 - k1)
    -> count, with column indices in [k1, k2).
    """

    by_rank: dict = dc_field(default_factory=dict)
    by_rank_and_zero_set: dict = dc_field(default_factory=dict)


def count_zero_diag_oracle(k1: int, k2: int, q: int, budget=None) -> ZeroDiagCounts:
    """Enumerate every k1 x k2 matrix with zero diagonal and bucket by
    rank and by the exact set of zero columns among the last k2 - k1."""
    field = field_from_order(q)
    positions = [(i, j) for i in range(k1) for j in range(k2) if i != j]
    total = q ** len(positions)
    _budget(budget).charge(total)
    w = k2 - k1
    counts = np.zeros((k1 + 1) * (1 << w), dtype=np.int64)
    for start in range(0, total, _SUBSPACE_BLOCK):
        idx = np.arange(start, min(start + _SUBSPACE_BLOCK, total), dtype=np.int64)
        mats = np.zeros((idx.size, k1, k2), dtype=np.int64)
        digits = _mixed_radix(idx, q, len(positions))
        for t, (i, j) in enumerate(positions):
            mats[:, i, j] = digits[:, t]
        ranks = rank_many(field, mats)
        if w:
            zero_cols = (mats[:, :, k1:] == 0).all(axis=1)
            masks = zero_cols @ (1 << np.arange(w, dtype=np.int64))
        else:
            masks = np.zeros(idx.size, dtype=np.int64)
        counts += np.bincount(ranks * (1 << w) + masks, minlength=counts.size)
    out = ZeroDiagCounts()
    for r in range(k1 + 1):
        rank_total = 0
        for mask in range(1 << w):
            c = int(counts[r * (1 << w) + mask])
            rank_total += c
            if c:
                cols = frozenset(k1 + t for t in range(w) if mask >> t & 1)
                out.by_rank_and_zero_set[(r, cols)] = c
        if rank_total:
            out.by_rank[r] = rank_total
    return out


class MonomialCheck(NamedTuple):
    equal: bool
    expectation_original: Fraction
    expectation_image: Fraction


def monomial_invariance_check(
    c: LinearCode, m: Mat, ell: int, budget=None, threads: int = 1
) -> MonomialCheck:
    """Compare the exact fixed-code star expectation of C and of C * M
    for a monomial matrix M; monomially equivalent codes must agree."""
    if m.rows != m.cols or m.rows != c.n or m.field != c.field:
        raise NotMonomial(f"need an {c.n} x {c.n} matrix over {c.field!r}")
    nz = m.data != 0
    if not ((nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all()):
        raise NotMonomial("matrix must have exactly one nonzero entry per row and column")
    image = code_from_matrix(mat_mul(c.basis, m))
    e1 = exact_expected_star_dim_fixed(c, ell, budget, threads)
    e2 = exact_expected_star_dim_fixed(image, ell, budget, threads)
    return MonomialCheck(e1 == e2, e1, e2)

