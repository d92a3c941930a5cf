from fractions import Fraction

import numpy as np
import pytest

from starprod import (
    EnumBudget,
    Mat,
    Params,
    RandomModel,
    code_from_matrix,
    count_zero_diag_oracle,
    count_zero_diag_rank,
    count_zero_diag_rank_zerocols,
    enumerate_subspaces,
    enumerate_systematic,
    exact_expected_intersection,
    exact_expected_kernel,
    exact_expected_star_dim,
    exact_expected_star_dim_fixed,
    expected_intersection_dim,
    expected_kernel_size,
    field_make,
    monomial_invariance_check,
    qbinom,
    star_dim_lower_bound,
    star_product,
)
from starprod.catalog import mds63_gf7_codes
from starprod.errors import BudgetExceeded, NotMonomial, ZeroCode


def test_enum_budget():
    b = EnumBudget(max_items=10)
    b.charge(6)
    with pytest.raises(BudgetExceeded):
        b.charge(5)


def test_enumerate_systematic_examples():
    f2, f3 = field_make(2), field_make(3)
    items = list(enumerate_systematic(f2, 2, 1))
    assert [c.basis.data.tolist() for c in items] == [[[1, 0]], [[1, 1]]]
    assert len(list(enumerate_systematic(f2, 3, 2))) == 4
    assert len(list(enumerate_systematic(f3, 3, 1))) == 9
    assert all(c.systematic is not None for c in items)
    with pytest.raises(BudgetExceeded):
        list(enumerate_systematic(f2, 40, 20))


def test_enumerate_subspaces_examples():
    f2 = field_make(2)
    lines = list(enumerate_subspaces(f2, 2, 1))
    assert len(lines) == 3
    planes = list(enumerate_subspaces(f2, 4, 2))
    assert len(planes) == qbinom(4, 2, 2) == 35
    assert len(set(planes)) == 35  # canonical forms, each exactly once
    with pytest.raises(BudgetExceeded):
        list(enumerate_subspaces(f2, 60, 30))


def test_enumerate_subspaces_matches_qbinom():
    for q, n, k in [(2, 5, 2), (3, 4, 2), (2, 5, 3), (5, 3, 2)]:
        f = field_make(q)
        assert sum(1 for _ in enumerate_subspaces(f, n, k)) == qbinom(n, k, q)


def test_exact_expected_kernel_tiny():
    assert exact_expected_kernel(Params(2, 2, 1, 1)) == 1


def test_kernel_formula_equals_oracle_small_grid():
    for q in (2, 3):
        for n in range(1, 5):
            for k1 in range(1, min(n, 3) + 1):
                for k2 in range(k1, min(n, 3) + 1):
                    p = Params(q, n, k1, k2)
                    assert expected_kernel_size(p) == exact_expected_kernel(p), (q, n, k1, k2)


def test_exact_expected_star_dim():
    assert exact_expected_star_dim(Params(2, 2, 1, 1), RandomModel.SYSTEMATIC) == 1
    assert exact_expected_star_dim(Params(2, 3, 3, 3), RandomModel.SYSTEMATIC) == 3
    assert exact_expected_star_dim(Params(3, 3, 3, 3), RandomModel.UNIFORM_SUBSPACE) == 3
    p = Params(2, 3, 2, 2)
    val = exact_expected_star_dim(p, RandomModel.SYSTEMATIC)
    assert float(val) >= star_dim_lower_bound(p).bound - 1e-12  # Jensen direction


def test_exact_star_dim_uniform_vs_direct():
    # cross-check the batched enumeration against per-pair star products
    f2 = field_make(2)
    p = Params(2, 3, 1, 2)
    total = 0
    lines = list(enumerate_subspaces(f2, 3, 1))
    planes = list(enumerate_subspaces(f2, 3, 2))
    for c1 in lines:
        for c2 in planes:
            try:
                total += star_product(c1, c2).k
            except ZeroCode:
                pass
    want = Fraction(total, len(lines) * len(planes))
    assert exact_expected_star_dim(p, RandomModel.UNIFORM_SUBSPACE) == want


def test_exact_expected_star_dim_fixed_direct():
    f2 = field_make(2)
    parity = code_from_matrix(Mat(f2, [[1, 0, 1], [0, 1, 1]]))
    total = 0
    for d in enumerate_subspaces(f2, 3, 1):
        try:
            total += star_product(parity, d).k
        except ZeroCode:
            pass
    assert exact_expected_star_dim_fixed(parity, 1) == Fraction(total, 7)


def test_exact_expected_star_dim_fixed_thread_invariance():
    c1, _ = mds63_gf7_codes()
    assert exact_expected_star_dim_fixed(c1, 1, threads=1) == exact_expected_star_dim_fixed(
        c1, 1, threads=3
    )


def test_exact_expected_intersection():
    assert exact_expected_intersection(Params(2, 2, 1, 1)) == Fraction(1, 3)
    assert exact_expected_intersection(Params(2, 3, 1, 2)) == Fraction(3, 7)
    assert exact_expected_intersection(Params(3, 3, 2, 3)) == 2
    for q, n in [(2, 3), (2, 4)]:
        for k1 in range(1, n + 1):
            for k2 in range(k1, n + 1):
                p = Params(q, n, k1, k2)
                assert exact_expected_intersection(p) == expected_intersection_dim(p)


def test_count_zero_diag_oracle_examples():
    counts = count_zero_diag_oracle(2, 2, 2)
    assert counts.by_rank == {0: 1, 1: 2, 2: 1}
    assert count_zero_diag_oracle(1, 1, 5).by_rank == {0: 1}
    c23 = count_zero_diag_oracle(2, 3, 2)
    assert sum(c23.by_rank.values()) == 2 ** (6 - 2)


def test_count_zero_diag_oracle_matches_formulas():
    for q in (2, 3):
        for k1 in range(1, 4):
            for k2 in range(k1, 5):
                counts = count_zero_diag_oracle(k1, k2, q)
                for r in range(k1 + 1):
                    assert counts.by_rank.get(r, 0) == count_zero_diag_rank(k1, k2, r, q)
                # every individual zero-column set matches the shared count
                for (r, cols), c in counts.by_rank_and_zero_set.items():
                    assert c == count_zero_diag_rank_zerocols(k1, k2, r, len(cols), q)


def test_monomial_invariance():
    f2 = field_make(2)
    parity = code_from_matrix(Mat(f2, [[1, 0, 1], [0, 1, 1]]))
    swap = Mat(f2, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    res = monomial_invariance_check(parity, swap, 1)
    assert res.equal and res.expectation_original == res.expectation_image
    eye = Mat(f2, np.eye(3, dtype=np.int64))
    assert monomial_invariance_check(parity, eye, 2).equal
    with pytest.raises(NotMonomial):
        monomial_invariance_check(parity, Mat(f2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]), 1)


def test_monomial_invariance_gf7():
    c1, _ = mds63_gf7_codes()
    f7 = field_make(7)
    rng = np.random.default_rng(10)
    perm = rng.permutation(6)
    m = np.zeros((6, 6), dtype=np.int64)
    for i, j in enumerate(perm):
        m[i, j] = rng.integers(1, 7)
    res = monomial_invariance_check(c1, Mat(f7, m), 1)
    assert res.equal


def test_dual_distance_bound_holds_on_enumerated_pairs():
    # every non-degenerate systematic pair satisfies the dual-distance bound
    from starprod.codes import dual, is_degenerate, min_distance

    f2 = field_make(2)
    pairs = 0
    for c1 in enumerate_systematic(f2, 4, 2):
        if is_degenerate(c1):
            continue
        d1 = min_distance(dual(c1))
        for c2 in enumerate_systematic(f2, 4, 2):
            if is_degenerate(c2):
                continue
            d2 = min_distance(dual(c2))
            bound = min(4, c1.k + d2 - 2, c2.k + d1 - 2)
            assert star_product(c1, c2).k >= bound
            pairs += 1
    assert pairs > 0


def test_jensen_bound_below_exact_star_dim_grid():
    # the bound that the kernel expectation yields never exceeds the
    # exact mean star dimension, at any enumerable parameter point
    for q in (2, 3):
        for n in range(1, 5):
            for k1 in range(1, min(n, 3) + 1):
                for k2 in range(k1, min(n, 3) + 1):
                    p = Params(q, n, k1, k2)
                    bound = star_dim_lower_bound(p).bound
                    exact = exact_expected_star_dim(p, RandomModel.SYSTEMATIC)
                    assert bound <= float(exact) + 1e-12, (q, n, k1, k2)


def test_enumerators_validate_dimensions():
    f2 = field_make(2)
    from starprod.errors import BadRange

    with pytest.raises(BadRange):
        next(enumerate_systematic(f2, 3, 0))
    with pytest.raises(BadRange):
        next(enumerate_subspaces(f2, 3, 4))
