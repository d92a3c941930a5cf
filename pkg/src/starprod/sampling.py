"""Reproducible Monte Carlo estimation under the two random-code models.

Every sample index owns a fixed slice of a Philox counter stream keyed by
the seed, so sample i draws the same field elements no matter how the
work is chunked or how many threads run.  All aggregation is exact
integer arithmetic (dimension histograms, big-integer kernel sums), which
makes estimates bit-identical across thread counts; floating point enters
only in the final mean/stderr rendering.

Models:

* SYSTEMATIC: generator [I_k | A] with A uniform over F_q^(k x (n-k)).
* UNIFORM_SUBSPACE: the row space of a uniform full-rank k x n matrix,
  obtained by rejection; every subspace has equally many full-rank
  generators, so the result is uniform on the Grassmannian.

Uniformity caveat: raw 64-bit words are reduced mod q, a bias below
q * 2**-64 that no statistic at these sample counts can see.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from fractions import Fraction

import numpy as np

from .codes import LinearCode, code_from_matrix, pairwise_product_rows
from .errors import BadRange, RejectionBudgetExceeded
from .exact import Params, star_dim_lower_bound
from .fields import FieldSpec, field_from_order
from .matrices import Mat, rank_many

_KEY_CONST = 0x5374617250726F64  # stream key tag, distinct from fallback keys
_MASK64 = (1 << 64) - 1
_UNIFORM_ATTEMPTS = 8
_REJECTION_BUDGET = 1000
_CHUNK = 4096

DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 42


class RandomModel(Enum):
    SYSTEMATIC = "systematic"
    UNIFORM_SUBSPACE = "uniform"


def resolve_threads(threads=None) -> int:
    if threads is None:
        env = os.environ.get("STARPROD_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(threads))


# -- counter-based streams ---------------------------------------------------


def _raw_words(seed: int, start_sample: int, count: int, wps: int) -> np.ndarray:
    """Words [start, start+count) x wps of the seed's Philox stream.

    wps (words per sample) must be a multiple of 4 so each sample owns a
    whole number of Philox blocks and slicing is chunk-independent.
    """
    ph = np.random.Philox(key=np.array([seed & _MASK64, _KEY_CONST], dtype=np.uint64))
    ph.advance(start_sample * (wps // 4))
    return ph.random_raw(count * wps).reshape(count, wps)


def _round4(w: int) -> int:
    return max(4, 4 * ((w + 3) // 4))


def _pair_wps(p: Params, model: RandomModel) -> int:
    if model is RandomModel.SYSTEMATIC:
        w = p.k1 * (p.n - p.k1) + p.k2 * (p.n - p.k2)
    else:
        w = _UNIFORM_ATTEMPTS * (p.k1 + p.k2) * p.n
    return _round4(w)


def _systematic_from_words(field, words, n, k, offset):
    b = words.shape[0]
    g = np.zeros((b, k, n), dtype=np.int64)
    g[:, np.arange(k), np.arange(k)] = 1
    a = k * (n - k)
    if a:
        g[:, :, k:] = (words[:, offset : offset + a] % field.q).astype(np.int64).reshape(b, k, n - k)
    return g, offset + a


def _fallback_fullrank(field, n, k, seed, sample_key) -> np.ndarray:
    """Per-sample continuation stream for the rare case where the
    reserved attempt slots of the main stream were all rank deficient."""
    ph = np.random.Philox(key=np.array([seed & _MASK64, sample_key & _MASK64], dtype=np.uint64))
    for _ in range(_REJECTION_BUDGET):
        m = (ph.random_raw(_round4(k * n))[: k * n] % field.q).astype(np.int64).reshape(1, k, n)
        if rank_many(field, m)[0] == k:
            return m[0]
    raise RejectionBudgetExceeded(
        f"no full-rank {k} x {n} matrix over GF({field.q}) in {_REJECTION_BUDGET} attempts"
    )


def _uniform_from_words(field, words, n, k, offset, seed, first_index, slot):
    """Uniform full-rank matrices by rejection over reserved word slots."""
    b = words.shape[0]
    a = k * n
    out = np.empty((b, k, n), dtype=np.int64)
    need = np.ones(b, dtype=bool)
    for t in range(_UNIFORM_ATTEMPTS):
        idx = np.nonzero(need)[0]
        if idx.size == 0:
            break
        lo = offset + t * a
        cand = (words[idx, lo : lo + a] % field.q).astype(np.int64).reshape(idx.size, k, n)
        ok = rank_many(field, cand) == k
        out[idx[ok]] = cand[ok]
        need[idx[ok]] = False
    for j in np.nonzero(need)[0]:
        out[j] = _fallback_fullrank(field, n, k, seed, ((first_index + int(j)) << 1) | slot)
    return out, offset + _UNIFORM_ATTEMPTS * a


def _pair_generators(field, p: Params, model: RandomModel, seed, start, count):
    words = _raw_words(seed, start, count, _pair_wps(p, model))
    if model is RandomModel.SYSTEMATIC:
        g1, off = _systematic_from_words(field, words, p.n, p.k1, 0)
        g2, _ = _systematic_from_words(field, words, p.n, p.k2, off)
    else:
        g1, off = _uniform_from_words(field, words, p.n, p.k1, 0, seed, start, 0)
        g2, _ = _uniform_from_words(field, words, p.n, p.k2, off, seed, start, 1)
    return g1, g2


def sample_code(
    field: FieldSpec,
    n: int,
    k: int,
    model: RandomModel = RandomModel.SYSTEMATIC,
    seed: int = DEFAULT_SEED,
    index: int = 0,
) -> LinearCode:
    """Draw the code with the given sample index from the seed's stream.

    Deterministic: the same (field, n, k, model, seed, index) always
    yields the same code.
    """
    if not 1 <= k <= n:
        raise BadRange(f"need 1 <= k <= n, got k={k} n={n}")
    if model is RandomModel.SYSTEMATIC:
        wps = _round4(k * (n - k))
        words = _raw_words(seed, index, 1, wps)
        g, _ = _systematic_from_words(field, words, n, k, 0)
    else:
        wps = _round4(_UNIFORM_ATTEMPTS * k * n)
        words = _raw_words(seed, index, 1, wps)
        g, _ = _uniform_from_words(field, words, n, k, 0, seed, index, 0)
    return code_from_matrix(Mat(field, g[0]))


# -- estimates ---------------------------------------------------------------


@dataclass(frozen=True)
class Estimate:
    """An exactly aggregated Monte Carlo estimate of an integer statistic."""

    params: Params
    model: RandomModel
    samples: int
    seed: int
    total: int  # exact sum of the integer-valued samples
    stderr: float

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.samples)

    @property
    def mean_f64(self) -> float:
        return self.total / self.samples

    def to_json(self) -> dict:
        return {
            "q": self.params.q,
            "n": self.params.n,
            "k1": self.params.k1,
            "k2": self.params.k2,
            "model": self.model.value,
            "samples": self.samples,
            "seed": self.seed,
            "sum": str(self.total),
            "mean_num": str(self.mean.numerator),
            "mean_den": str(self.mean.denominator),
            "mean_f64": self.mean_f64,
            "stderr": self.stderr,
        }

    @staticmethod
    def from_json(obj: dict) -> "Estimate":
        return Estimate(
            params=Params(q=obj["q"], n=obj["n"], k1=obj["k1"], k2=obj["k2"]),
            model=RandomModel(obj["model"]),
            samples=obj["samples"],
            seed=obj["seed"],
            total=int(obj["sum"]),
            stderr=obj["stderr"],
        )


def _stderr_from_sums(total: int, total_sq: int, n: int) -> float:
    if n < 2:
        return 0.0
    num = n * total_sq - total * total
    if num < 0:
        num = 0  # guard against exact-zero variance rounding
    try:
        return math.sqrt(float(Fraction(num, n * n * (n - 1))))
    except OverflowError:
        return math.inf


def _run_chunks(samples: int, threads: int, work):
    """Map work(start, count) over fixed chunks and merge by summation."""
    starts = [(s, min(_CHUNK, samples - s)) for s in range(0, samples, _CHUNK)]
    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(lambda sc: work(*sc), starts))
    else:
        parts = [work(*sc) for sc in starts]
    out = parts[0]
    for part in parts[1:]:
        out = [a + b for a, b in zip(out, part)]
    return out


def _star_dim_histogram(p: Params, model, samples, seed, threads) -> list:
    """Exact histogram of star dimensions over the sample range."""
    field = field_from_order(p.q)
    size = min(p.k1 * p.k2, p.n) + 1

    def work(start, count):
        g1, g2 = _pair_generators(field, p, model, seed, start, count)
        dims = rank_many(field, pairwise_product_rows(field, g1, g2))
        return [int(c) for c in np.bincount(dims, minlength=size)]

    return _run_chunks(samples, threads, work)


def _check_samples(samples: int) -> None:
    if samples < 1:
        raise BadRange(f"need samples >= 1, got {samples}")


def mc_star_dim(
    p: Params,
    model: RandomModel = RandomModel.SYSTEMATIC,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    threads=None,
) -> Estimate:
    """Monte Carlo estimate of the expected star-product dimension."""
    _check_samples(samples)
    hist = _star_dim_histogram(p, model, samples, seed, resolve_threads(threads))
    total = sum(d * c for d, c in enumerate(hist))
    total_sq = sum(d * d * c for d, c in enumerate(hist))
    return Estimate(p, model, samples, seed, total, _stderr_from_sums(total, total_sq, samples))


def mc_kernel_size(
    p: Params,
    model: RandomModel = RandomModel.SYSTEMATIC,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    threads=None,
) -> Estimate:
    """Monte Carlo estimate of the expected kernel size of the bilinear
    evaluation map; per pair the kernel size is the exact integer
    q**(k1*k2 - star dimension)."""
    _check_samples(samples)
    hist = _star_dim_histogram(p, model, samples, seed, resolve_threads(threads))
    kk = p.k1 * p.k2
    total = sum(c * p.q ** (kk - d) for d, c in enumerate(hist))
    total_sq = sum(c * p.q ** (2 * (kk - d)) for d, c in enumerate(hist))
    return Estimate(p, model, samples, seed, total, _stderr_from_sums(total, total_sq, samples))


def mc_full_dim_frequency(
    p: Params,
    model: RandomModel = RandomModel.SYSTEMATIC,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    threads=None,
) -> Estimate:
    """Fraction of sampled pairs whose star product has the maximal
    dimension min(k1*k2, n); samples are 0/1."""
    _check_samples(samples)
    hist = _star_dim_histogram(p, model, samples, seed, resolve_threads(threads))
    hits = hist[min(p.k1 * p.k2, p.n)]
    return Estimate(p, model, samples, seed, hits, _stderr_from_sums(hits, hits, samples))


def mc_intersection_dim(
    p: Params,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    threads=None,
) -> Estimate:
    """Monte Carlo estimate of the expected intersection dimension of two
    uniform random subspaces (the uniform model is part of the contract)."""
    _check_samples(samples)
    field = field_from_order(p.q)
    model = RandomModel.UNIFORM_SUBSPACE

    def work(start, count):
        g1, g2 = _pair_generators(field, p, model, seed, start, count)
        stacked = np.concatenate([g1, g2], axis=1)
        dims = p.k1 + p.k2 - rank_many(field, stacked)
        return [int(c) for c in np.bincount(dims, minlength=p.k1 + 1)]

    hist = _run_chunks(samples, resolve_threads(threads), work)
    total = sum(d * c for d, c in enumerate(hist))
    total_sq = sum(d * d * c for d, c in enumerate(hist))
    return Estimate(p, model, samples, seed, total, _stderr_from_sums(total, total_sq, samples))


# -- benchmark table ---------------------------------------------------------

TABLE1_GRID = [
    (n, k1, k2, q)
    for (n, k1, k2) in [
        (7, 2, 3),
        (7, 3, 3),
        (7, 3, 4),
        (11, 2, 3),
        (11, 3, 3),
        (11, 3, 4),
        (15, 2, 3),
        (15, 3, 3),
        (15, 3, 4),
    ]
    for q in (2, 3, 5, 7)
]

TABLE1_CSV_HEADER = "n,k1,k2,q,mc_mean,bound,ratio"


@dataclass(frozen=True)
class TableRow:
    """One benchmark row: Monte Carlo mean against the Jensen bound."""

    estimate: Estimate
    bound: float

    @property
    def ratio(self) -> float:
        return self.estimate.mean_f64 / self.bound

    def to_json(self) -> dict:
        obj = self.estimate.to_json()
        obj["bound"] = self.bound
        obj["ratio"] = self.ratio
        return obj

    def to_csv(self) -> str:
        p = self.estimate.params
        return (
            f"{p.n},{p.k1},{p.k2},{p.q},"
            f"{self.estimate.mean_f64:#.5g},{self.bound:#.5g},{self.ratio:.5f}"
        )


def reproduce_table1(
    samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, threads=None
) -> list:
    """The 36-row (n, k1, k2, q) benchmark grid, in canonical row order,
    under the systematic model with the given per-row sample count."""
    rows = []
    for n, k1, k2, q in TABLE1_GRID:
        p = Params(q=q, n=n, k1=k1, k2=k2)
        est = mc_star_dim(p, RandomModel.SYSTEMATIC, samples, seed, threads)
        rows.append(TableRow(est, star_dim_lower_bound(p).bound))
    return rows

