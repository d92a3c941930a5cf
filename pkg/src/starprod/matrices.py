"""Dense matrices over a finite field: RREF, rank, kernels, text I/O.

A Mat wraps a read-only int64 numpy array of integer-encoded field
elements.  All operations are pure and return fresh matrices.  Pivoting
always picks the first nonzero entry scanning top to bottom, so the RREF
(and everything built on it) is canonical.

rank_many() is the batched workhorse used by the Monte Carlo and
enumeration code: it eliminates a whole (batch, rows, cols) tensor at
once, which is one to two orders of magnitude faster than per-matrix
calls at the sizes this package cares about.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatch, TooLarge
from .fields import FieldSpec, field_from_order

MAX_SIDE = 4096


class Mat:
    """An immutable rows x cols matrix over a FieldSpec."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        if max(arr.shape, default=0) > MAX_SIDE:
            raise TooLarge(f"matrix side {max(arr.shape)} exceeds limit {MAX_SIDE}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries must lie in [0, {field.q})")
        arr.flags.writeable = False
        self.field = field
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def transpose(self) -> "Mat":
        return Mat(self.field, self.data.T)

    def __getitem__(self, idx) -> int:
        return int(self.data[idx])

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.shape == other.shape
            and (self.data == other.data).all()
        )

    def __hash__(self):
        return hash((self.field.q, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"Mat({self.field!r}, shape={self.shape})"


def zeros(field: FieldSpec, rows: int, cols: int) -> Mat:
    return Mat(field, np.zeros((rows, cols), dtype=np.int64))


def identity(field: FieldSpec, n: int) -> Mat:
    return Mat(field, np.eye(n, dtype=np.int64))


def from_rows(field: FieldSpec, rows: Iterable[Sequence[int]]) -> Mat:
    return Mat(field, np.array(list(rows), dtype=np.int64))


def stack(a: Mat, b: Mat) -> Mat:
    if a.field != b.field:
        raise FieldMismatch("cannot stack matrices over different fields")
    if a.cols != b.cols:
        raise ValueError("cannot stack matrices with different column counts")
    return Mat(a.field, np.vstack([a.data, b.data]))


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Matrix product over the common field."""
    if a.field != b.field:
        raise FieldMismatch("cannot multiply matrices over different fields")
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    f = a.field
    if f.m == 1:
        # entries < 2**16 and inner dim <= 4096 keep int64 sums exact
        return Mat(f, (a.data @ b.data) % f.q)
    out = np.zeros((a.rows, b.cols), dtype=np.int64)
    for k in range(a.cols):
        out = f.add(out, f.mul(a.data[:, k : k + 1], b.data[k : k + 1, :]))
    return Mat(f, out)


def rref(m: Mat) -> tuple:
    """Reduced row echelon form and its pivot columns.

    Returns (R, pivots) where R is the unique RREF of m and pivots is a
    strictly increasing tuple of column indices; rank = len(pivots).
    """
    f = m.field
    a = m.data.copy()
    nr, nc = a.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = f.mul(a[r], int(f.inv(piv)))
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            fac = a[others, c]
            a[others] = f.sub(a[others], f.mul(fac[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return Mat(f, a), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def right_kernel_basis(m: Mat) -> Mat:
    """A basis (as rows) of {x : m @ x.T = 0}, one row per free column."""
    f = m.field
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    out = np.zeros((len(free), m.cols), dtype=np.int64)
    for i, fc in enumerate(free):
        out[i, fc] = 1
        for j, pc in enumerate(pivots):
            out[i, pc] = f.neg(int(red.data[j, fc]))
    return Mat(f, out)


def rank_many(field: FieldSpec, mats: np.ndarray) -> np.ndarray:
    """Ranks of a (batch, rows, cols) int64 tensor of encoded entries.

    Forward elimination vectorised across the batch: every iteration
    handles one column for all matrices simultaneously.  The input is not
    modified.
    """
    m = np.ascontiguousarray(mats).copy()
    if m.ndim != 3:
        raise ValueError("rank_many expects a (batch, rows, cols) tensor")
    B, R, C = m.shape
    if B == 0 or R == 0 or C == 0:
        return np.zeros(B, dtype=np.int64)
    prime = field.m == 1
    q = field.q
    r = np.zeros(B, dtype=np.int64)
    rows = np.arange(R)
    bidx = np.arange(B)
    for c in range(C):
        cand = (m[:, :, c] != 0) & (rows[None, :] >= r[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.where(has, np.argmax(cand, axis=1), 0)
        b = bidx[has & (piv != r)]
        if b.size:
            rb, pb = r[b], piv[b]
            tmp = m[b, rb].copy()
            m[b, rb] = m[b, pb]
            m[b, pb] = tmp
        bh = bidx[has]
        rh = r[bh]
        prow = m[bh, rh]
        if prime:
            prow = (prow * field._inv[prow[:, c]][:, None]) % q
        else:
            prow = field.mul(prow, field.inv(prow[:, c])[:, None])
        m[bh, rh] = prow
        # eliminate strictly below the pivot row, whole batch at once
        prow_f = np.zeros((B, C - c), dtype=np.int64)
        prow_f[bh] = prow[:, c:]
        fcol = m[:, :, c] * ((rows[None, :] > r[:, None]) & has[:, None])
        sub = m[:, :, c:]
        if prime:
            sub -= fcol[:, :, None] * prow_f[:, None, :]
            sub %= q
        else:
            sub[...] = field.sub(sub, field.mul(fcol[:, :, None], prow_f[:, None, :]))
        r += has
        if (r == R).all():
            break
    return r


# -- text format ------------------------------------------------------------
#
# Line 1: "q rows cols"; then `rows` lines of `cols` whitespace-separated
# integers in [0, q) using the element encoding.  Blank lines and lines
# starting with '#' are ignored.


def format_matrix(m: Mat) -> str:
    lines = [f"{m.field.q} {m.rows} {m.cols}"]
    for row in m.data:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Mat:
    data_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data_lines.append(stripped)
    if not data_lines:
        raise ValueError("empty matrix file")
    header = data_lines[0].split()
    if len(header) != 3:
        raise ValueError(f"bad header {data_lines[0]!r}, expected 'q rows cols'")
    q, nrows, ncols = (int(tok) for tok in header)
    field = field_from_order(q)
    if len(data_lines) - 1 != nrows:
        raise ValueError(f"expected {nrows} rows, found {len(data_lines) - 1}")
    grid = []
    for line in data_lines[1:]:
        row = [int(tok) for tok in line.split()]
        if len(row) != ncols:
            raise ValueError(f"expected {ncols} columns, found {len(row)}")
        grid.append(row)
    arr = np.array(grid, dtype=np.int64).reshape(nrows, ncols)
    return Mat(field, arr)


def save_matrix(m: Mat, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(m))


def load_matrix(path) -> Mat:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())
