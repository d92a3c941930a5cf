"""Small built-in code constructors used by demos, tests, and the CLI."""

from __future__ import annotations

import numpy as np

from .codes import LinearCode, code_from_matrix
from .fields import FieldSpec, field_make
from .matrices import Mat, identity


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return code_from_matrix(identity(field, n))


def repetition_code(field: FieldSpec, n: int) -> LinearCode:
    return code_from_matrix(Mat(field, np.ones((1, n), dtype=np.int64)))


def single_coordinate_code(field: FieldSpec, n: int, i: int) -> LinearCode:
    row = np.zeros((1, n), dtype=np.int64)
    row[0, i] = 1
    return code_from_matrix(Mat(field, row))


def hamming_7_4() -> LinearCode:
    """The binary [7, 4, 3] Hamming code."""
    f2 = field_make(2)
    g = [
        [1, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1],
    ]
    return code_from_matrix(Mat(f2, g))


def evaluation_code(field: FieldSpec, k: int, points=None) -> LinearCode:
    """Polynomial evaluation (generalised Reed-Solomon style) code.

    Row j evaluates x**j at the given points; defaults to all field
    elements, giving an [q, k] MDS code for k <= q.
    """
    if points is None:
        points = list(range(field.q))
    pts = np.array(points, dtype=np.int64)
    rows = np.empty((k, len(pts)), dtype=np.int64)
    rows[0] = 1
    for j in range(1, k):
        rows[j] = field.mul(rows[j - 1], pts)
    return code_from_matrix(Mat(field, rows))


def mds63_gf7_codes() -> tuple:
    """A pair of monomially inequivalent MDS [6, 3] codes over GF(7).

    Starred against a uniformly random 2-dimensional code they have
    different expected star dimensions, so the expectation is not a
    function of the code parameters alone.
    """
    f7 = field_make(7)
    g_a = [
        [1, 0, 0, 4, 5, 2],
        [0, 1, 0, 6, 1, 1],
        [0, 0, 1, 5, 6, 5],
    ]
    g_b = [
        [1, 0, 0, 1, 1, 6],
        [0, 1, 0, 4, 1, 4],
        [0, 0, 1, 6, 2, 4],
    ]
    return code_from_matrix(Mat(f7, g_a)), code_from_matrix(Mat(f7, g_b))
