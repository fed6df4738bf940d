"""Gaussian elimination over a FieldSpec.

Matrices are lists of rows of integer encodings.  Small systems are
reduced with scalar loops; larger ones switch to whole-row numpy updates.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .finite_field import FieldSpec

Matrix = list[list[int]]

_NUMPY_CUTOFF = 64  # entries


def _echelon_py(field: FieldSpec, a: Matrix) -> tuple[Matrix, list[int]]:
    _, sub, mul = field.ops()
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][col])
        a[r] = [mul(inv, v) for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                c = a[i][col]
                a[i] = [sub(x, mul(c, y)) for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a, pivots


def _echelon_np(field: FieldSpec, rows: Matrix) -> tuple[Matrix, list[int]]:
    a = np.array(rows, dtype=np.int64)
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = field.mul_array(a[r], field.inv(int(a[r, col])))
        factors = a[:, col].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            a[hit] = field.sub_array(a[hit], field.mul_array(factors[hit, None], a[r][None, :]))
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a.tolist(), pivots


def row_echelon(field: FieldSpec, rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns; input is not modified."""
    if not rows:
        return [], []
    if len(rows) * len(rows[0]) <= _NUMPY_CUTOFF:
        return _echelon_py(field, [list(r) for r in rows])
    return _echelon_np(field, rows)


def rank(field: FieldSpec, rows: Matrix) -> int:
    return len(row_echelon(field, rows)[1])


def nullspace(field: FieldSpec, rows: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of ``{x : rows * x^T = 0}``, i.e. the dual of the row space."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_echelon(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(red[i][f])
        basis.append(v)
    return basis


def det(field: FieldSpec, m: Matrix) -> int:
    n = len(m)
    if n * n > _NUMPY_CUTOFF:
        return _det_np(field, m)
    a = [list(r) for r in m]
    result = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = field.neg(result)
        pv = a[col][col]
        result = field.mul(result, pv)
        inv = field.inv(pv)
        for i in range(col + 1, n):
            if a[i][col]:
                c = field.mul(a[i][col], inv)
                a[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(a[i], a[col])]
    return result


def _det_np(field: FieldSpec, m: Matrix) -> int:
    a = np.array(m, dtype=np.int64)
    n = a.shape[0]
    result = 1
    for col in range(n):
        nz = np.flatnonzero(a[col:, col])
        if nz.size == 0:
            return 0
        pivot = col + int(nz[0])
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            result = field.neg(result)
        pv = int(a[col, col])
        result = field.mul(result, pv)
        below = a[col + 1:, col]
        hit = np.flatnonzero(below) + col + 1
        if hit.size:
            c = field.mul_array(a[hit, col], field.inv(pv))
            a[hit] = field.sub_array(a[hit], field.mul_array(c[:, None], a[col][None, :]))
    return result


def solve(field: FieldSpec, m: Matrix, b: list[int]) -> list[int]:
    """Solve the square system ``m x = b``; singular systems raise DomainError."""
    n = len(m)
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = row_echelon(field, aug)
    if pivots != list(range(n)):
        raise DomainError("singular system")
    return [red[i][n] for i in range(n)]


def dot(field: FieldSpec, u, v) -> int:
    add, _, mul = field.ops()
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = add(acc, mul(x, y))
    return acc


def matmul(field: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    if len(a) * len(b) <= _NUMPY_CUTOFF:
        cols = list(zip(*b))
        return [[dot(field, row, col) for col in cols] for row in a]
    bt = np.array(b, dtype=np.int64).T.copy()
    return [field.matvec(bt, np.array(row, dtype=np.int64)).tolist() for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(c) for c in zip(*a)]
