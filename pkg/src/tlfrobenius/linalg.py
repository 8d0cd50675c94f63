"""Dense exact linear algebra over a field of CycNum scalars.

Matrices are lists of rows.  Only what the rest of the package needs:
row reduction, rank, solving, inverses and kernels.
"""
from __future__ import annotations

from typing import Sequence

from .scalars import CycNum, CyclotomicField


def _copy(M):
    return [list(r) for r in M]


def rref(M: Sequence[Sequence[CycNum]], F: CyclotomicField):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    A = _copy(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        sel = None
        for i in range(r, rows):
            if not A[i][c].is_zero():
                sel = i
                break
        if sel is None:
            continue
        A[r], A[sel] = A[sel], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, F: CyclotomicField) -> int:
    if not M or not M[0]:
        return 0
    return len(rref(M, F)[1])


def independent_rows_cols(M, F: CyclotomicField):
    """Row and column index sets of a maximal invertible submatrix."""
    if not M or not M[0]:
        return [], []
    _, cols = rref(M, F)
    # rows: pivots of the transpose restricted to the chosen columns
    sub_t = [[M[i][j] for i in range(len(M))] for j in cols]
    _, rows = rref(sub_t, F)
    return rows, cols


def solve(A, b, F: CyclotomicField):
    """One solution x of A x = b, or None if inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    if not aug:
        return [F.zero()] * n
    R, piv = rref(aug, F)
    if n in piv:
        return None
    x = [F.zero()] * n
    for r, c in enumerate(piv):
        x[c] = R[r][n]
    return x


def inverse(M, F: CyclotomicField):
    n = len(M)
    aug = [list(row) + [F.one() if i == j else F.zero() for j in range(n)] for i, row in enumerate(M)]
    R, piv = rref(aug, F)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def kernel(M, F: CyclotomicField, ncols: int | None = None):
    """Basis of {x : M x = 0}."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [[F.one() if i == j else F.zero() for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(M, F)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for fc in free:
        x = [F.zero()] * ncols
        x[fc] = F.one()
        for r, c in enumerate(piv):
            x[c] = -R[r][fc]
        out.append(x)
    return out


def matmul(A, B, F: CyclotomicField):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = F.zero()
            for l in range(inner):
                a = row[l]
                if not a.is_zero():
                    b = B[l][j]
                    if not b.is_zero():
                        acc = acc + a * b
            new.append(acc)
        out.append(new)
    return out


def identity_matrix(n: int, F: CyclotomicField):
    return [[F.one() if i == j else F.zero() for j in range(n)] for i in range(n)]


def zeros(r: int, c: int, F: CyclotomicField):
    return [[F.zero() for _ in range(c)] for _ in range(r)]
