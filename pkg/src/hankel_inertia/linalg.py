"""Exact Hermitian inertia by congruence (Sylvester's law), no eigenvalues."""
from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, NonHermitian
from .scalars import I, ONE, ComplexScalar, as_scalar


def exact_matrix(rows: Sequence[Sequence]) -> list[list[ComplexScalar]]:
    m = [[as_scalar(x) for x in row] for row in rows]
    if any(len(row) != len(m) for row in m):
        raise DimensionMismatch("matrix must be square")
    return m


def is_hermitian(m: Sequence[Sequence[ComplexScalar]]) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i].conjugate() for i in range(n) for j in range(i, n))


def exact_inertia(rows: Sequence[Sequence]) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a Hermitian matrix over Q(i).

    Symmetric Gaussian elimination with 1x1 pivots. When every remaining
    diagonal entry is zero but some off-diagonal a_ij is not, the congruence
    row_i += c row_j, col_i += conj(c) col_j with c in {1, i} creates the
    nonzero pivot 2 Re(c a_ji).
    """
    a = exact_matrix(rows)
    if not is_hermitian(a):
        raise NonHermitian("exact inertia needs a Hermitian matrix")
    active = list(range(len(a)))
    pos = neg = 0
    while active:
        k = next((i for i in active if not a[i][i].is_zero()), None)
        if k is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and not a[i][j].is_zero()),
                None,
            )
            if pair is None:
                break
            i, j = pair
            c = ONE if a[j][i].re != 0 else I
            cc = c.conjugate()
            for col in active:
                a[i][col] = a[i][col] + c * a[j][col]
            for row in active:
                a[row][i] = a[row][i] + cc * a[row][j]
            k = i
        d = a[k][k]
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        inv = d.inverse()
        pivot_row = a[k]
        col = [(i, a[i][k]) for i in active if not a[i][k].is_zero()]
        for i, aik in col:
            factor = aik * inv
            row_i = a[i]
            for j in active:
                akj = pivot_row[j]
                if not akj.is_zero():
                    row_i[j] = row_i[j] - factor * akj
    return pos, neg, len(a) - pos - neg


def exact_ldl(rows: Sequence[Sequence]) -> tuple[list[list[ComplexScalar]], list[ComplexScalar]]:
    """G = L D L^* for a Hermitian positive definite G, without pivoting."""
    g = exact_matrix(rows)
    n = len(g)
    L = [[ONE if i == j else ComplexScalar() for j in range(n)] for i in range(n)]
    D: list[ComplexScalar] = []
    for j in range(n):
        d = g[j][j]
        for k in range(j):
            if not L[j][k].is_zero():
                d = d - L[j][k] * D[k] * L[j][k].conjugate()
        if d.re <= 0:
            raise NonHermitian("matrix is not positive definite")
        D.append(d)
        inv = d.inverse()
        for i in range(j + 1, n):
            acc = g[i][j]
            for k in range(j):
                if not L[i][k].is_zero() and not L[j][k].is_zero():
                    acc = acc - L[i][k] * D[k] * L[j][k].conjugate()
            L[i][j] = acc * inv
    return L, D


def exact_product(a, b) -> list[list[ComplexScalar]]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[ComplexScalar() for _ in range(p)] for _ in range(n)]
    for i in range(n):
        for k in range(m):
            aik = a[i][k]
            if aik.is_zero():
                continue
            row = b[k]
            for j in range(p):
                if not row[j].is_zero():
                    out[i][j] = out[i][j] + aik * row[j]
    return out


def conjugate_transpose(a) -> list[list[ComplexScalar]]:
    return [[a[i][j].conjugate() for i in range(len(a))] for j in range(len(a[0]))] if a else []
