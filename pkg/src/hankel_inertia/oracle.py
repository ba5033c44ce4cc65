"""Brute-force inertia and nonzero spectrum of a finite-rank Hankel operator.

Expanding (t + s)^k binomially writes h(t + s) as a finite sum of products
t^a e^{-alpha t} s^b e^{-alpha s}. With v_j(f) = int g_j f, g_j(t) = t^a_j
e^{-alpha_j t}, the quadratic form becomes (Hf, f) = v^* A v for an exact
Hermitian matrix A over the same basis the range of H is spanned by. Since
the v_j are linearly independent on that span, N+-(H) = N+-(A).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IllConditioned, InvalidExponent, NotSelfAdjoint
from .inertia import InertiaReport
from .kernel import HankelKernel
from .linalg import conjugate_transpose, exact_inertia, exact_ldl, exact_product, is_hermitian
from .scalars import ZERO, ComplexScalar


@dataclass(frozen=True)
class SeparableExpansion:
    basis: tuple[tuple[int, ComplexScalar], ...]  # (a, alpha) for t^a e^{-alpha t}
    A: tuple[tuple[ComplexScalar, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class GramMatrix:
    basis: tuple[tuple[int, ComplexScalar], ...]
    G: tuple[tuple[ComplexScalar, ...], ...]


def separable_expansion(k: HankelKernel) -> SeparableExpansion:
    basis: list[tuple[int, ComplexScalar]] = []
    for term in k.all_terms():
        basis += [(a, term.alpha) for a in range(term.K + 1)]
    index = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    A = [[ZERO] * n for _ in range(n)]
    # h(t+s) = sum p_c C(c, a) [t^a e^{-alpha t}] [s^b e^{-alpha s}], c = a + b.
    # The s-factor pairs with f, giving v_(b, alpha); the t-factor pairs with
    # conj(f), giving conj(v_(a, conj alpha)).
    for term in k.all_terms():
        partner = term.alpha.conjugate()
        for c, p in enumerate(term.poly.coeffs):
            if p.is_zero():
                continue
            for a in range(c + 1):
                row = index[(a, partner)]
                col = index[(c - a, term.alpha)]
                A[row][col] = A[row][col] + p * math.comb(c, a)
    if not is_hermitian(A):
        raise NotSelfAdjoint("coefficient matrix of the quadratic form is not Hermitian")
    return SeparableExpansion(tuple(basis), tuple(tuple(r) for r in A))


def gram_matrix(basis) -> GramMatrix:
    """G_ij = (g_j, g_i) = (a_i + a_j)! / (conj(alpha_i) + alpha_j)^(a_i + a_j + 1)."""
    basis = tuple((int(a), ComplexScalar.coerce(al)) for a, al in basis)
    rows = []
    for ai, al_i in basis:
        row = []
        for aj, al_j in basis:
            s = al_i.conjugate() + al_j
            if s.re <= 0:
                raise InvalidExponent("Gram integral diverges")
            row.append(s.inverse() ** (ai + aj + 1) * math.factorial(ai + aj))
        rows.append(tuple(row))
    return GramMatrix(basis, tuple(rows))


def oracle_inertia(k: HankelKernel, exact: bool = True) -> InertiaReport:
    """Inertia of A by exact congruence, or by a float eigensolve if exact=False."""
    A = separable_expansion(k).A
    if exact:
        plus, minus, zero = exact_inertia(A)
    else:
        eigs = nonzero_spectrum(k)
        plus, minus, zero = int((eigs > 0).sum()), int((eigs < 0).sum()), 0
    return InertiaReport(plus, minus, plus + minus, method="oracle", n_zero=zero)


def nonzero_spectrum(k: HankelKernel, resolve_tol: float = 1e-13) -> np.ndarray:
    """Nonzero eigenvalues of H, ascending.

    On the range of H the problem is B x = lambda G x with B = W^* A W and
    W = P G, P the permutation pairing each exponent with its conjugate, so
    the eigenvalues are those of A' G with A' = P^T A P. With the exact
    factorization G = L D L^*, that is the Hermitian D^(1/2) L^* A' L D^(1/2);
    only this last matrix is rounded to float.
    """
    exp = separable_expansion(k)
    n = exp.dimension
    if n == 0:
        return np.zeros(0)
    gram = gram_matrix(exp.basis)
    index = {b: i for i, b in enumerate(exp.basis)}
    perm = [index[(a, al.conjugate())] for a, al in exp.basis]
    A = [[exp.A[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    L, D = exact_ldl(gram.G)
    M = exact_product(conjugate_transpose(L), exact_product(A, L))
    d = np.sqrt(np.array([float(x.re) for x in D]))
    C = np.array([[complex(x) for x in row] for row in M]) * np.outer(d, d)
    if not np.isfinite(C).all():
        raise IllConditioned("reduced matrix overflows double precision")
    eigs = np.linalg.eigvalsh((C + C.conj().T) / 2)
    if np.abs(eigs).min() <= resolve_tol * np.abs(eigs).max():
        raise IllConditioned("eigenvalue spread exceeds double precision; signs are not resolved")
    return np.sort(eigs)


__all__ = [
    "GramMatrix",
    "SeparableExpansion",
    "gram_matrix",
    "nonzero_spectrum",
    "oracle_inertia",
    "separable_expansion",
]
