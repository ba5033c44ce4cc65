"""Closed-form inertia of sign-matrices and of finite-rank Hankel operators."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InconsistentCounts,
    NonHermitian,
    ShapeViolation,
    SingularBlock,
    SingularSkewDiagonal,
)
from .kernel import HankelKernel
from .linalg import exact_inertia, exact_matrix, is_hermitian
from .scalars import ComplexScalar
from .sign import SignMatrix, SignMatrixBlock, sign_matrix

DEFAULT_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class InertiaReport:
    n_plus: int
    n_minus: int
    rank: int
    breakdown: tuple[dict, ...] = ()
    method: str = "closed-form"
    n_zero: int = 0

    def __post_init__(self):
        if self.breakdown:
            plus = sum(b["n_plus"] for b in self.breakdown)
            minus = sum(b["n_minus"] for b in self.breakdown)
            if (plus, minus) != (self.n_plus, self.n_minus):
                raise InconsistentCounts("breakdown does not sum to the totals")

    @property
    def counts(self) -> tuple[int, int]:
        return self.n_plus, self.n_minus

    def to_dict(self) -> dict:
        return {
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "rank": self.rank,
            "breakdown": [dict(b) for b in self.breakdown],
            "method": self.method,
        }


def real_term_counts(K: int, p_sign: int) -> tuple[int, int]:
    """Positive and negative counts contributed by one real term of degree K."""
    if p_sign not in (1, -1):
        raise ValueError(f"p_sign must be +1 or -1, got {p_sign}")
    if K < 0:
        raise ValueError(f"degree must be non-negative, got {K}")
    if K % 2:
        return (K + 1) // 2, (K + 1) // 2
    return (K // 2 + 1, K // 2) if p_sign > 0 else (K // 2, K // 2 + 1)


def _square_hermitian(S) -> list[list[ComplexScalar]]:
    m = exact_matrix(S)
    if not m:
        raise DimensionMismatch("empty matrix")
    if not is_hermitian(m):
        raise NonHermitian("matrix is not Hermitian")
    return m


def _skew_diagonal(m) -> list[ComplexScalar]:
    K = len(m) - 1
    return [m[j][K - j] for j in range(K + 1)]


def skew_diagonal_inertia(S0) -> tuple[list[float], InertiaReport]:
    """Eigenvalues and inertia of a Hermitian matrix supported on its skew diagonal.

    Each pair (j, K-j) with j < K-j spans an invariant plane where the matrix
    acts as [[0, c], [conj c, 0]], giving +-|c|. For even K the middle entry
    is itself an eigenvalue.
    """
    m = _square_hermitian(S0)
    K = len(m) - 1
    for j in range(K + 1):
        for l in range(K + 1):
            if j + l != K and not m[j][l].is_zero():
                raise ShapeViolation(f"entry ({j},{l}) is off the skew diagonal")
    eigs: list[float] = []
    for j in range((K + 1) // 2):
        c = abs(complex(m[j][K - j]))
        eigs += [c, -c]
    if K % 2 == 0:
        eigs.append(float(m[K // 2][K // 2].re))
    eigs.sort()
    plus = sum(1 for e in eigs if e > 0)
    minus = sum(1 for e in eigs if e < 0)
    return eigs, InertiaReport(plus, minus, plus + minus, method="closed-form", n_zero=len(eigs) - plus - minus)


def _check_skew_triangular(m) -> None:
    K = len(m) - 1
    for j in range(K + 1):
        for l in range(K + 1):
            if j + l > K and not m[j][l].is_zero():
                raise ShapeViolation(f"entry ({j},{l}) below the skew diagonal is nonzero")


def skew_triangular_inertia(S) -> InertiaReport:
    """Inertia from the parity of K and the sign of the middle entry; no eigensolve."""
    m = _square_hermitian(S)
    _check_skew_triangular(m)
    K = len(m) - 1
    diag = _skew_diagonal(m)
    if any(x.is_zero() for x in diag):
        raise SingularSkewDiagonal("a skew-diagonal entry vanishes")
    if K % 2:
        plus, minus = real_term_counts(K, 1)
    else:
        plus, minus = real_term_counts(K, diag[K // 2].sign())
    return InertiaReport(plus, minus, K + 1, method="closed-form")


def pair_block_inertia(block: SignMatrixBlock) -> InertiaReport:
    """[[0, S*], [S, 0]] with S invertible has K+1 eigenvalues of each sign."""
    if block.kind != "pair":
        raise ShapeViolation("pair_block_inertia needs a pair block")
    inner = exact_matrix(block.inner())
    n = len(inner)
    diag = _skew_diagonal(inner)
    skew = all(inner[j][l].is_zero() for j in range(n) for l in range(n) if j + l > n - 1)
    if skew:
        invertible = not any(x.is_zero() for x in diag)
    else:
        # (S* S) is positive definite exactly when S is invertible
        _, _, zeros = exact_inertia(block.entries)
        invertible = zeros == 0
    if not invertible:
        raise SingularBlock("inner block of a pair is singular")
    return InertiaReport(n, n, 2 * n, method="closed-form")


def _block_entry(block: SignMatrixBlock, report: InertiaReport) -> dict:
    return {
        "kind": block.kind,
        "alpha": str(block.alpha),
        "K": (block.order if block.kind == "real" else block.order // 2) - 1,
        "n_plus": report.n_plus,
        "n_minus": report.n_minus,
    }


def sign_matrix_inertia(S: SignMatrix) -> InertiaReport:
    """Block-wise sum over a sign-matrix."""
    parts = []
    for block in S.blocks:
        if block.kind == "real":
            rep = skew_triangular_inertia(block.entries)
        else:
            rep = pair_block_inertia(block)
        parts.append(_block_entry(block, rep))
    plus = sum(p["n_plus"] for p in parts)
    minus = sum(p["n_minus"] for p in parts)
    return InertiaReport(plus, minus, plus + minus, tuple(parts), "closed-form")


def kernel_inertia(k: HankelKernel) -> InertiaReport:
    """(N+, N-) of the Hankel operator with kernel k, from degrees and leading signs."""
    parts = []
    for term in k.real_terms:
        plus, minus = real_term_counts(term.K, term.poly.leading().sign())
        parts.append({"kind": "real", "alpha": str(term.alpha), "K": term.K,
                      "n_plus": plus, "n_minus": minus})
    for term in k.pair_terms:
        n = term.K + 1
        parts.append({"kind": "pair", "alpha": str(term.alpha), "K": term.K,
                      "n_plus": n, "n_minus": n})
    plus = sum(p["n_plus"] for p in parts)
    minus = sum(p["n_minus"] for p in parts)
    return InertiaReport(plus, minus, plus + minus, tuple(parts), "closed-form")


def _as_array(M) -> np.ndarray:
    if isinstance(M, SignMatrix):
        A = M.to_numpy()
    elif isinstance(M, np.ndarray):
        A = M.astype(complex)
    else:
        A = np.array([[complex(x) for x in row] for row in M], dtype=complex)
    return A.reshape(0, 0) if A.size == 0 else A


def numeric_eigenvalues(M) -> np.ndarray:
    A = _as_array(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {A.shape}")
    if A.size == 0:
        return np.zeros(0)
    scale = max(np.abs(A).max(), 1e-300)
    if np.abs(A - A.conj().T).max() > 1e-10 * scale:
        raise NonHermitian("matrix is not Hermitian within round-off")
    return np.linalg.eigvalsh((A + A.conj().T) / 2)


def numeric_inertia(M, zero_tol: float = DEFAULT_ZERO_TOL) -> InertiaReport:
    """Count eigenvalues above +tol*||M||, below -tol*||M||, and in between.

    A SignMatrix is handled block by block, each block against its own norm:
    exponents far apart put the blocks on scales more than 1/tol apart.
    """
    if isinstance(M, SignMatrix):
        parts = [numeric_inertia(b.to_numpy(), zero_tol) for b in M.blocks]
        plus = sum(p.n_plus for p in parts)
        minus = sum(p.n_minus for p in parts)
        zero = sum(p.n_zero for p in parts)
        return InertiaReport(plus, minus, plus + minus, method="numeric", n_zero=zero)
    eigs = numeric_eigenvalues(M)
    if eigs.size == 0:
        return InertiaReport(0, 0, 0, method="numeric")
    cut = zero_tol * np.abs(eigs).max()
    plus = int((eigs > cut).sum())
    minus = int((eigs < -cut).sum())
    return InertiaReport(plus, minus, plus + minus, method="numeric", n_zero=len(eigs) - plus - minus)


def homotopy_path(S, eps: float) -> np.ndarray:
    """S with every entry strictly above the skew diagonal scaled by eps."""
    A = _as_array(S)
    n = A.shape[0]
    out = A.copy()
    for j in range(n):
        for l in range(n):
            if j + l < n - 1:
                out[j, l] *= eps
    return out


def perturbed_negative_count(v: HankelKernel) -> int:
    """Predicted N-(H0 + V) for the Carleman background H0: equals N-(V)."""
    return kernel_inertia(v).n_minus


def kernel_sign_inertia(k: HankelKernel) -> InertiaReport:
    return sign_matrix_inertia(sign_matrix(k))


__all__ = [
    "DEFAULT_ZERO_TOL",
    "InertiaReport",
    "homotopy_path",
    "kernel_inertia",
    "kernel_sign_inertia",
    "numeric_eigenvalues",
    "numeric_inertia",
    "pair_block_inertia",
    "perturbed_negative_count",
    "real_term_counts",
    "sign_matrix_inertia",
    "skew_diagonal_inertia",
    "skew_triangular_inertia",
]
