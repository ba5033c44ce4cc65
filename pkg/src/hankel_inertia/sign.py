"""Sign-functions and sign-matrices of finite-rank kernels.

The sign-function of P(t) exp(-alpha t) is the finite combination
sum_k q_k delta^(k)(x - beta), beta = -log(alpha). Everything here works
with alpha directly; beta is only carried as float metadata.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateLeading,
    DimensionMismatch,
    InvalidExponent,
    NotReal,
    NotSelfAdjoint,
    NotSignMatrix,
)
from .kernel import HankelKernel, KernelTerm, canonicalize
from .scalars import ZERO, ComplexScalar, Polynomial, as_scalar


@lru_cache(maxsize=None)
def nu_coefficients(k: int) -> tuple[int, ...]:
    """Coefficients of (1 - z)(2 - z)...(k - z) in powers of z."""
    coeffs = [1]
    for j in range(1, k + 1):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += j * c
            nxt[i + 1] -= c
        coeffs = nxt
    return tuple(coeffs)


def _check_exponent(alpha: ComplexScalar) -> None:
    if alpha.re <= 0:
        raise InvalidExponent(f"Re(alpha) must be positive, got {alpha}")


def q_coefficients(P: Polynomial, alpha) -> list[ComplexScalar]:
    """q_k = sum_{l >= k} nu_{k,l} alpha^(-1-l) p_l."""
    alpha = as_scalar(alpha)
    _check_exponent(alpha)
    if P.is_zero():
        raise DegenerateLeading("zero polynomial has no sign-function coefficients")
    K = P.degree
    inv = alpha.inverse()
    weighted = []  # alpha^(-1-l) p_l
    power = inv
    for l in range(K + 1):
        weighted.append(power * P[l])
        power = power * inv
    q = []
    for k in range(K + 1):
        acc = ZERO
        for l in range(k, K + 1):
            nu = nu_coefficients(l)[k]
            if nu and not weighted[l].is_zero():
                acc = acc + weighted[l] * nu
        q.append(acc)
    return q


def recover_polynomial(q: Sequence, alpha) -> Polynomial:
    """Invert q_coefficients by back-substitution from the top coefficient."""
    alpha = as_scalar(alpha)
    _check_exponent(alpha)
    q = [as_scalar(x) for x in q]
    if not q or q[-1].is_zero():
        raise DegenerateLeading("top sign-function coefficient q_K must be nonzero")
    K = len(q) - 1
    p: list[ComplexScalar] = [ZERO] * (K + 1)
    for k in range(K, -1, -1):
        acc = q[k]
        for l in range(k + 1, K + 1):
            acc = acc - alpha ** (-1 - l) * p[l] * nu_coefficients(l)[k]
        # nu_{k,k} = (-1)^k
        p[k] = acc * alpha ** (1 + k) * (-1) ** k
    return Polynomial(p)


@dataclass(frozen=True)
class SignAtom:
    """q_0 delta(x - beta) + ... + q_K delta^(K)(x - beta) with beta = -log(alpha)."""

    alpha: ComplexScalar
    q: tuple[ComplexScalar, ...]

    @property
    def beta(self) -> complex:
        return -cmath.log(complex(self.alpha))

    @property
    def K(self) -> int:
        return len(self.q) - 1


def sign_distribution(k: HankelKernel) -> list[SignAtom]:
    return [SignAtom(t.alpha, tuple(q_coefficients(t.poly, t.alpha))) for t in k.all_terms()]


@dataclass(frozen=True)
class SignMatrixBlock:
    kind: str  # "real" or "pair"
    entries: tuple[tuple[ComplexScalar, ...], ...]
    alpha: ComplexScalar | None = None

    @property
    def order(self) -> int:
        return len(self.entries)

    def inner(self) -> tuple[tuple[ComplexScalar, ...], ...]:
        """S(P, alpha) itself; for a pair block the lower-left quadrant."""
        if self.kind == "real":
            return self.entries
        n = self.order // 2
        return tuple(row[:n] for row in self.entries[n:])

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class SignMatrix:
    blocks: tuple[SignMatrixBlock, ...]

    @property
    def order(self) -> int:
        return sum(b.order for b in self.blocks)

    def dense(self) -> list[list[ComplexScalar]]:
        n = self.order
        out = [[ZERO] * n for _ in range(n)]
        offset = 0
        for b in self.blocks:
            for i, row in enumerate(b.entries):
                for j, x in enumerate(row):
                    out[offset + i][offset + j] = x
            offset += b.order
        return out

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) for x in row] for row in self.dense()])


def _skew_block(P: Polynomial, alpha: ComplexScalar) -> tuple[tuple[ComplexScalar, ...], ...]:
    q = q_coefficients(P, alpha)
    K = len(q) - 1
    rows = []
    for j in range(K + 1):
        row = []
        for l in range(K + 1):
            if j + l > K:
                row.append(ZERO)
            else:
                row.append(q[j + l] * ((-1) ** (j + l) * math.comb(j + l, j)))
        rows.append(tuple(row))
    return tuple(rows)


def sign_matrix_real(P: Polynomial, alpha) -> SignMatrixBlock:
    alpha = as_scalar(alpha)
    _check_exponent(alpha)
    if not alpha.is_real():
        raise NotReal(f"real sign-matrix block needs a real exponent, got {alpha}")
    if not P.is_real():
        raise NotReal(f"real sign-matrix block needs a real polynomial, got {P}")
    return SignMatrixBlock("real", _skew_block(P, alpha), alpha)


def sign_matrix_pair(P: Polynomial, alpha) -> SignMatrixBlock:
    """Block [[0, S*], [S, 0]] for the pair P e^{-alpha t} + conj(P) e^{-conj(alpha) t}."""
    alpha = as_scalar(alpha)
    _check_exponent(alpha)
    if alpha.im <= 0:
        raise InvalidExponent(f"pair block is indexed by the member with Im(alpha) > 0, got {alpha}")
    S = _skew_block(P, alpha)
    n = len(S)
    rows = []
    for i in range(n):
        rows.append(tuple([ZERO] * n) + tuple(S[j][i].conjugate() for j in range(n)))
    for i in range(n):
        rows.append(S[i] + tuple([ZERO] * n))
    return SignMatrixBlock("pair", tuple(rows), alpha)


def sign_matrix(k: HankelKernel) -> SignMatrix:
    blocks = [sign_matrix_real(t.poly, t.alpha) for t in k.real_terms]
    blocks += [sign_matrix_pair(t.poly, t.alpha) for t in k.pair_terms]
    return SignMatrix(tuple(blocks))


def _form(matrix, x) -> ComplexScalar:
    # (M x, x) = sum_{j,l} m_{jl} x_l conj(x_j)
    acc = ZERO
    for j, row in enumerate(matrix):
        xj = x[j].conjugate()
        if xj.is_zero():
            continue
        for l, m in enumerate(row):
            if not m.is_zero() and not x[l].is_zero():
                acc = acc + m * x[l] * xj
    return acc


def evaluate_sign_form(S: SignMatrix, jets: Sequence[Sequence]) -> ComplexScalar:
    """sum_m (S_m J_m u, J_m u) for per-block jet vectors.

    A pair block takes the jet at beta followed by the jet at conj(beta).
    """
    if len(jets) != len(S.blocks):
        raise DimensionMismatch(f"{len(S.blocks)} blocks but {len(jets)} jet vectors")
    total = ZERO
    for block, jet in zip(S.blocks, jets):
        if len(jet) != block.order:
            raise DimensionMismatch(f"block of order {block.order} given a jet of length {len(jet)}")
        total = total + _form(block.entries, [as_scalar(x) for x in jet])
    return total


def distribution_pairing(atoms: Sequence[SignAtom], jets: Sequence[Sequence]) -> ComplexScalar:
    """<s, |u|^2> straight from the delta-derivative definition.

    jets[i] holds u(beta_i), u'(beta_i), ... for atoms[i]. Each atom pairs its
    own jet with the jet at the conjugate point.
    """
    if len(jets) != len(atoms):
        raise DimensionMismatch(f"{len(atoms)} atoms but {len(jets)} jet vectors")
    jets = [[as_scalar(x) for x in jet] for jet in jets]
    index = {a.alpha: i for i, a in enumerate(atoms)}
    total = ZERO
    for atom, jet in zip(atoms, jets):
        partner = index.get(atom.alpha.conjugate())
        if partner is None:
            raise NotSelfAdjoint(f"atom at alpha={atom.alpha} has no conjugate partner")
        other = jets[partner]
        if len(jet) <= atom.K or len(other) <= atom.K:
            raise DimensionMismatch(f"atom of order {atom.K} needs {atom.K + 1} derivatives")
        for k, qk in enumerate(atom.q):
            if qk.is_zero():
                continue
            inner = ZERO
            for l in range(k + 1):
                inner = inner + jet[l] * other[k - l].conjugate() * math.comb(k, l)
            total = total + qk * inner * (-1) ** k
    return total


def sign_matrix_to_kernel(S, alpha) -> KernelTerm:
    """Recover P from a sign-matrix block whose l! j! s_{l,j} depends on l + j only."""
    alpha = as_scalar(alpha)
    if isinstance(S, SignMatrixBlock):
        rows = S.inner()
    else:
        rows = tuple(tuple(as_scalar(x) for x in row) for row in S)
    K = len(rows) - 1
    if K < 0 or any(len(row) != K + 1 for row in rows):
        raise NotSignMatrix("sign-matrix must be square and non-empty")
    rho: list[ComplexScalar | None] = [None] * (2 * K + 1)
    for j in range(K + 1):
        for l in range(K + 1):
            s = rows[j][l]
            if j + l > K:
                if not s.is_zero():
                    raise NotSignMatrix(f"entry ({j},{l}) below the skew diagonal is nonzero")
                continue
            value = s * (math.factorial(j) * math.factorial(l))
            if rho[j + l] is None:
                rho[j + l] = value
            elif rho[j + l] != value:
                raise NotSignMatrix(f"l! j! s_(l,j) is not constant on anti-diagonal {j + l}")
    q = [rho[k] * ((-1) ** k) / math.factorial(k) for k in range(K + 1)]
    return KernelTerm(alpha, recover_polynomial(q, alpha))


@lru_cache(maxsize=None)
def _derivative_profile(k: int) -> Polynomial:
    """F_k such that d^k/dx^k [y e^{-t y}] = y e^{-t y} F_k(t y) with y = e^{-x}."""
    F = Polynomial([1])
    for _ in range(k):
        # d/dx = -y d/dy acting on y e^{-ty} F(ty)
        F = -(F - Polynomial([0, 1]) * F + Polynomial([0, 1]) * F.derivative())
    return F


def reconstruct_kernel_from_sign(atoms: Sequence[SignAtom]) -> HankelKernel:
    """h(t) = int exp(-t e^{-x}) e^{-x} s(x) dx, done symbolically atom by atom."""
    terms = []
    for atom in atoms:
        alpha = atom.alpha
        _check_exponent(alpha)
        poly = Polynomial()
        for k, qk in enumerate(atom.q):
            if qk.is_zero():
                continue
            # q_k (-1)^k alpha F_k(alpha t)
            poly = poly + _derivative_profile(k).scale_variable(alpha) * (qk * alpha * (-1) ** k)
        terms.append(KernelTerm(alpha, poly))
    return canonicalize(terms)


__all__ = [
    "SignAtom",
    "SignMatrix",
    "SignMatrixBlock",
    "distribution_pairing",
    "evaluate_sign_form",
    "nu_coefficients",
    "q_coefficients",
    "reconstruct_kernel_from_sign",
    "recover_polynomial",
    "sign_distribution",
    "sign_matrix",
    "sign_matrix_pair",
    "sign_matrix_real",
    "sign_matrix_to_kernel",
]
