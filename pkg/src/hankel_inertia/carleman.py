"""Finite sections of Carleman + V in the sequence picture.

The Carleman operator (kernel 1/t) has matrix elements 2/(n+1) at even n
and 0 at odd n. Adding a finite-rank self-adjoint V leaves exactly N-(V)
negative eigenvalues; a finite section can only see fewer of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .inertia import DEFAULT_ZERO_TOL, kernel_inertia
from .kernel import HankelKernel
from .representations import SequenceRep, convert, sequence_elements_float

DEFAULT_SIZES = (64, 128, 256, 512)


def carleman_element(n: int) -> Fraction:
    if n < 0:
        raise ValueError("index must be non-negative")
    return Fraction(2, n + 1) if n % 2 == 0 else Fraction(0)


def truncated_matrix(v: SequenceRep | None, N: int, include_background: bool = True) -> np.ndarray:
    """Hankel matrix kappa0_{n+m} + kappa_{n+m}, 0 <= n, m < N, in float."""
    if N < 0:
        raise ValueError("size must be non-negative")
    count = max(2 * N - 1, 0)
    seq = np.zeros(count, dtype=complex)
    if include_background:
        seq[0::2] = 2.0 / (np.arange(0, count, 2) + 1)
    if v is not None:
        seq += np.array(sequence_elements_float(v, count), dtype=complex)
    if np.abs(seq.imag).max(initial=0.0) == 0.0:
        seq = seq.real
    idx = np.add.outer(np.arange(N), np.arange(N))
    return seq[idx]


def negative_count(M: np.ndarray, tol: float = DEFAULT_ZERO_TOL) -> int:
    if M.size == 0:
        return 0
    eigs = np.linalg.eigvalsh(M)
    return int((eigs < -tol * np.abs(eigs).max()).sum())


@dataclass(frozen=True)
class TruncationExperiment:
    perturbation: SequenceRep
    sizes: tuple[int, ...]
    counts: tuple[int, ...]
    predicted: int
    tol: float = DEFAULT_ZERO_TOL

    @property
    def bounded(self) -> bool:
        """count(N) <= N-(V) at every size."""
        return all(c <= self.predicted for c in self.counts)

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.counts, self.counts[1:]))

    @property
    def stabilized(self) -> bool:
        return bool(self.counts) and self.counts[-1] == self.predicted


def negative_count_experiment(
    v: HankelKernel, sizes: Sequence[int] = DEFAULT_SIZES, tol: float = DEFAULT_ZERO_TOL
) -> TruncationExperiment:
    sizes = tuple(int(n) for n in sizes)
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    seq = convert(v, "sequence")
    counts = tuple(negative_count(truncated_matrix(seq, N), tol) for N in sizes)
    return TruncationExperiment(seq, sizes, counts, kernel_inertia(v).n_minus, tol)


__all__ = [
    "DEFAULT_SIZES",
    "TruncationExperiment",
    "carleman_element",
    "negative_count",
    "negative_count_experiment",
    "truncated_matrix",
]
