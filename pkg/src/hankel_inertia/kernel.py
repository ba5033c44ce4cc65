"""Finite-rank Hankel kernels h(t) = sum_m P_m(t) exp(-alpha_m t)."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidExponent, NotSelfAdjoint
from .scalars import ComplexScalar, Polynomial, as_scalar


@dataclass(frozen=True)
class KernelTerm:
    alpha: ComplexScalar
    poly: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if not isinstance(self.poly, Polynomial):
            object.__setattr__(self, "poly", Polynomial(self.poly))

    @property
    def K(self) -> int:
        return self.poly.degree

    def conjugate(self) -> "KernelTerm":
        return KernelTerm(self.alpha.conjugate(), self.poly.conjugate())

    def __call__(self, t: float) -> complex:
        return self.poly.eval_float(t) * cmath.exp(-complex(self.alpha) * t)


@dataclass(frozen=True)
class HankelKernel:
    """Canonical self-adjoint kernel.

    `pair_terms` holds only the member with Im(alpha) > 0 of each conjugate
    pair; the partner (conj(alpha), conj(P)) is implicit.
    """

    real_terms: tuple[KernelTerm, ...] = ()
    pair_terms: tuple[KernelTerm, ...] = ()

    def all_terms(self) -> Iterator[KernelTerm]:
        """Every summand of h, pair partners included."""
        yield from self.real_terms
        for term in self.pair_terms:
            yield term
            yield term.conjugate()

    def rank(self) -> int:
        return rank(self)

    def is_zero(self) -> bool:
        return not self.real_terms and not self.pair_terms

    def __call__(self, t: float) -> complex:
        return sum((term(t) for term in self.all_terms()), 0j)

    def scaled(self, c) -> "HankelKernel":
        c = as_scalar(c)
        if not c.is_real():
            raise NotSelfAdjoint("a self-adjoint kernel can only be scaled by a real number")
        return canonicalize(KernelTerm(t.alpha, t.poly * c) for t in self.all_terms())

    def __neg__(self):
        return self.scaled(-1)

    def __add__(self, other: "HankelKernel") -> "HankelKernel":
        return canonicalize([*self.all_terms(), *other.all_terms()])

    def __str__(self):
        parts = []
        for term in self.all_terms():
            poly = " + ".join(
                f"({c})t^{k}" if k else f"({c})" for k, c in enumerate(term.poly.coeffs) if c
            )
            parts.append(f"[{poly}]exp(-({term.alpha})t)")
        return " + ".join(parts) if parts else "0"


def canonicalize(terms: Iterable[KernelTerm]) -> HankelKernel:
    """Merge equal exponents, drop zero terms, check self-adjointness, sort."""
    merged: dict[ComplexScalar, Polynomial] = {}
    for term in terms:
        if not isinstance(term, KernelTerm):
            term = KernelTerm(*term)
        if term.alpha.re <= 0:
            raise InvalidExponent(f"Re(alpha) must be positive, got alpha={term.alpha}")
        merged[term.alpha] = merged.get(term.alpha, Polynomial()) + term.poly

    merged = {a: p for a, p in merged.items() if not p.is_zero()}
    real_terms, pair_terms = [], []
    for alpha, poly in merged.items():
        if alpha.im == 0:
            if not poly.is_real():
                raise NotSelfAdjoint(f"real exponent {alpha} carries non-real polynomial {poly}")
            real_terms.append(KernelTerm(alpha, poly))
            continue
        partner = merged.get(alpha.conjugate())
        if partner is None:
            raise NotSelfAdjoint(f"exponent {alpha} has no conjugate partner")
        if partner != poly.conjugate():
            raise NotSelfAdjoint(f"polynomials at {alpha} and its conjugate are not conjugate")
        if alpha.im > 0:
            pair_terms.append(KernelTerm(alpha, poly))
    real_terms.sort(key=lambda t: t.alpha.re)
    pair_terms.sort(key=lambda t: (t.alpha.re, t.alpha.im))
    return HankelKernel(tuple(real_terms), tuple(pair_terms))


def rank(k: HankelKernel) -> int:
    """sum_m K_m + M with each pair member counted separately."""
    return sum(t.K + 1 for t in k.real_terms) + sum(2 * (t.K + 1) for t in k.pair_terms)


def leading_coefficients(k: HankelKernel) -> list[ComplexScalar]:
    """K_m-th derivative of each P_m, i.e. K_m! times the top coefficient."""
    return [t.poly.leading() * math.factorial(t.K) for t in k.all_terms()]


def kernel(*terms) -> HankelKernel:
    """Shorthand: kernel((alpha, [p0, p1, ...]), ...)."""
    return canonicalize(KernelTerm(as_scalar(a), Polynomial(p)) for a, p in terms)
