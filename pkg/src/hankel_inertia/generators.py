"""Seeded random instances: canonical kernels, positive kernels, skew-triangular matrices."""
from __future__ import annotations

import random
from fractions import Fraction

from .kernel import HankelKernel, KernelTerm, canonicalize
from .scalars import ZERO, ComplexScalar, Polynomial


def _nonzero_int(rng: random.Random, bound: int) -> int:
    return rng.choice([x for x in range(-bound, bound + 1) if x])


def random_rational(rng: random.Random, max_num: int = 9, max_den: int = 9, positive: bool = False) -> Fraction:
    num = rng.randint(1, max_num) if positive else rng.randint(-max_num, max_num)
    return Fraction(num, rng.randint(1, max_den))


def random_polynomial(rng: random.Random, K: int, complex_coeffs: bool = False, coeff_bound: int = 9) -> Polynomial:
    """Degree exactly K, integer coefficients in [-bound, bound]."""
    coeffs = []
    for j in range(K + 1):
        lead = j == K
        re = _nonzero_int(rng, coeff_bound) if lead and not complex_coeffs else rng.randint(-coeff_bound, coeff_bound)
        im = rng.randint(-coeff_bound, coeff_bound) if complex_coeffs else 0
        if lead and re == 0 and im == 0:
            re = _nonzero_int(rng, coeff_bound)
        coeffs.append(ComplexScalar(re, im))
    return Polynomial(coeffs)


def random_kernel(
    rng: random.Random,
    max_real: int = 3,
    max_pairs: int = 2,
    max_degree: int = 4,
    max_num: int = 9,
    max_den: int = 9,
    max_imag: int = 4,
) -> HankelKernel:
    """Canonical kernel with distinct exponents, rational data and nonzero leading coefficients.

    Exponents have numerators and denominators at most 9 and |Im alpha| <= 4.
    The result may be zero-rank when both term counts come out zero.
    """
    n_real = rng.randint(0, max_real)
    n_pairs = rng.randint(0, max_pairs)
    terms: list[KernelTerm] = []
    used: set = set()
    while len(used) < n_real:
        alpha = ComplexScalar(random_rational(rng, max_num, max_den, positive=True))
        if alpha in used:
            continue
        used.add(alpha)
        terms.append(KernelTerm(alpha, random_polynomial(rng, rng.randint(0, max_degree))))
    while len(used) < n_real + n_pairs:
        im = Fraction(rng.randint(1, max_imag), rng.randint(1, max_den))
        alpha = ComplexScalar(random_rational(rng, max_num, max_den, positive=True), im)
        if alpha in used:
            continue
        used.add(alpha)
        term = KernelTerm(alpha, random_polynomial(rng, rng.randint(0, max_degree), complex_coeffs=True))
        terms += [term, term.conjugate()]
    return canonicalize(terms)


def random_positive_kernel(rng: random.Random, max_terms: int = 5) -> HankelKernel:
    """sum p_m e^{-alpha_m t} with p_m > 0 and distinct real alpha_m > 0."""
    n = rng.randint(1, max_terms)
    alphas: set = set()
    while len(alphas) < n:
        alphas.add(random_rational(rng, positive=True))
    return canonicalize(KernelTerm(ComplexScalar(a), Polynomial([random_rational(rng, positive=True)])) for a in alphas)


def random_higher_term(rng: random.Random, avoid, min_degree: int = 1, max_degree: int = 4) -> list[KernelTerm]:
    """A term of degree >= 1 at a fresh exponent, real or a conjugate pair."""
    avoid = set(avoid)
    while True:
        if rng.random() < 0.5:
            alpha = ComplexScalar(random_rational(rng, positive=True))
            if alpha in avoid:
                continue
            return [KernelTerm(alpha, random_polynomial(rng, rng.randint(min_degree, max_degree)))]
        alpha = ComplexScalar(random_rational(rng, positive=True), Fraction(rng.randint(1, 4), rng.randint(1, 9)))
        term = KernelTerm(alpha, random_polynomial(rng, rng.randint(min_degree, max_degree), complex_coeffs=True))
        return [term, term.conjugate()]


def random_skew_triangular(rng: random.Random, max_order: int = 9, bound: int = 9) -> list[list[ComplexScalar]]:
    """Hermitian, zero below the skew diagonal, nonzero on it.

    Entries are Gaussian integers in [-bound, bound]; the skew diagonal and
    the middle entry (for odd order) are forced nonzero.
    """
    n = rng.randint(1, max_order)
    K = n - 1
    S = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        for l in range(j, n):
            if j + l > K:
                continue
            if j == l:
                re = _nonzero_int(rng, bound) if j + l == K else rng.randint(-bound, bound)
                S[j][j] = ComplexScalar(re)
                continue
            z = ComplexScalar(rng.randint(-bound, bound), rng.randint(-bound, bound))
            while j + l == K and z.is_zero():
                z = ComplexScalar(rng.randint(-bound, bound), rng.randint(-bound, bound))
            S[j][l] = z
            S[l][j] = z.conjugate()
    return S


def kernel_corpus() -> dict[str, HankelKernel]:
    """Named kernels used as fixtures throughout the tests and the CLI."""
    from .kernel import kernel

    return {
        "exp": kernel((1, [1])),
        "texp": kernel((1, [0, 1])),
        "t2exp": kernel((1, [0, 0, 1])),
        "neg_t2exp": kernel((1, [0, 0, -1])),
        "pair": kernel(("1+i", [1]), ("1-i", [1])),
        "alpha2": kernel((2, [1])),
        "alpha_half": kernel(("1/2", [1])),
        "neg_exp": kernel((1, [-1])),
        "neg_two_exp": kernel((1, [-1]), (2, [-1])),
        "mixed": kernel((3, [1, -2, 0, 1]), ("1/2+2i", [1, "1-i"]), ("1/2-2i", [1, "1+i"]), ("2/3", [-5])),
    }


__all__ = [
    "kernel_corpus",
    "random_higher_term",
    "random_kernel",
    "random_polynomial",
    "random_positive_kernel",
    "random_rational",
    "random_skew_triangular",
]
