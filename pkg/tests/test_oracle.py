from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given

from hankel_inertia.errors import IllConditioned
from hankel_inertia.inertia import kernel_inertia
from hankel_inertia.kernel import kernel
from hankel_inertia.linalg import exact_inertia, exact_ldl
from hankel_inertia.oracle import gram_matrix, nonzero_spectrum, oracle_inertia, separable_expansion
from hankel_inertia.scalars import ComplexScalar
from strategies import kernels, nonzero_rationals, real_exponents, small_kernels


def q(x):
    return ComplexScalar(Fraction(x))


def test_separable_expansion_exp():
    e = separable_expansion(kernel((1, [1])))
    assert e.basis == ((0, 1),)
    assert e.A == ((1,),)


def test_separable_expansion_texp():
    e = separable_expansion(kernel((1, [0, 1])))
    assert e.basis == ((0, 1), (1, 1))
    assert e.A == ((0, 1), (1, 0))


def test_separable_expansion_t2exp():
    assert separable_expansion(kernel((1, [0, 0, 1]))).A == ((0, 0, 1), (0, 2, 0), (1, 0, 0))


def test_separable_expansion_pair_is_hermitian():
    e = separable_expansion(kernel(("1+2i", [1, "i"]), ("1-2i", [1, "-i"])))
    n = e.dimension
    assert n == 4
    assert all(e.A[i][j] == e.A[j][i].conjugate() for i in range(n) for j in range(n))


@pytest.mark.parametrize(
    "basis, G",
    [
        ([(0, 1)], [["1/2"]]),
        ([(0, 1), (1, 1)], [["1/2", "1/4"], ["1/4", "1/4"]]),
        ([(0, 1), (0, 2)], [["1/2", "1/3"], ["1/3", "1/4"]]),
    ],
)
def test_gram_matrix(basis, G):
    assert gram_matrix(basis).G == tuple(tuple(q(x) for x in row) for row in G)


def test_gram_matrix_complex_entries():
    G = gram_matrix([(0, ComplexScalar(1, 1)), (0, ComplexScalar(1, -1))]).G
    # conj(1+i) + (1+i) = 2, conj(1+i) + (1-i) = 2 - 2i
    assert G[0][0] == q("1/2")
    assert G[0][1] == ComplexScalar(2, -2).inverse()


@given(kernels(max_degree=3, max_pairs=1))
def test_gram_positive_definite(k):
    G = gram_matrix(separable_expansion(k).basis).G
    if G:
        _, D = exact_ldl(G)
        assert all(d.re > 0 for d in D)


@pytest.mark.parametrize(
    "k, expected", [(kernel((1, [1])), (1, 0)), (kernel((1, [0, 0, 1])), (2, 1)), (kernel((1, [0, 1])), (1, 1))]
)
def test_oracle_inertia(k, expected):
    rep = oracle_inertia(k)
    assert rep.counts == expected
    assert rep.method == "oracle"


def test_oracle_float_path():
    assert oracle_inertia(kernel((1, [0, 0, 1])), exact=False).counts == (2, 1)


@pytest.mark.parametrize(
    "k, expected", [(kernel((1, [1])), [0.5]), (kernel((1, [2])), [1.0]), (kernel((1, [-1])), [-0.5])]
)
def test_nonzero_spectrum(k, expected):
    assert np.allclose(nonzero_spectrum(k), expected, atol=1e-12)


def test_nonzero_spectrum_t2exp():
    # eigenvalues of H restricted to span{e^{-t}, t e^{-t}, t^2 e^{-t}}
    eigs = nonzero_spectrum(kernel((1, [0, 0, 1])))
    assert (eigs > 0).sum() == 2 and (eigs < 0).sum() == 1


@given(real_exponents(), nonzero_rationals())
def test_rank_one_eigenvalue(alpha, p):
    (eig,) = nonzero_spectrum(kernel((alpha, [p])))
    assert eig == pytest.approx(float(p) / (2 * float(alpha.re)), rel=1e-12)


@given(small_kernels)
def test_spectrum_signs_match_counts(k):
    try:
        eigs = nonzero_spectrum(k)
    except IllConditioned:
        assume(False)
    assert ((eigs > 0).sum(), (eigs < 0).sum()) == kernel_inertia(k).counts


def test_exact_inertia_zero_diagonal():
    assert exact_inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert exact_inertia([[0, "i"], ["-i", 0]]) == (1, 1, 0)
    assert exact_inertia([[0, 0], [0, 0]]) == (0, 0, 2)
    assert exact_inertia([[1, 1], [1, 1]]) == (1, 0, 1)
