
import pytest
from hypothesis import given, strategies as st

from hankel_inertia.errors import InvalidExponent, NotSelfAdjoint
from hankel_inertia.kernel import KernelTerm, canonicalize, kernel, leading_coefficients, rank
from hankel_inertia.scalars import ComplexScalar
from strategies import kernels


def test_single_real_term():
    k = canonicalize([KernelTerm(1, [1])])
    assert k.real_terms == (KernelTerm(1, [1]),)
    assert k.pair_terms == ()


def test_pair_collapses_to_upper_member():
    k = canonicalize([KernelTerm("1+i", [1]), KernelTerm("1-i", [1])])
    assert k.real_terms == ()
    assert k.pair_terms == (KernelTerm("1+i", [1]),)


def test_equal_exponents_merge():
    k = canonicalize([KernelTerm(1, [0, 1]), KernelTerm(1, [1])])
    assert k.real_terms == (KernelTerm(1, [1, 1]),)


def test_cancelling_terms_vanish():
    assert canonicalize([KernelTerm(2, [0, 3]), KernelTerm(2, [0, -3])]).is_zero()


def test_zero_leading_coefficient_reduces_degree():
    assert kernel((1, [5, 0, 0])).real_terms[0].K == 0


@pytest.mark.parametrize("alpha", [0, -1, "-1/2+i", "i"])
def test_rejects_nonpositive_real_part(alpha):
    with pytest.raises(InvalidExponent):
        canonicalize([KernelTerm(alpha, [1]), KernelTerm(ComplexScalar.coerce(alpha).conjugate(), [1])])


def test_rejects_missing_partner():
    with pytest.raises(NotSelfAdjoint):
        canonicalize([KernelTerm("1+i", [1])])


def test_rejects_mismatched_partner():
    with pytest.raises(NotSelfAdjoint):
        canonicalize([KernelTerm("1+i", [1]), KernelTerm("1-i", [2])])


def test_rejects_complex_coefficients_on_real_exponent():
    with pytest.raises(NotSelfAdjoint):
        canonicalize([KernelTerm(1, ["i"])])


@pytest.mark.parametrize(
    "k, r",
    [
        (kernel((1, [1])), 1),
        (kernel((1, [0, 0, 1])), 3),
        (kernel(("1+i", [1]), ("1-i", [1])), 2),
        (kernel((1, [0, 1]), ("1+i", [0, 0, 1]), ("1-i", [0, 0, 1])), 8),
    ],
)
def test_rank(k, r):
    assert rank(k) == r == k.rank()


@pytest.mark.parametrize("poly, expected", [([0, 0, 1], 2), ([3], 3), ([1, 5], 5)])
def test_leading_coefficients(poly, expected):
    assert leading_coefficients(kernel((1, poly))) == [expected]


@given(kernels())
def test_canonicalize_idempotent(k):
    assert canonicalize(k.all_terms()) == k


@given(kernels(), st.randoms(use_true_random=False))
def test_rank_permutation_invariant(k, rnd):
    terms = list(k.all_terms())
    rnd.shuffle(terms)
    assert rank(canonicalize(terms)) == rank(k)


@given(kernels())
def test_values_are_real(k):
    for t in (0.1, 1.0, 10.0):
        v = k(t)
        assert abs(v.imag) < 1e-12 * max(1.0, abs(v.real))


def test_scaling_and_sum():
    k = kernel((1, [1]))
    assert (k + k) == k.scaled(2)
    assert (k + (-k)).is_zero()
    with pytest.raises(NotSelfAdjoint):
        k.scaled("i")
