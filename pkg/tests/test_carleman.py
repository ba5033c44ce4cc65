from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hankel_inertia.carleman import (
    carleman_element,
    negative_count,
    negative_count_experiment,
    truncated_matrix,
)
from hankel_inertia.kernel import kernel
from hankel_inertia.representations import SequenceRep, convert


def test_elements():
    assert [carleman_element(n) for n in range(5)] == [2, 0, Fraction(2, 3), 0, Fraction(2, 5)]
    with pytest.raises(ValueError):
        carleman_element(-1)


def test_truncation_examples():
    np.testing.assert_array_equal(truncated_matrix(None, 2), [[2, 0], [0, 2 / 3]])
    v = convert(kernel((1, [-1])), "sequence")
    np.testing.assert_allclose(truncated_matrix(v, 1), [[1.5]])
    assert negative_count(truncated_matrix(SequenceRep(), 64)) == 0


def test_truncation_is_hankel():
    v = convert(kernel((2, [1, 1]), ("1/2", [-3])), "sequence")
    M = truncated_matrix(v, 8)
    for n in range(7):
        for m in range(1, 8):
            assert M[n, m] == M[n + 1, m - 1]


def test_background_sections_are_semidefinite():
    eigs = np.linalg.eigvalsh(truncated_matrix(None, 32))
    assert eigs.min() > -1e-12 * eigs.max()


@pytest.mark.parametrize(
    "v, predicted",
    [
        (kernel((1, [-1])), 1),
        (kernel((1, [-10])), 1),
        (kernel((1, [-1]), (2, [-1])), 2),
        (kernel((1, [1])), 0),
        (kernel((1, [0, 1])), 1),
    ],
)
def test_fixture_counts(v, predicted):
    exp = negative_count_experiment(v, (16, 64, 128))
    assert exp.predicted == predicted
    assert exp.bounded and exp.monotone and exp.stabilized


def test_sizes_must_ascend():
    with pytest.raises(ValueError):
        negative_count_experiment(kernel((1, [-1])), (64, 32))


@settings(max_examples=25)
@given(
    st.lists(st.tuples(st.integers(1, 6), st.integers(-6, 6).filter(bool)), min_size=1, max_size=3,
             unique_by=lambda t: t[0]),
    st.sampled_from([4, 16, 48]),
)
def test_compression_bound(terms, N):
    # a finite section never shows more negative eigenvalues than N-(V)
    v = kernel(*[(a, [p]) for a, p in terms])
    exp = negative_count_experiment(v, (N,))
    assert exp.bounded
