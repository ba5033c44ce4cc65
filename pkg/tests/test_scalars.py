from fractions import Fraction

import pytest
from hypothesis import given

from hankel_inertia.scalars import (
    I,
    ComplexScalar,
    Polynomial,
    as_scalar,
    binomial_polynomial,
    principal_part,
    series_quotient,
)
from strategies import gaussians, polynomials


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("3/4", Fraction(3, 4), 0),
        ("-2i", 0, -2),
        ("1/2-3/5i", Fraction(1, 2), Fraction(-3, 5)),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("1+i", 1, 1),
        ("0.5", Fraction(1, 2), 0),
        (" 2 - 1/3 i ", 2, Fraction(-1, 3)),
    ],
)
def test_parse(text, re, im):
    assert as_scalar(text) == ComplexScalar(re, im)


@pytest.mark.parametrize("text", ["", "1+", "abc", "i2", "1++i", "1/0"])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        as_scalar(text)


def test_str_round_trip():
    for z in [ComplexScalar(1, 2), ComplexScalar(Fraction(-1, 3), Fraction(5, 7)), ComplexScalar(0, -1), ComplexScalar(4)]:
        assert as_scalar(str(z)) == z


@given(gaussians(), gaussians())
def test_field_axioms(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    if not b.is_zero():
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).is_real()


def test_hash_matches_int_for_reals():
    assert {ComplexScalar(2): 1}[2] == 1
    assert hash(ComplexScalar(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_sign_rejects_complex():
    with pytest.raises(ValueError):
        I.sign()


def test_polynomial_trims_and_degree():
    assert Polynomial([1, 0, 0]).degree == 0
    assert Polynomial([]).degree == -1
    assert Polynomial([0, 0]).is_zero()


@given(polynomials(complex_coeffs=True), gaussians())
def test_taylor_round_trip(p, c):
    assert Polynomial.from_taylor(p.taylor_at(c), c) == p


@given(polynomials(), polynomials())
def test_composition_matches_evaluation(p, q):
    x = ComplexScalar(Fraction(2, 3))
    assert p(q)(x) == p(q(x))


def test_series_quotient_geometric():
    one = ComplexScalar(1)
    coeffs = series_quotient([one], [one, -one], 5)
    assert coeffs == [one] * 5


def test_principal_part_simple_pole():
    # (1 - x) / (x (x - 3)): residue at 3 is -2/3
    R = principal_part(Polynomial([1, -1]), Polynomial([0, 1]), 3, 1)
    assert R == Polynomial([Fraction(-2, 3)])


def test_binomial_polynomial():
    p = binomial_polynomial(2, 2)  # C(n+2, 2)
    assert [p(n) for n in range(4)] == [1, 3, 6, 10]
    # vanishes for 0 <= n + shift < k
    assert binomial_polynomial(-1, 2)(1) == 0 and binomial_polynomial(-1, 2)(2) == 0
