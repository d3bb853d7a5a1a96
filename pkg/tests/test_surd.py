"""Exact quadratic-field elements: canonical form, signs, enclosures."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from irrmeasure import QuadraticSurd, sqrt_of, squarefree_decompose
from irrmeasure.errors import RadicandError

from conftest import oracle_sqrt_interval


def test_squarefree_decompose_extracts_square_factors():
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(49) == (7, 1)
    assert squarefree_decompose(360) == (6, 10)
    assert squarefree_decompose(97) == (1, 97)


def test_squarefree_decompose_rejects_uncertifiable_residual():
    # residual 10**9+7 is prime and exceeds bound**2 = 10**4
    with pytest.raises(RadicandError):
        squarefree_decompose(10 ** 9 + 7, bound=100)
    with pytest.raises(RadicandError):
        squarefree_decompose(0)


@given(st.integers(min_value=2, max_value=5000))
def test_squarefree_decompose_roundtrip(n):
    s, d = squarefree_decompose(n)
    assert s * s * d == n
    for f in range(2, 71):
        assert d % (f * f) != 0


def test_canonical_form_normalizes_radicand():
    a = QuadraticSurd(Fraction(0), Fraction(1), 8)
    b = QuadraticSurd(Fraction(0), Fraction(2), 2)
    assert a == b
    assert a.radicand == 2 and a.coef == 2


def test_degenerate_surds_rejected():
    with pytest.raises(RadicandError):
        QuadraticSurd(Fraction(1), Fraction(0), 2)   # rational value
    with pytest.raises(RadicandError):
        QuadraticSurd(Fraction(1), Fraction(1), 9)   # perfect square
    with pytest.raises(RadicandError):
        QuadraticSurd(Fraction(1), Fraction(1), -3)


def test_sign_and_rational_comparison():
    r2 = sqrt_of(2)
    assert r2.sign() == 1
    assert (-r2).sign() == -1
    assert QuadraticSurd(Fraction(1), Fraction(-1), 2).sign() == -1   # 1 - sqrt2
    assert QuadraticSurd(Fraction(2), Fraction(-1), 2).sign() == 1    # 2 - sqrt2
    assert r2.compare_rational(Fraction(3, 2)) == -1
    assert r2.compare_rational(Fraction(7, 5)) == 1
    assert r2.compare_rational(1) == 1


def test_same_field_compare_is_exact():
    x = QuadraticSurd(Fraction(1), Fraction(2), 2)
    y = QuadraticSurd(Fraction(3), Fraction(1), 2)
    # 1 + 2*sqrt2 = 3.828..., 3 + sqrt2 = 4.414...
    assert x.compare(y) == -1
    assert y.compare(x) == 1
    assert x.compare(x) == 0


def test_cross_field_compare_terminates():
    assert sqrt_of(2).compare(sqrt_of(3)) == -1
    assert sqrt_of(5).compare(sqrt_of(3)) == 1
    # values close together: 1 + sqrt(2) = 2.4142 vs sqrt(6) = 2.4495
    close = QuadraticSurd(Fraction(1), Fraction(1), 2)
    assert close.compare(sqrt_of(6)) == -1


def test_enclosure_brackets_the_value():
    lo, hi = sqrt_of(2).enclosure(30)
    olo, ohi = oracle_sqrt_interval(2, 30)
    assert lo == olo and hi == ohi
    neg = QuadraticSurd(Fraction(1), Fraction(-1), 2)   # 1 - sqrt2 < 0
    lo, hi = neg.enclosure(20)
    assert lo < hi < 0
    assert (hi - lo) == Fraction(1, 10 ** 20)


def test_reciprocal_and_shift_arithmetic():
    x = QuadraticSurd(Fraction(1), Fraction(1), 2)      # 1 + sqrt2
    assert x.reciprocal() == QuadraticSurd(Fraction(-1), Fraction(1), 2)
    assert x.reciprocal().reciprocal() == x
    assert x.plus_rational(Fraction(1, 2)).rational == Fraction(3, 2)
    assert x.times_rational(2) == QuadraticSurd(Fraction(2), Fraction(2), 2)
    assert (-x).abs() == x


@given(st.fractions(min_value=-3, max_value=3),
       st.fractions(min_value=-3, max_value=3).filter(lambda f: f != 0),
       st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13]))
def test_sign_matches_float_oracle(r, c, d):
    surd = QuadraticSurd(r, c, d)
    value = float(surd)
    if abs(value) > 1e-9:
        assert surd.sign() == (1 if value > 0 else -1)
