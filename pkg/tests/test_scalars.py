"""Coefficient ring: exact Laurent polynomials in q."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dqsp.scalars import ONE, Q, QINV, ZERO, QScalar, qpow


def test_q_times_q_inverse_is_one():
    assert Q * QINV == ONE


def test_additive_inverse():
    assert Q + (-Q) == ZERO
    assert (Q - Q).is_zero()


def test_product_expansion():
    # (1 + q)(1 - q) = 1 - q^2, expanded by hand
    assert (ONE + Q) * (ONE - Q) == ONE - qpow(2)


def test_equality_is_structural():
    assert Q * QINV == ONE
    assert qpow(2) != qpow(-2)
    assert (ONE + Q) * (ONE + Q) == ONE + 2 * Q + qpow(2)


def test_evaluate():
    assert (Q + QINV).evaluate(1) == 2
    assert qpow(2).evaluate(2) == 4
    assert (ONE - Q).evaluate(1) == 0
    assert qpow(-2, Fraction(3, 4)).evaluate(Fraction(1, 2)) == 3
    with pytest.raises(ValueError):
        Q.evaluate(0)


def test_inverse():
    assert qpow(3, Fraction(-2)).inverse() == qpow(-3, Fraction(-1, 2))
    assert Q ** -3 == qpow(-3)
    with pytest.raises(ValueError):
        (ONE + Q).inverse()


def test_rendering():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-Q) == "-q"
    assert str(qpow(-1, Fraction(-1, 2)) + qpow(2, 3)) == "-1/2*q^-1 + 3*q^2"
    assert str(ONE - Q) == "1 - q"


def test_parse_round_trip():
    for text in ("0", "1", "-q", "q^-1", "-1/2*q^-1 + 3*q^2", "1 - q",
                 "2*q + 1/3"):
        assert str(QScalar.parse(text)) == str(QScalar.parse(str(QScalar.parse(text))))
    assert QScalar.parse("q^-1") == QINV
    assert QScalar.parse("-1/2*q^-1 + 3*q^2") == qpow(-1, Fraction(-1, 2)) + qpow(2, 3)
    with pytest.raises(ValueError):
        QScalar.parse("q +")
    with pytest.raises(ValueError):
        QScalar.parse("2 3")


scalars = st.builds(
    QScalar,
    st.dictionaries(st.integers(-4, 4),
                    st.fractions(min_value=-5, max_value=5, max_denominator=6),
                    max_size=4))


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(scalars, scalars)
def test_evaluation_is_a_ring_homomorphism(a, b):
    for q0 in (1, 2, Fraction(1, 3)):
        assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)
        assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)
