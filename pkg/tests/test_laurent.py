from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2cat.laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    q,
    qinv,
    qpow,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
points = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)])


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, points)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


@given(polys, polys)
def test_bar_is_an_involutive_ring_map(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).divmod_exact(b) == a


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        (q + ONE).divmod_exact(q + 2)
    with pytest.raises(ZeroDivisionError):
        q.divmod_exact(ZERO)


def test_quantum_integers():
    assert quantum_int(1) == ONE
    assert quantum_int(2) == q + qinv
    assert quantum_int(3) == qpow(2) + ONE + qpow(-2)
    assert quantum_int(-2) == -(q + qinv)
    for a in range(1, 8):
        assert quantum_int(a).bar() == quantum_int(a)
        assert quantum_int(a).at_one() == a
        # (q - q^-1)[a] = q^a - q^-a
        assert (q - qinv) * quantum_int(a) == qpow(a) - qpow(-a)


@pytest.mark.parametrize("n", range(0, 9))
def test_quantum_binomial_pascal(n):
    # independent oracle: [n,k] = q^{-k}[n-1,k] + q^{n-k}[n-1,k-1]
    for k in range(n + 1):
        if 0 < k < n:
            rec = quantum_binomial(n - 1, k).shift(-k) + quantum_binomial(n - 1, k - 1).shift(n - k)
            assert quantum_binomial(n, k) == rec
        else:
            assert quantum_binomial(n, k) == ONE


def test_factorial_and_serialization():
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)
    p = LaurentPoly({-2: 3, 0: -1, 5: 2})
    assert LaurentPoly.from_json(p.to_json()) == p
    assert repr(q - qinv) == "q - q^-1"
    assert p.at_one() == 4
    assert p.shift(2) == p * qpow(2)
