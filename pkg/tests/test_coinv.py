from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from sl2cat import coinv
from sl2cat.coinv import (
    C_i,
    C_pair,
    build_coinvariants,
    elementary,
    invariants,
    reynolds,
    verify_freeness,
)
from sl2cat.laurent import ONE, LaurentPoly, quantum_binomial
from sl2cat.symgroup import all_perms, parabolic_i, subgroup_elements


def _failures(checks):
    return [k for k, v in checks.items() if not v.get("informational") and not v["pass"]]


def _q2_integer(k):
    return LaurentPoly({2 * j: 1 for j in range(k)})


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hilbert_series_product_formula(n):
    A = build_coinvariants(n)
    expected = ONE
    for k in range(1, n + 1):
        expected = expected * _q2_integer(k)
    assert A.dim == factorial(n)
    assert A.poincare() == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_elementary_symmetric_vanish(n):
    A = build_coinvariants(n)
    for j in range(1, n + 1):
        assert not any(A.normal_form(elementary(n, j)))


N = 4
A4 = build_coinvariants(N)
elements = st.lists(st.integers(-3, 3), min_size=A4.dim, max_size=A4.dim).map(lambda xs: [Fraction(x) for x in xs])
perms = st.sampled_from(all_perms(N))


@settings(max_examples=30, deadline=None)
@given(elements, elements, perms, perms)
def test_action_is_by_algebra_automorphisms(u, v, w, y):
    assert A4.act(w, A4.multiply(u, v)) == A4.multiply(A4.act(w, u), A4.act(w, v))
    assert A4.act(w, A4.act(y, u)) == A4.act(w * y, u)
    assert A4.multiply(u, v) == A4.multiply(v, u)


@settings(max_examples=20, deadline=None)
@given(elements, st.integers(0, N))
def test_reynolds_lands_in_invariants(v, i):
    group = subgroup_elements(N, parabolic_i(N, i))
    r = reynolds(A4, group, v)
    assert C_i(N, i).contains(r)
    for w in group:
        assert A4.act(w, r) == r


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_partial_flag_rings(n):
    A = build_coinvariants(n)
    assert invariants(A, range(1, n)).dim == 1
    for i in range(n + 1):
        sub = C_i(n, i)
        assert sub.dim == comb(n, i)
        assert sub.is_closed()
        p = sub.poincare()
        assert p.shift(-(p.max_exp() + p.min_exp()) // 2) == quantum_binomial(n, i)


def test_free_basis_degrees_n4():
    cert = verify_freeness(C_pair(4, 1, 2), C_i(4, 1))
    assert cert["pass"] and cert["rank"] == 3 and cert["degrees"] == [0, 2, 4]
    cert = verify_freeness(C_pair(4, 1, 2), C_i(4, 2))
    assert cert["pass"] and cert["degrees"] == [0, 2]
    with pytest.raises(ValueError):
        verify_freeness(C_i(4, 1), C_pair(4, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coinv_check(n):
    assert not _failures(coinv.coinv_check(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_vn_check(n):
    assert not _failures(coinv.vn_check(n))


def test_adjunction_bookkeeping_values():
    rep = coinv.adjunction_bookkeeping(4)
    assert not _failures(rep)
    assert rep["(E_1, F_2K^-1<1>)"]["max"] == 2
    assert rep["(E_1, F_2K^-1<1>)"]["shift"] == 1
