from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sl2cat.hecke import (
    PermModuleElt,
    act_gen,
    bar_involution,
    kl_basis,
    kl_matrix,
    twist,
    untwist,
)
from sl2cat.laurent import ONE, LaurentPoly, q, qinv
from sl2cat.symgroup import seq_length, seqs_of_weight

N, I = 4, 2
coeff = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3).map(LaurentPoly)
elements = st.lists(coeff, min_size=6, max_size=6).map(
    lambda cs: PermModuleElt(N, I, dict(zip(seqs_of_weight(N, I), cs)))
)


@given(elements)
def test_quadratic_relation(v):
    for j in range(1, N):
        hv = act_gen(j, v)
        assert act_gen(j, hv) == hv.scale(qinv - q) + v
        assert act_gen(j, act_gen(j, v, inverse=True)) == v


@given(elements)
def test_braid_relations(v):
    assert act_gen(1, act_gen(2, act_gen(1, v))) == act_gen(2, act_gen(1, act_gen(2, v)))
    assert act_gen(2, act_gen(3, act_gen(2, v))) == act_gen(3, act_gen(2, act_gen(3, v)))
    assert act_gen(1, act_gen(3, v)) == act_gen(3, act_gen(1, v))


@settings(max_examples=40)
@given(elements, coeff)
def test_bar_involution(v, c):
    assert bar_involution(bar_involution(v)) == v
    assert bar_involution(v.scale(c)) == bar_involution(v).scale(c.bar())
    for j in range(1, N):
        assert bar_involution(act_gen(j, v)) == act_gen(j, bar_involution(v), inverse=True)


@given(elements)
def test_twist_untwist(v):
    assert untwist(twist(v)) == v


def _brute_force_kl(n, i, sign):
    """Search all triangular elements with small coefficients for bar-invariant ones."""
    seqs = seqs_of_weight(n, i)
    out = {}
    for a in seqs:
        lower = [b for b in seqs if seq_length(b) < seq_length(a)]
        options = []
        for b in lower:
            gap = seq_length(a) - seq_length(b)
            exps = range(1, gap + 1) if sign == "positive" else range(-gap, 0)
            options.append([LaurentPoly(dict(zip(exps, cs))) for cs in product((-1, 0, 1), repeat=len(exps))])
        found = []
        for choice in product(*options):
            v = PermModuleElt(n, i, {a: ONE, **dict(zip(lower, choice))})
            if bar_involution(v) == v:
                found.append(v)
        assert len(found) == 1, (a, found)
        out[a] = found[0]
    return out


@pytest.mark.parametrize("n,i", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
@pytest.mark.parametrize("sign", ["positive", "negative"])
def test_kl_basis_matches_brute_force(n, i, sign):
    assert kl_basis(n, i, sign) == _brute_force_kl(n, i, sign)


def test_kl_basis_frozen_n3():
    # from the brute-force oracle above
    kl = kl_basis(3, 1, "positive")
    assert kl[(0, 0, 1)] == PermModuleElt(3, 1, {(0, 0, 1): ONE, (0, 1, 0): q, (1, 0, 0): q * q})
    assert kl[(0, 1, 0)] == PermModuleElt(3, 1, {(0, 1, 0): ONE, (1, 0, 0): q})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_kl_unitriangular_and_positive(n):
    for i in range(n + 1):
        m = kl_matrix(n, i, "positive")
        for r, c, v in m.entries():
            if r == c:
                assert v == ONE
            else:
                assert seq_length(r) < seq_length(c)
                assert all(e > 0 and x > 0 for e, x in v.coeffs().items())


def test_bad_index_rejected():
    with pytest.raises(ValueError):
        PermModuleElt(3, 1, {(1, 1, 0): ONE})
    with pytest.raises(ValueError):
        kl_basis(3, 1, "sideways")
