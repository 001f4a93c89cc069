import pytest
from hypothesis import given, strategies as st

from sl2cat.laurent import ONE, ZERO, q, qinv, qpow, quantum_int
from sl2cat.symgroup import compositions, reverse_seq
from sl2cat.uqrep import (
    TensorVector,
    act,
    act_two_factor,
    basis_indices,
    canonical_basis,
    divided_power,
    dual_canonical_basis,
    dual_canonical_via_hecke,
    jw_include,
    jw_project,
    operator_matrix,
    pairing_form,
    to_dual,
    to_standard,
)

SHAPES = [tuple(d) for n in range(1, 5) for d in compositions(n)]


@pytest.mark.parametrize("shape", SHAPES)
@pytest.mark.parametrize("coproduct", ["delta", "delta_prime"])
def test_relations(shape, coproduct):
    E, F, K, Ki = (operator_matrix(g, shape, coproduct) for g in ("E", "F", "K", "Kinv"))
    assert (K @ Ki).is_identity()
    assert K @ E == (E @ K).scale(qpow(2))
    assert K @ F == (F @ K).scale(qpow(-2))
    assert (E @ F - F @ E).scale(q - qinv) == K - Ki


@pytest.mark.parametrize("shape", [s for s in SHAPES if len(s) > 1])
@pytest.mark.parametrize("coproduct", ["delta", "delta_prime"])
def test_bracketing_is_irrelevant(shape, coproduct):
    for dual in (False, True):
        for a in basis_indices(shape):
            v = TensorVector.basis(shape, a, dual)
            for split in range(1, len(shape)):
                for g in ("E", "F", "K"):
                    assert act(g, v, coproduct) == act_two_factor(g, v, split, coproduct)


@given(st.integers(1, 6), st.data())
def test_at_q_one_E_raises_one_zero(n, data):
    a = data.draw(st.tuples(*[st.integers(0, 1)] * n))
    got = act("E", TensorVector((1,) * n, {a: ONE})).at_one()
    want = {a[:p] + (1,) + a[p + 1:]: 1 for p in range(n) if a[p] == 0}
    assert got == want


def test_single_factor_actions():
    # E v_k = [k+1] v_{k+1}, F v_k = [n-k+1] v_{k-1} in V_n
    v = TensorVector((3,), {(1,): ONE})
    assert act("E", v) == TensorVector((3,), {(2,): quantum_int(2)})
    assert act("F", v) == TensorVector((3,), {(0,): quantum_int(3)})
    assert act("K", v) == TensorVector((3,), {(1,): qinv})
    w = to_dual(v)
    assert to_standard(w) == v


@pytest.mark.parametrize("n", [2, 3, 4])
def test_divided_powers_are_integral(n):
    for a in basis_indices((1,) * n):
        v = TensorVector((1,) * n, {a: ONE})
        for k in range(2, n + 1):
            divided_power("E", k, v)
            divided_power("F", k, v)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_canonical_and_dual_canonical(n):
    cb = canonical_basis(n)
    dcb = dual_canonical_basis(n)
    assert dcb == dual_canonical_via_hecke(n)
    for a, v in cb.items():
        for b, w in dcb.items():
            assert pairing_form(v, w) == (ONE if b == reverse_seq(a) else ZERO)
    for a, v in dcb.items():
        assert v[a] == ONE
        for b, c in v.coeffs.items():
            if b != a:
                assert all(e < 0 for e in c.coeffs())


def test_canonical_basis_frozen_n3():
    cb = canonical_basis(3)
    assert cb[(1, 0, 0)] == TensorVector((1, 1, 1), {(1, 0, 0): ONE, (0, 1, 0): qinv, (0, 0, 1): qpow(-2)})
    dcb = dual_canonical_basis(3)
    assert dcb[(1, 0, 0)] == TensorVector((1, 1, 1), {(1, 0, 0): ONE, (0, 1, 0): -qinv}, dual=True)


@pytest.mark.parametrize("shape", SHAPES)
def test_jones_wenzl_projection_inverts_inclusion(shape):
    for a in basis_indices(shape):
        v = TensorVector(shape, {a: ONE})
        assert to_standard(jw_project(jw_include(v), shape)) == v


def test_bad_input():
    with pytest.raises(ValueError):
        TensorVector((2,), {(3,): ONE})
    with pytest.raises(ValueError):
        act("X", TensorVector((1,), {(0,): ONE}))
    with pytest.raises(ValueError):
        act("E", TensorVector((1,), {(0,): ONE}), coproduct="nope")
