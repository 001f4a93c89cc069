from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl2cat.laurent import ONE, LaurentPoly, q, qinv
from sl2cat.linalg import LMatrix, Subspace, rank, rref, solve_columns

coeff = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(LaurentPoly)


def unitriangular(entries, n=4):
    m = LMatrix.identity(range(n))
    k = 0
    for r in range(n):
        for c in range(r + 1, n):
            m[r, c] = entries[k]
            k += 1
    return m


@settings(max_examples=40)
@given(st.lists(coeff, min_size=6, max_size=6))
def test_unitriangular_inverse(entries):
    m = unitriangular(entries)
    assert (m @ m.inverse()).is_identity()
    assert (m.inverse() @ m).is_identity()


def test_matrix_basics():
    m = LMatrix(["a", "b"], ["x"], {("a", "x"): q, ("b", "x"): qinv})
    assert m.column("x") == {"a": q, "b": qinv}
    assert m.bar()[("a", "x")] == qinv
    assert m.transpose()["x", "b"] == qinv
    assert m.apply({"x": q}) == {"a": q * q, "b": ONE}
    with pytest.raises(KeyError):
        m["c", "x"] = ONE


rows = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5)


@given(rows)
def test_rank_and_subspace(rs):
    r = rank(rs, 4)
    basis, _ = rref(rs, 4)
    assert len(basis) == r
    S = Subspace(rs, 4)
    assert S.dim == r
    for v in rs:
        assert S.contains(v)
        assert not any(S.reduce(v))


def test_solve_columns():
    cols = [[1, 0, 1], [0, 1, 1]]
    assert solve_columns(cols, [2, 3, 5]) == [Fraction(2), Fraction(3)]
    assert solve_columns(cols, [1, 1, 0]) is None
