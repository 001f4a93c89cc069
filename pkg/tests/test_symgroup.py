from itertools import product
from math import comb, factorial, prod

import pytest
from hypothesis import given, strategies as st

from sl2cat.symgroup import (
    Composition,
    Perm,
    all_perms,
    block_weight_vectors,
    bruhat_leq,
    bruhat_leq_subword,
    coset_of_seq,
    compositions,
    is_admissible,
    longest_double_coset_reps,
    min_coset_reps,
    min_rep,
    parabolic_i,
    seq_length,
    seq_of_coset,
    seqs_of_weight,
    subgroup_elements,
)

perms4 = st.permutations(range(1, 5)).map(Perm)


@given(perms4, perms4, perms4)
def test_group_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == Perm.identity(4)
    assert Perm.from_word(4, x.reduced_word()) == x
    assert len(x.reduced_word()) == x.length()


def test_composition_is_right_to_left():
    s1, s2 = Perm.simple(3, 1), Perm.simple(3, 2)
    # (s1 s2)(1) = s1(s2(1)) = s1(1) = 2
    assert (s1 * s2)(1) == 2
    assert Perm.longest(3).length() == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_min_coset_reps_against_brute_force(n):
    for i in range(n + 1):
        gens = parabolic_i(n, i)
        W = subgroup_elements(n, gens)
        assert len(W) == factorial(i) * factorial(n - i)
        reps = set(min_coset_reps(n, gens))
        assert len(reps) == comb(n, i)
        brute = {min((x * w for w in W), key=lambda y: (y.length(), y.images)) for x in all_perms(n)}
        assert reps == brute
        for x in all_perms(n):
            assert min_rep(x, gens) in reps


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sequence_bijection(n):
    for i in range(n + 1):
        seqs = seqs_of_weight(n, i)
        assert sorted(seqs) == sorted(a for a in product((0, 1), repeat=n) if sum(a) == i)
        for a in seqs:
            x = coset_of_seq(a)
            assert seq_of_coset(x, i) == a
            assert seq_length(a) == x.length()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_two_criteria_agree(n):
    for x in all_perms(n):
        for y in all_perms(n):
            assert bruhat_leq(x, y) == bruhat_leq_subword(x, y)


def test_compositions():
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    for n in range(1, 7):
        assert len(compositions(n)) == 2 ** (n - 1)
    assert Composition((2, 1, 2)).generators() == frozenset({1, 4})
    with pytest.raises(ValueError):
        Composition((1, 0))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_double_cosets_match_admissible_sequences(n):
    for d in compositions(n):
        for i in range(n + 1):
            reps = longest_double_coset_reps(n, d, i)
            seqs = {a for _, a in reps}
            assert all(is_admissible(a, d) for a in seqs)
            assert len(seqs) == len(reps) == len(block_weight_vectors(d, i))
        assert len(block_weight_vectors(d)) == prod(x + 1 for x in d)
