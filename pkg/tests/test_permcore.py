import itertools

import pytest
from hypothesis import given, strategies as st

from hessenberg.errors import BudgetExceeded, DimensionMismatch, InvalidInput
from hessenberg.permcore import (
    Permutation, adjacent, all_permutations, bruhat_leq, bruhat_table, cell_param,
    free_positions, identity, inversions, length, longest_element, parse_permutation,
    right_multiply_transposition,
)

from oracles import reduced_word, subword_products

P = lambda *xs: Permutation(xs)


def test_length_examples():
    assert length(longest_element(3)) == 3
    assert length(P(2, 3, 1)) == 2
    assert longest_element(3) == P(3, 2, 1)


def test_bruhat_examples():
    assert bruhat_leq(P(2, 1, 3), P(2, 3, 1))
    assert not bruhat_leq(P(3, 1, 2), P(2, 3, 1))
    assert not bruhat_leq(P(2, 3, 1), P(3, 1, 2))


def test_transposition_examples():
    assert right_multiply_transposition(P(2, 3, 1), 1, 2) == P(3, 2, 1)
    assert right_multiply_transposition(P(3, 2, 1), 1, 2) == P(2, 3, 1)


def test_free_positions_examples():
    assert free_positions(P(2, 1, 3)) == {(1, 1)}
    assert free_positions(P(3, 2, 1)) == {(1, 1), (1, 2), (2, 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_length_three_ways(n):
    for w in all_permutations(n):
        inv = w.inverse()
        by_inverse = sum(1 for i, j in itertools.combinations(range(1, n + 1), 2) if inv(i) > inv(j))
        assert length(w) == len(free_positions(w)) == by_inverse == len(inversions(w))


@pytest.mark.parametrize("n", range(2, 7))
def test_adjacent_transposition_law(n):
    for w in all_permutations(n):
        for j in range(1, n):
            ws = right_multiply_transposition(w, j, j + 1)
            assert length(ws) == length(w) + (-1 if w(j) > w(j + 1) else 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_bruhat_transposition_law(n):
    for w in all_permutations(n):
        for j, k in itertools.combinations(range(1, n + 1), 2):
            if w(j) > w(k):
                wt = right_multiply_transposition(w, j, k)
                assert bruhat_leq(wt, w) and not bruhat_leq(w, wt)


@pytest.mark.parametrize("n", range(1, 6))
def test_bruhat_matches_subword_oracle(n):
    perms = all_permutations(n)
    below = {w: subword_products(w) for w in perms}
    for v, w in itertools.product(perms, repeat=2):
        assert bruhat_leq(v, w) == (v in below[w])


@pytest.mark.parametrize("n", range(1, 6))
def test_bruhat_partial_order(n):
    perms = all_permutations(n)
    leq = {(v, w): bruhat_leq(v, w) for v in perms for w in perms}
    for v in perms:
        assert leq[v, v]
    for v, w in itertools.product(perms, repeat=2):
        if v != w:
            assert not (leq[v, w] and leq[w, v])
    for u, v, w in itertools.product(perms, repeat=3):
        if leq[u, v] and leq[v, w]:
            assert leq[u, w]


@pytest.mark.parametrize("n", range(1, 6))
def test_bruhat_table_agrees(n):
    table = bruhat_table(n)
    for w in table.perms:
        assert set(table.members(table.lower_interval(w))) == {
            v for v in table.perms if bruhat_leq(v, w)}


def test_maximal_elements():
    table = bruhat_table(3)
    mask = table.mask([P(1, 2, 3), P(2, 1, 3), P(1, 3, 2)])
    assert set(table.maximal(mask)) == {P(2, 1, 3), P(1, 3, 2)}


@given(st.permutations(range(1, 8)))
def test_reduced_word_length(images):
    w = Permutation(tuple(images))
    assert len(reduced_word(w)) == length(w)


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_product_is_matrix_product(a, b):
    u, v = Permutation(tuple(a)), Permutation(tuple(b))
    mu, mv = u.matrix(), v.matrix()
    prod = [[sum(mu[i][k] * mv[k][j] for k in range(6)) for j in range(6)] for i in range(6)]
    assert (u * v).matrix() == prod
    assert (u * u.inverse()).is_identity()


def test_cell_param_base_and_free():
    w = P(3, 1, 2)
    cp = cell_param(w)
    assert cp.base == w and cp.free == free_positions(w)


def test_adjacent_and_identity():
    assert adjacent(3, 1) == P(2, 1, 3)
    assert identity(3).is_identity()


def test_serialization_round_trip():
    w = P(2, 3, 1)
    assert str(w) == "2,3,1"
    assert parse_permutation(str(w)) == w
    assert repr(w) == "Permutation(2,3,1)"


def test_errors():
    with pytest.raises(InvalidInput):
        P(1, 1, 2)
    with pytest.raises(InvalidInput):
        parse_permutation("1,x")
    with pytest.raises(DimensionMismatch):
        bruhat_leq(P(1, 2), P(1, 2, 3))
    with pytest.raises(InvalidInput):
        right_multiply_transposition(P(1, 2, 3), 2, 2)
    with pytest.raises(BudgetExceeded):
        all_permutations(11)
