import itertools

import pytest

from hessenberg.errors import BudgetExceeded, InvalidInput, NotMinimal
from hessenberg.hessfn import (
    Corner, HessenbergFunction, all_hessenberg_functions, corner_space, corners,
    function_from_space, is_minimal, HessenbergSpace,
)
from hessenberg.hwdecomp import (
    apply_word, brute_force_components, cell_in_variety, conjugate_highest,
    corner_dimension, corner_factorization, corner_permutation, decompose,
    is_pure_banded, schubert_search, variety_cells,
)
from hessenberg.permcore import Permutation, bruhat_table, length, longest_element

H = lambda *xs: HessenbergFunction(xs)
P = lambda *xs: Permutation(xs)


def _corners(n):
    return [Corner(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def _corner_h(c, n):
    return function_from_space(corner_space(c, n))


def test_conjugate_and_membership_examples():
    assert conjugate_highest(P(2, 1, 3)) == (2, 3)
    assert cell_in_variety(P(2, 1, 3), H(0, 1, 2))
    assert not cell_in_variety(P(2, 3, 1), H(0, 1, 2))


def test_corner_permutation_examples():
    assert corner_permutation(Corner(4, 1), 5) == P(5, 4, 3, 1, 2)
    assert corner_permutation(Corner(1, 2), 3) == P(1, 3, 2)
    assert corner_permutation(Corner(2, 3), 3) == P(2, 1, 3)


def test_factorization_example():
    word = corner_factorization(Corner(4, 1), 5)
    assert word == [4]
    assert apply_word(longest_element(5), word)[-1] == P(5, 4, 3, 1, 2)


def test_dimension_examples():
    assert corner_dimension(Corner(4, 1), 5) == 9
    assert corner_dimension(Corner(5, 4), 5) == 7


def test_decompose_examples():
    rep = decompose(H(0, 1, 2))
    assert {(c, w, d) for c, w, d in rep.components} == {
        (Corner(1, 2), P(1, 3, 2), 1), (Corner(2, 3), P(2, 1, 3), 1)}
    assert rep.pure
    assert set(rep.cell_set) == {P(1, 2, 3), P(2, 1, 3), P(1, 3, 2)}
    rep = decompose(H(4, 4, 4, 5, 5))
    assert rep.dimensions() == [9, 7] and not rep.pure


def test_purity_examples():
    assert is_pure_banded(H(2, 3, 4, 4))
    assert not is_pure_banded(H(4, 4, 4, 5, 5))


def test_brute_force_examples():
    assert set(brute_force_components(H(0, 1, 2))) == {P(2, 1, 3), P(1, 3, 2)}
    assert set(brute_force_components(H(4, 4, 4, 5, 5))) == {
        P(5, 4, 3, 1, 2), P(4, 3, 2, 5, 1)}


@pytest.mark.parametrize("n", range(2, 8))
def test_dimension_and_factorization(n):
    w0 = longest_element(n)
    for c in _corners(n):
        w = corner_permutation(c, n)
        assert corner_dimension(c, n) == length(w)
        chain = apply_word(w0, corner_factorization(c, n))
        assert chain[-1] == w
        assert [length(p) for p in chain] == list(range(length(w0), length(w) - 1, -1))


@pytest.mark.parametrize("n", range(2, 7))
def test_corner_permutation_is_unique_maximum(n):
    table = bruhat_table(n)
    for c in _corners(n):
        region = [s for s in table.perms
                  if s.inverse()(1) <= c.i and s.inverse()(n) >= c.j]
        assert table.maximal(table.mask(region)) == [corner_permutation(c, n)]


@pytest.mark.parametrize("n", range(2, 7))
def test_decomposition_soundness(n):
    table = bruhat_table(n)
    for h in all_hessenberg_functions(n):
        if not is_minimal(h):
            continue
        cells = table.mask(variety_cells(h))
        union = 0
        for _, w, _ in decompose(h, with_cells=False).components:
            union |= table.lower_interval(w)
        assert cells == union


@pytest.mark.parametrize("n", range(2, 6))
def test_corner_containment(n):
    cells = {c: set(variety_cells(_corner_h(c, n))) for c in _corners(n)}
    for a, b in itertools.product(_corners(n), repeat=2):
        assert (cells[a] <= cells[b]) == (a.i <= b.i and a.j >= b.j)


@pytest.mark.parametrize("n", range(2, 7))
def test_union_law(n):
    for a, b in itertools.combinations(_corners(n), 2):
        union_space = HessenbergSpace(n, corner_space(a, n).cells | corner_space(b, n).cells)
        h = function_from_space(union_space)
        got = set(variety_cells(h))
        assert got == set(variety_cells(_corner_h(a, n))) | set(variety_cells(_corner_h(b, n)))


@pytest.mark.parametrize("n", range(2, 7))
def test_purity_equivalence(n):
    for h in all_hessenberg_functions(n):
        if is_minimal(h):
            rep = decompose(h, with_cells=False)
            assert is_pure_banded(h) == (len(set(rep.dimensions())) <= 1) == rep.pure


def test_report_json_shape():
    d = decompose(H(0, 1, 2)).to_dict(include_cells=True, input_h=H(1, 2, 3))
    assert d == {
        "n": 3, "h": [1, 2, 3], "minimal_h": [0, 1, 2],
        "components": [{"corner": [1, 2], "w": "1,3,2", "dim": 1},
                       {"corner": [2, 3], "w": "2,1,3", "dim": 1}],
        "pure": True, "cells": ["1,2,3", "1,3,2", "2,1,3"],
    }


def test_schubert_search_small_n():
    # every Schubert variety in GL_3/B is some X_h; from n = 4 on most are not
    assert len(schubert_search(3).unrealized) == 0
    res = schubert_search(4)
    assert len(res.realized) + len(res.unrealized) == 24
    table = bruhat_table(4)
    for w, h in res.realized.items():
        assert set(variety_cells(h)) == set(table.members(table.lower_interval(w)))


def test_errors():
    with pytest.raises(NotMinimal):
        decompose(H(1, 2, 3))
    with pytest.raises(InvalidInput):
        decompose(H(1))
    with pytest.raises(InvalidInput):
        corner_permutation(Corner(2, 2), 3)
    with pytest.raises(InvalidInput):
        corner_dimension(Corner(0, 2), 3)
    with pytest.raises(InvalidInput):
        cell_in_variety(P(1, 2), H(0, 1, 2))
    with pytest.raises(BudgetExceeded):
        brute_force_components(HessenbergFunction(tuple([8] * 8)))
    with pytest.raises(BudgetExceeded):
        variety_cells(HessenbergFunction(tuple([9] * 9)))
