from itertools import product

import pytest

from hessenberg.errors import InvalidInput, NoSolution
from hessenberg.hessfn import Corner
from hessenberg.hwdecomp import corner_permutation
from hessenberg.permcore import bruhat_leq, length
from hessenberg.rootsys import (
    SUPPORTED, GeneralHessenbergSpace, as_permutation, bracket_closure, build_root_system,
    h_alpha, is_bracket_closed, max_coset_rep, neighborhood_support, parse_root,
    parse_system, succeq, support, type_a_root, verify_highest_weight_theorem,
    weyl_enumerate, weyl_group,
)

POSITIVE_COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10, ("B", 2): 4, ("B", 3): 9,
    ("B", 4): 16, ("C", 2): 4, ("C", 3): 9, ("C", 4): 16, ("D", 4): 12, ("G", 2): 6,
    ("F", 4): 24,
}
WEYL_ORDERS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120, ("B", 2): 8, ("B", 3): 48,
    ("B", 4): 384, ("C", 2): 8, ("C", 3): 48, ("C", 4): 384, ("D", 4): 192, ("G", 2): 12,
    ("F", 4): 1152,
}


def test_supported_list():
    assert set(SUPPORTED) == set(POSITIVE_COUNTS)


@pytest.mark.parametrize("label,rank", sorted(POSITIVE_COUNTS))
def test_root_and_weyl_counts(label, rank):
    rs = build_root_system(label, rank)
    assert len(rs.positive_roots) == POSITIVE_COUNTS[label, rank]
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    W = weyl_group(rs)
    assert len(W) == WEYL_ORDERS[label, rank]
    assert W.longest().length == len(rs.positive_roots)
    # theta dominates everything and has full support
    assert all(succeq(rs.highest_root, b) for b in rs.positive_roots)
    assert support(rs.highest_root) == set(range(1, rank + 1))
    assert neighborhood_support(rs, rs.highest_root) == set(range(1, rank + 1))


def test_examples():
    g2 = build_root_system("G", 2)
    assert len(g2.positive_roots) == 6 and g2.highest_root == (3, 2) and g2.is_long((3, 2))
    assert len(build_root_system("B", 3).positive_roots) == 9
    a2, a3 = parse_system("A2"), parse_system("A3")
    assert not succeq((1, 0), (0, 1))
    assert neighborhood_support(a3, (1, 0, 0)) == {1, 2}
    assert h_alpha(a2, (1, 0)) == GeneralHessenbergSpace(frozenset({(1, 0), (1, 1)}), frozenset())
    assert bracket_closure(a2, [(1, 0)]) == h_alpha(a2, (1, 0))
    assert bracket_closure(a2, [(-1, 0)]) == GeneralHessenbergSpace(
        frozenset({(-1, 0), (1, 0), (0, 1), (1, 1)}), frozenset({1}))
    assert len(weyl_enumerate(parse_system("B3"))) == 48
    assert max_coset_rep(a2, a2.highest_root).length == 0
    assert str(max_coset_rep(a2, (1, 0))) == "s2"
    assert str(max_coset_rep(a3, (1, 0, 0))) == "s2s3s2"


@pytest.mark.parametrize("label,rank", sorted(POSITIVE_COUNTS))
def test_minus_theta_gives_everything(label, rank):
    rs = build_root_system(label, rank)
    neg = tuple(-x for x in rs.highest_root)
    space = h_alpha(rs, neg)
    assert space.roots == set(rs.roots) and space.toral == set(range(1, rank + 1))


@pytest.mark.parametrize("label,rank", sorted(POSITIVE_COUNTS))
def test_h_alpha_is_bracket_closure(label, rank):
    rs = build_root_system(label, rank)
    for a in rs.roots:
        space = h_alpha(rs, a)
        assert space == bracket_closure(rs, [a])
        assert is_bracket_closed(rs, space)
        assert a in space.roots


@pytest.mark.parametrize("label,rank", [k for k in sorted(POSITIVE_COUNTS) if k[1] <= 3])
def test_h_alpha_is_minimal(label, rank):
    rs = build_root_system(label, rank)
    for a in rs.roots:
        space = h_alpha(rs, a)
        for b in space.roots - {a}:
            smaller = GeneralHessenbergSpace(space.roots - {b}, space.toral)
            assert not is_bracket_closed(rs, smaller)
            assert b in bracket_closure(rs, smaller.roots).roots
        for i in space.toral:
            assert not is_bracket_closed(rs, GeneralHessenbergSpace(space.roots, space.toral - {i}))


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_weyl_bruhat_matches_subwords(label, rank):
    rs = build_root_system(label, rank)
    W = weyl_group(rs)
    for k, w in enumerate(W.elements):
        below = set()
        for keep in product((False, True), repeat=len(w.word)):
            below.add(W.by_word([x for x, kk in zip(w.word, keep) if kk]))
        assert below == {u for u in range(len(W)) if W.leq(u, k)}


@pytest.mark.parametrize("n", range(2, 6))
def test_type_a_bruhat_matches_permutations(n):
    W = weyl_group(build_root_system("A", n - 1))
    perms = [as_permutation(w, n) for w in W.elements]
    assert len(set(perms)) == len(perms)
    for k, p in enumerate(perms):
        assert length(p) == W.elements[k].length
    for u, v in product(range(len(W)), repeat=2):
        assert W.leq(u, v) == bruhat_leq(perms[u], perms[v])


@pytest.mark.parametrize("n", range(2, 6))
def test_type_a_bridge(n):
    rs = build_root_system("A", n - 1)
    for i, j in product(range(1, n + 1), repeat=2):
        if i != j:
            w = max_coset_rep(rs, type_a_root(i, j, n))
            assert as_permutation(w, n) == corner_permutation(Corner(i, j), n)


@pytest.mark.parametrize("label,rank", sorted(POSITIVE_COUNTS))
def test_theorem_and_coset_sizes(label, rank):
    rs = build_root_system(label, rank)
    W = weyl_group(rs)
    theta = rs.root_index[rs.highest_root]
    stab = W.pullback_theta.count(theta)
    for a in rs.roots:
        if rs.is_long(a):
            assert W.pullback_theta.count(rs.root_index[a]) == stab
            assert verify_highest_weight_theorem(rs, a)
        else:
            assert rs.root_index[a] not in W.pullback_theta
            with pytest.raises(NoSolution):
                max_coset_rep(rs, a)


def test_parsing_and_errors():
    b3 = parse_system("B3")
    assert parse_root(b3, "-1,-1,-2") == (-1, -1, -2)
    assert b3.is_long((-1, -1, -2))
    with pytest.raises(InvalidInput):
        parse_root(b3, "1,1")
    with pytest.raises(InvalidInput):
        parse_root(b3, "2,0,0")
    with pytest.raises(InvalidInput):
        parse_system("E6")
    with pytest.raises(InvalidInput):
        parse_system("B")
    with pytest.raises(InvalidInput):
        h_alpha(b3, (5, 5, 5))
    with pytest.raises(InvalidInput):
        type_a_root(2, 2, 3)
