"""Brute-force reference implementations used only by the tests."""

from itertools import product

from hessenberg.permcore import Permutation, identity, right_multiply_transposition


def reduced_word(w: Permutation) -> list[int]:
    """Any reduced word, by peeling off right descents."""
    letters = []
    while True:
        j = next((j for j in range(1, w.n) if w(j) > w(j + 1)), None)
        if j is None:
            return letters[::-1]
        letters.append(j)
        w = right_multiply_transposition(w, j, j + 1)


def subword_products(w: Permutation) -> set[Permutation]:
    """Everything below w in Bruhat order, via the subword property."""
    word = reduced_word(w)
    out = set()
    for keep in product((False, True), repeat=len(word)):
        p = identity(w.n)
        for k, letter in zip(keep, word):
            if k:
                p = right_multiply_transposition(p, letter, letter + 1)
        out.add(p)
    return out
