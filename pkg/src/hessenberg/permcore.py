"""
Exact combinatorics of the symmetric group S_n.

Permutations are 1-indexed and written in one-line notation: ``images[i-1]``
is w(i), so column i of the permutation matrix holds e_{w(i)}. Products
compose right to left, ``(u * v)(i) == u(v(i))``, which matches the product
of permutation matrices.

>>> w = Permutation((2, 3, 1))
>>> length(w)
2
>>> right_multiply_transposition(w, 1, 2)
Permutation(3,2,1)
>>> sorted(free_positions(Permutation((3, 2, 1))))
[(1, 1), (1, 2), (2, 1)]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, InvalidInput

__all__ = [
    "Permutation", "CellParam", "MAX_ENUMERATION_N",
    "identity", "length", "inversions", "bruhat_leq",
    "right_multiply_transposition", "adjacent", "longest_element",
    "free_positions", "cell_param", "all_permutations", "parse_permutation",
    "BruhatTable", "bruhat_table",
]

# 10! ~ 3.6M is the practical ceiling for anything that walks all of S_n
MAX_ENUMERATION_N = 10


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images or sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInput(f"not a permutation of 1..n: {self.images!r}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        _check_same_n(self, other)
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def __repr__(self):
        return f"Permutation({self})"

    def __str__(self):
        return ",".join(map(str, self.images))

    @cached_property
    def inverse_images(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, wi in enumerate(self.images, start=1):
            inv[wi - 1] = i
        return tuple(inv)

    def inverse(self) -> Permutation:
        return Permutation(self.inverse_images)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def matrix(self) -> list[list[int]]:
        """Permutation matrix with e_{w(i)} in column i."""
        n = self.n
        m = [[0] * n for _ in range(n)]
        for c, r in enumerate(self.images):
            m[r - 1][c] = 1
        return m


@dataclass(frozen=True)
class CellParam:
    """Free-entry parameterization of the Schubert cell of ``base``."""
    base: Permutation
    free: frozenset[tuple[int, int]]


def _check_same_n(v: Permutation, w: Permutation):
    if v.n != w.n:
        raise DimensionMismatch(f"permutations of different sizes: {v.n} vs {w.n}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation, e.g. ``"2,3,1"``."""
    try:
        images = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise InvalidInput(f"malformed permutation: {text!r}") from None
    return Permutation(images)


def inversions(w: Permutation) -> list[tuple[int, int]]:
    """Pairs of values i < j with w^{-1}(i) > w^{-1}(j)."""
    inv = w.inverse_images
    n = w.n
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
            if inv[i - 1] > inv[j - 1]]


def length(w: Permutation) -> int:
    imgs = w.images
    n = len(imgs)
    return sum(1 for a in range(n) for b in range(a + 1, n) if imgs[a] > imgs[b])


def _rank_matrix(w: Permutation) -> list[list[int]]:
    # r[i][j] = #{k <= i : w(k) >= j}, for 1 <= i, j <= n
    n = w.n
    r = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        wi = w(i)
        for j in range(1, n + 1):
            r[i][j] = r[i - 1][j] + (1 if wi >= j else 0)
    return r


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat comparison v <= w by the rank-matrix criterion."""
    _check_same_n(v, w)
    rv, rw = _rank_matrix(v), _rank_matrix(w)
    n = v.n
    return all(rv[i][j] <= rw[i][j] for i in range(1, n + 1) for j in range(1, n + 1))


def right_multiply_transposition(w: Permutation, j: int, k: int) -> Permutation:
    """Return w * s_jk, i.e. w with columns j and k exchanged."""
    if not (1 <= j < k <= w.n):
        raise InvalidInput(f"need 1 <= j < k <= {w.n}, got j={j}, k={k}")
    imgs = list(w.images)
    imgs[j - 1], imgs[k - 1] = imgs[k - 1], imgs[j - 1]
    return Permutation(tuple(imgs))


def adjacent(n: int, i: int) -> Permutation:
    """The simple transposition s_{i,i+1} in S_n."""
    return right_multiply_transposition(identity(n), i, i + 1)


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def free_positions(w: Permutation) -> frozenset[tuple[int, int]]:
    """Entries (row, col) lying above and to the left of a 1 of w."""
    inv = w.inverse_images
    n = w.n
    return frozenset(
        (r, c)
        for c in range(1, n + 1)
        for r in range(1, w(c))
        if c < inv[r - 1]
    )


def cell_param(w: Permutation) -> CellParam:
    return CellParam(w, free_positions(w))


def _guard_enumeration(n: int):
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if n > MAX_ENUMERATION_N:
        raise BudgetExceeded(f"refusing to enumerate S_{n}; limit is n <= {MAX_ENUMERATION_N}")


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    _guard_enumeration(n)
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


class BruhatTable:
    """
    Precomputed Bruhat relation on all of S_n.

    ``below[k]`` and ``above[k]`` are Python-int bitmasks over the indices of
    ``perms`` (lexicographic order) holding the elements <= and >= perms[k].
    """

    def __init__(self, n: int):
        if n > 7:
            raise BudgetExceeded(f"Bruhat table for S_{n} is too large; limit is n <= 7")
        self.n = n
        self.perms = all_permutations(n)
        self.index = {p: k for k, p in enumerate(self.perms)}
        self.lengths = [length(p) for p in self.perms]
        ranks = np.array(
            [[row[1:n + 1] for row in _rank_matrix(p)[1:]] for p in self.perms],
            dtype=np.int8,
        ).reshape(len(self.perms), n * n)
        size = len(self.perms)
        leq = np.empty((size, size), dtype=bool)
        for k in range(size):
            leq[k] = np.all(ranks <= ranks[k], axis=1)
        # leq[k, t] is perms[t] <= perms[k]
        self.below = [_bits_to_int(row) for row in leq]
        self.above = [_bits_to_int(col) for col in leq.T]

    def mask(self, perms) -> int:
        out = 0
        for p in perms:
            out |= 1 << self.index[p]
        return out

    def members(self, mask: int) -> list[Permutation]:
        return [self.perms[k] for k in _iter_bits(mask)]

    def maximal(self, mask: int) -> list[Permutation]:
        """Bruhat-maximal elements of the set encoded by ``mask``."""
        return [self.perms[k] for k in _iter_bits(mask)
                if (self.above[k] & mask) == 1 << k]

    def lower_interval(self, w: Permutation) -> int:
        return self.below[self.index[w]]


def _bits_to_int(mask: np.ndarray) -> int:
    packed = np.packbits(mask.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@lru_cache(maxsize=None)
def bruhat_table(n: int) -> BruhatTable:
    return BruhatTable(n)
