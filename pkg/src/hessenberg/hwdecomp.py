"""
Highest-weight Hessenberg varieties X_H = {flags : g^-1 E_1n g in H}.

For a permutation flag [s] the conjugate s^-1 E_1n s is the matrix unit E_kl
with (k, l) = (s^-1(1), s^-1(n)), so membership of a whole Schubert cell is
decided by one cell of the Hessenberg space. Each corner H_ij of a minimal
space contributes one Schubert variety Y_w as an irreducible component.

>>> h = HessenbergFunction((4, 4, 4, 5, 5))
>>> [(str(c), str(w), d) for c, w, d in decompose(h).components]
[('4,1', '5,4,3,1,2', 9), ('5,4', '4,3,2,5,1', 7)]
>>> decompose(h).pure
False
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BudgetExceeded, InvalidInput, NotMinimal
from .hessfn import (
    Corner, HessenbergFunction, all_hessenberg_functions, corners, is_minimal,
    minimize_nilpotent,
)
from .permcore import (
    Permutation, all_permutations, bruhat_table, right_multiply_transposition,
)

__all__ = [
    "DecompositionReport", "conjugate_highest", "cell_in_variety",
    "corner_permutation", "corner_factorization", "apply_word",
    "corner_dimension", "decompose", "is_pure_banded", "brute_force_components",
    "variety_cells", "CELL_SET_MAX_N", "SchubertSearch", "schubert_search",
]

CELL_SET_MAX_N = 8
BRUTE_FORCE_MAX_N = 7


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    h: HessenbergFunction
    components: list[tuple[Corner, Permutation, int]]
    pure: bool
    cell_set: list[Permutation] | None = None

    def dimensions(self) -> list[int]:
        return [d for _, _, d in self.components]

    def to_dict(self, include_cells: bool = False,
                input_h: HessenbergFunction | None = None) -> dict:
        out = {
            "n": self.n,
            "h": list((input_h or self.h).values),
            "minimal_h": list(self.h.values),
            "components": [
                {"corner": [c.i, c.j], "w": str(w), "dim": d}
                for c, w, d in self.components
            ],
            "pure": self.pure,
        }
        if include_cells and self.cell_set is not None:
            out["cells"] = [str(s) for s in self.cell_set]
        return out


def conjugate_highest(s: Permutation) -> tuple[int, int]:
    """(k, l) with s^-1 E_1n s = E_kl."""
    inv = s.inverse_images
    return inv[0], inv[-1]


def cell_in_variety(s: Permutation, h: HessenbergFunction) -> bool:
    if s.n != h.n:
        raise InvalidInput(f"permutation in S_{s.n} but h has n={h.n}")
    k, l = conjugate_highest(s)
    return k <= h(l)


def _check_corner(c: Corner, n: int):
    if not (1 <= c.i <= n and 1 <= c.j <= n):
        raise InvalidInput(f"corner {c} outside the {n}x{n} grid")
    if c.i == c.j:
        raise InvalidInput(
            f"corner ({c.i},{c.j}) lies on the diagonal; it never occurs for a "
            "minimal Hessenberg function (call minimize_nilpotent first)")


def corner_permutation(c: Corner, n: int) -> Permutation:
    """e_n in column j, e_1 in column i, the rest decreasing left to right."""
    _check_corner(c, n)
    images = [0] * n
    images[c.j - 1] = n
    images[c.i - 1] = 1
    fill = iter(range(n - 1, 1, -1))
    for pos in range(n):
        if images[pos] == 0:
            images[pos] = next(fill)
    return Permutation(tuple(images))


def corner_factorization(c: Corner, n: int) -> list[int]:
    """
    Word of adjacent transpositions taking w0 to the corner permutation.

    Letter k stands for s_{k,k+1}; the word is read left to right as right
    multiplications of w0. The first block cycles the leading j (j < i) or
    j - 1 (j > i) columns, the second block cycles the trailing n - i + 1.
    """
    _check_corner(c, n)
    head = c.j - 1 if c.j < c.i else c.j - 2
    return list(range(1, head + 1)) + list(range(n - 1, c.i - 1, -1))


def apply_word(w: Permutation, word: list[int]) -> list[Permutation]:
    """Partial products w, w s_{a1}, w s_{a1} s_{a2}, ... of a word."""
    out = [w]
    for k in word:
        w = right_multiply_transposition(w, k, k + 1)
        out.append(w)
    return out


def corner_dimension(c: Corner, n: int) -> int:
    _check_corner(c, n)
    if c.j < c.i:
        return comb(n, 2) - (c.j - 1 + n - c.i)
    return comb(n, 2) - (c.j - 2 + n - c.i)


def variety_cells(h: HessenbergFunction) -> list[Permutation]:
    """All s with [s] in X_h, in lexicographic order."""
    if h.n > CELL_SET_MAX_N:
        raise BudgetExceeded(f"cell scan limited to n <= {CELL_SET_MAX_N}")
    return [s for s in all_permutations(h.n) if cell_in_variety(s, h)]


def _require_minimal(h: HessenbergFunction):
    if h.n < 2:
        raise InvalidInput("highest-weight decomposition needs n >= 2")
    if not is_minimal(h):
        raise NotMinimal(
            f"h={h} is not minimal in its E_1n-equivalence class; "
            f"use minimize_nilpotent (gives {minimize_nilpotent(h)})")


def decompose(h: HessenbergFunction, with_cells: bool | None = None) -> DecompositionReport:
    _require_minimal(h)
    n = h.n
    comps = [(c, corner_permutation(c, n), corner_dimension(c, n)) for c in corners(h)]
    pure = len({d for _, _, d in comps}) <= 1
    if with_cells is None:
        with_cells = n <= CELL_SET_MAX_N
    cells = variety_cells(h) if with_cells else None
    return DecompositionReport(n, h, comps, pure, cells)


def is_pure_banded(h: HessenbergFunction) -> bool:
    """All corners on one off-diagonal j - i = const."""
    _require_minimal(h)
    return len({c.j - c.i for c in corners(h)}) <= 1


def brute_force_components(h: HessenbergFunction) -> list[Permutation]:
    """Bruhat-maximal permutation flags of X_h, found by scanning all of S_n."""
    if h.n > BRUTE_FORCE_MAX_N:
        raise BudgetExceeded(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    table = bruhat_table(h.n)
    members = table.mask(s for s in table.perms if cell_in_variety(s, h))
    return table.maximal(members)


@dataclass(frozen=True)
class SchubertSearch:
    """
    Which Schubert varieties Y_w of GL_n/B occur as some X_h (X = E_1n).

    Evidence for small n only: a w left unrealized here may still be a
    Hessenberg variety for another X.
    """
    n: int
    realized: dict[Permutation, HessenbergFunction]
    unrealized: list[Permutation]


def schubert_search(n: int) -> SchubertSearch:
    if not 2 <= n <= BRUTE_FORCE_MAX_N:
        raise BudgetExceeded(f"search limited to 2 <= n <= {BRUTE_FORCE_MAX_N}")
    table = bruhat_table(n)
    by_cells: dict[int, HessenbergFunction] = {}
    for h in all_hessenberg_functions(n):
        if is_minimal(h):
            mask = table.mask(s for s in table.perms if cell_in_variety(s, h))
            by_cells.setdefault(mask, h)
    realized, unrealized = {}, []
    for w in table.perms:
        h = by_cells.get(table.lower_interval(w))
        if h is None:
            unrealized.append(w)
        else:
            realized[w] = h
    return SchubertSearch(n, realized, unrealized)
