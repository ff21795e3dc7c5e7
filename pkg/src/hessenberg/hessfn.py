"""
Type-A Hessenberg functions and the staircase spaces they define.

A Hessenberg function h on {1..n} is nondecreasing with values in 0..n. Its
space is the cell set {(r, c) : r <= h(c)} of matrix units E_rc.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidInput

__all__ = [
    "HessenbergFunction", "HessenbergSpace", "Corner",
    "parse_hessenberg", "space_from_function", "function_from_space",
    "is_borel_stable", "minimize_nilpotent", "is_minimal", "corners",
    "corner_space", "space_contains", "all_hessenberg_functions",
]


@dataclass(frozen=True)
class HessenbergFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        n = len(vals)
        if n == 0:
            raise InvalidInput("Hessenberg function needs at least one value")
        if any(v < 0 or v > n for v in vals):
            raise InvalidInput(f"values must lie in 0..{n}: {vals}")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise InvalidInput(f"Hessenberg function must be nondecreasing: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        # h(0) := 0 lets callers look one step to the left without a guard
        return 0 if i == 0 else self.values[i - 1]

    def __str__(self):
        return ",".join(map(str, self.values))

    def __repr__(self):
        return f"HessenbergFunction({self})"


@dataclass(frozen=True)
class HessenbergSpace:
    n: int
    cells: frozenset[tuple[int, int]]

    def column_heights(self) -> tuple[int, ...]:
        return tuple(sum(1 for (_, c) in self.cells if c == col)
                     for col in range(1, self.n + 1))

    def __contains__(self, cell) -> bool:
        return cell in self.cells


@dataclass(frozen=True, order=True)
class Corner:
    """The rectangle H_ij = {(k, l) : k <= i, l >= j}."""
    i: int
    j: int

    def __str__(self):
        return f"{self.i},{self.j}"


def parse_hessenberg(text: str) -> HessenbergFunction:
    """Accepts ``"2,3,4,4"`` or ``"h=2,3,4,4"``."""
    body = text.strip()
    if body.startswith("h="):
        body = body[2:]
    try:
        values = tuple(int(tok) for tok in body.replace(" ", "").split(","))
    except ValueError:
        raise InvalidInput(f"malformed Hessenberg function: {text!r}") from None
    return HessenbergFunction(values)


def space_from_function(h: HessenbergFunction) -> HessenbergSpace:
    n = h.n
    return HessenbergSpace(n, frozenset(
        (r, c) for c in range(1, n + 1) for r in range(1, h(c) + 1)))


def is_borel_stable(cells, n: int) -> bool:
    """Staircase closure: each cell drags along the cell above and to the right."""
    cells = set(cells)
    for (r, c) in cells:
        if not (1 <= r <= n and 1 <= c <= n):
            raise InvalidInput(f"cell {(r, c)} outside the {n}x{n} grid")
        if r > 1 and (r - 1, c) not in cells:
            return False
        if c < n and (r, c + 1) not in cells:
            return False
    return True


def function_from_space(space: HessenbergSpace) -> HessenbergFunction:
    if not is_borel_stable(space.cells, space.n):
        raise InvalidInput("cell set is not Borel-stable")
    return HessenbergFunction(space.column_heights())


def _lower_once(vals: list[int], i: int) -> bool:
    # h(i) = i may drop to i - 1 only if h(i-1) <= i - 1 keeps h nondecreasing
    if vals[i - 1] != i:
        return False
    if i > 1 and vals[i - 2] > i - 1:
        return False
    vals[i - 1] = i - 1
    return True


def minimize_nilpotent(h: HessenbergFunction) -> HessenbergFunction:
    """
    Minimal representative of the nilpotent equivalence class of h.

    Any diagonal value h(i) = i that can be lowered to i - 1 without breaking
    monotonicity is lowered, sweeping i from n down to 1 until nothing moves.
    """
    vals = list(h.values)
    changed = True
    while changed:
        changed = False
        for i in range(h.n, 0, -1):
            changed |= _lower_once(vals, i)
    return HessenbergFunction(tuple(vals))


def is_minimal(h: HessenbergFunction) -> bool:
    return all(h(i) != i or h(i - 1) == i for i in range(1, h.n + 1))


def corners(h: HessenbergFunction) -> list[Corner]:
    """Corners (h(j), j) at every column where h rises, sorted by column."""
    return [Corner(h(j), j) for j in range(1, h.n + 1) if h(j) > h(j - 1)]


def corner_space(c: Corner, n: int) -> HessenbergSpace:
    if not (1 <= c.i <= n and 1 <= c.j <= n):
        raise InvalidInput(f"corner {c} outside the {n}x{n} grid")
    return HessenbergSpace(n, frozenset(
        (k, l) for k in range(1, c.i + 1) for l in range(c.j, n + 1)))


def space_contains(space: HessenbergSpace, other: HessenbergSpace) -> bool:
    """True iff ``space`` is contained in ``other`` (argument order reads H <= H2)."""
    if space.n != other.n:
        raise DimensionMismatch(f"spaces of different sizes: {space.n} vs {other.n}")
    return space.cells <= other.cells


def all_hessenberg_functions(n: int):
    """Every nondecreasing h: {1..n} -> {0..n}, in lexicographic order."""
    for vals in itertools.combinations_with_replacement(range(n + 1), n):
        yield HessenbergFunction(vals)
