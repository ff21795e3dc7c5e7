"""
Finite-field oracle: enumerate every full flag in F_q^n and test the
Hessenberg condition X V_i <= V_{h(i)} directly.

Flags are produced from the Schubert-cell normal form: for each permutation w
the matrices w + u, u supported on the free positions of w, are distinct
representatives of the flags in the cell of w. Column c of the realized matrix
is e_{w(c)} plus the free entries of that column, and V_i is spanned by the
first i columns.

Nothing here uses the corner formulas of :mod:`hessenberg.hwdecomp`; it is a
second, geometric route to the same numbers.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from . import gfp
from .errors import BudgetExceeded, DimensionMismatch, HypothesisViolation, InvalidInput
from .hessfn import HessenbergFunction
from .hwdecomp import cell_in_variety
from .permcore import Permutation, all_permutations, free_positions, length

__all__ = [
    "FqMatrix", "FqFlag", "MAX_FLAGS", "PRESETS",
    "flag_count", "projective_count", "enumerate_flags", "preset_matrix",
    "matrix_unit", "parse_matrix", "hessenberg_member", "member_profile",
    "CellBatch", "cell_batches", "ProfileScan", "point_count", "cell_union_counts", "verify_cell_union",
    "verify_not_cell_union", "verify_semisimple_example", "semisimple_partition",
    "SemisimpleSplit", "verify_equivalence", "is_nilpotent", "flag_signature",
]

MAX_FLAGS = 10 ** 6
MAX_Q = 13


@dataclass(frozen=True)
class FqMatrix:
    entries: tuple[tuple[int, ...], ...]
    q: int

    def __post_init__(self):
        gfp.check_prime(self.q, MAX_Q)
        rows = tuple(tuple(int(x) % self.q for x in row) for row in self.entries)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise InvalidInput("matrix must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def apply(self, v) -> tuple[int, ...]:
        return gfp.matvec(self.entries, v, self.q)

    def conjugate(self, g) -> FqMatrix:
        """g^-1 X g."""
        ginv = gfp.inverse(g, self.q)
        return FqMatrix(gfp.matmul(gfp.matmul(ginv, self.entries, self.q), g, self.q), self.q)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class FqFlag:
    cell: Permutation
    assignment: tuple[tuple[tuple[int, int], int], ...]
    q: int

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        n = self.cell.n
        cols = [[0] * n for _ in range(n)]
        for c in range(1, n + 1):
            cols[c - 1][self.cell(c) - 1] = 1
        for (r, c), a in self.assignment:
            cols[c - 1][r - 1] = a
        return tuple(tuple(col) for col in cols)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.columns))


def projective_count(m: int, q: int) -> int:
    """1 + q + ... + q^m, the number of points of P^m(F_q)."""
    return sum(q ** k for k in range(m + 1))


def flag_count(n: int, q: int) -> int:
    """Number of full flags in F_q^n."""
    out = 1
    for i in range(1, n + 1):
        out *= projective_count(i - 1, q)
    return out


def _check_budget(n: int, q: int):
    gfp.check_prime(q, MAX_Q)
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    total = flag_count(n, q)
    if total > MAX_FLAGS:
        raise BudgetExceeded(f"{total} flags for n={n}, q={q} exceeds the budget of {MAX_FLAGS}")


def enumerate_flags(n: int, q: int) -> Iterator[FqFlag]:
    """Every flag exactly once: cells by (length, one-line), entries lexicographic."""
    _check_budget(n, q)
    cells = sorted(all_permutations(n), key=lambda w: (length(w), w.images))
    for w in cells:
        free = sorted(free_positions(w))
        for values in itertools.product(range(q), repeat=len(free)):
            yield FqFlag(w, tuple(zip(free, values)), q)


def matrix_unit(i: int, j: int, n: int, q: int) -> FqMatrix:
    return FqMatrix(tuple(tuple(int(r == i and c == j) for c in range(1, n + 1))
                          for r in range(1, n + 1)), q)


def _from_units(units, n, q) -> FqMatrix:
    m = [[0] * n for _ in range(n)]
    for i, j in units:
        m[i - 1][j - 1] = 1
    return FqMatrix(tuple(map(tuple, m)), q)


PRESETS = {
    "zero": lambda n, q: _from_units([], n, q),
    "e1n": lambda n, q: matrix_unit(1, n, n, q),
    "regular-nilpotent": lambda n, q: _from_units([(i, i + 1) for i in range(1, n)], n, q),
    "semisimple-example": lambda n, q: _from_units([(i, i) for i in range(1, n)], n, q),
}


def preset_matrix(name: str, n: int, q: int) -> FqMatrix:
    try:
        return PRESETS[name](n, q)
    except KeyError:
        raise InvalidInput(f"unknown matrix preset {name!r}; choose from {sorted(PRESETS)}") from None


def parse_matrix(text: str, q: int) -> FqMatrix:
    """Row-major JSON array, e.g. ``[[0,1,0],[0,0,0],[0,0,0]]``."""
    try:
        rows = json.loads(text)
        return FqMatrix(tuple(tuple(int(x) for x in row) for row in rows), q)
    except (ValueError, TypeError) as exc:
        raise InvalidInput(f"malformed matrix JSON: {exc}") from None


def _check_sizes(f_n: int, X: FqMatrix, h: HessenbergFunction):
    if not (f_n == X.n == h.n):
        raise DimensionMismatch(f"sizes disagree: flag {f_n}, X {X.n}, h {h.n}")


def member_profile(f: FqFlag, X: FqMatrix) -> tuple[int, ...]:
    """
    For each column k, the least m with X g_k in V_m (0 when X g_k = 0).

    The flag lies in H(X, h) iff profile[k] <= h(k) for every k: h is
    nondecreasing, so X V_i <= V_{h(i)} reduces to one column at a time.
    """
    n = X.n
    basis = gfp.Echelon(n, X.q)
    images = [X.apply(col) for col in f.columns]
    profile = [None] * n
    pending = []
    for k, v in enumerate(images):
        if any(v):
            pending.append(k)
        else:
            profile[k] = 0
    for m, col in enumerate(f.columns, start=1):
        basis.add(col)
        still = []
        for k in pending:
            if any(basis.reduce(images[k])):
                still.append(k)
            else:
                profile[k] = m
        pending = still
    return tuple(profile)


def _profile_member(profile, h: HessenbergFunction) -> bool:
    return all(m <= hv for m, hv in zip(profile, h.values))


def hessenberg_member(f: FqFlag, X: FqMatrix, h: HessenbergFunction) -> bool:
    """Decide X V_i <= V_{h(i)} for all i by rank comparison over F_q."""
    _check_sizes(f.cell.n, X, h)
    if f.q != X.q:
        raise InvalidInput(f"flag over F_{f.q} but X over F_{X.q}")
    n, q = X.n, X.q
    cols = f.columns
    for i in range(1, n + 1):
        span = cols[:h(i)]
        base = gfp.rank(span, n, q)
        extended = gfp.rank(list(span) + [X.apply(c) for c in cols[:i]], n, q)
        if extended != base:
            return False
    return True


class CellBatch:
    """
    Every flag of one Schubert cell at once.

    ``columns[f, r, c]`` is entry (r+1, c+1) of the representative of flag f;
    flags are ordered as in :func:`enumerate_flags`.
    """

    def __init__(self, cell: Permutation, q: int):
        n = cell.n
        self.cell = cell
        self.q = q
        self.free = sorted(free_positions(cell))
        k = len(self.free)
        size = q ** k
        # row t holds the base-q digits of t, most significant first
        powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        self.values = (np.arange(size, dtype=np.int64)[:, None] // powers) % q
        cols = np.zeros((size, n, n), dtype=np.int64)
        for c in range(1, n + 1):
            cols[:, cell(c) - 1, c - 1] = 1
        for t, (r, c) in enumerate(self.free):
            cols[:, r - 1, c - 1] = self.values[:, t]
        self.columns = cols

    def __len__(self):
        return len(self.values)

    def flags(self) -> Iterator[FqFlag]:
        for row in self.values.tolist():
            yield FqFlag(self.cell, tuple(zip(self.free, row)), self.q)

    def reduce(self, vectors: np.ndarray, upto: int) -> np.ndarray:
        """
        Residues of ``vectors`` (one per flag) after elimination by V_upto.

        Column c has a 1 in row cell(c) and every later column vanishes
        there, so clearing row cell(c) with column c in order 1..upto leaves
        zero exactly when the vector lies in V_upto.
        """
        r = vectors % self.q
        for c in range(upto):
            pivot = self.cell(c + 1) - 1
            r = (r - r[:, pivot, None] * self.columns[:, :, c]) % self.q
        return r

    def profiles(self, X: FqMatrix) -> np.ndarray:
        """Batched :func:`member_profile`, shape (flags, n)."""
        n, q = X.n, self.q
        xm = np.array(X.entries, dtype=np.uint8)
        cols = self.columns.astype(np.uint8)
        # r[i, k, f] = (X g_k)_i for flag f; rows lead so r[pivot] is contiguous
        r = (np.einsum("ij,fjk->ikf", xm, cols) % q).astype(np.uint8)
        by_row = np.ascontiguousarray(cols.transpose(1, 2, 0))
        undecided = r.any(axis=0)
        out = np.where(undecided, n, 0)
        for m in range(1, n):
            pivot = self.cell(m) - 1
            # add (q - pivot entry) times column m; stays below q^2 <= 169 in uint8
            coef = (q - r[pivot]) % q
            r += coef[None, :, :] * by_row[:, m - 1, None, :]
            np.remainder(r, q, out=r)
            zero = undecided & ~r.any(axis=0)
            out[zero] = m
            undecided &= ~zero
        # anything left over lies in V_n = F_q^n
        return out.T


def cell_batches(n: int, q: int) -> Iterator[CellBatch]:
    _check_budget(n, q)
    for w in sorted(all_permutations(n), key=lambda w: (length(w), w.images)):
        yield CellBatch(w, q)


class ProfileScan:
    """Member profiles of every flag for one fixed X, reusable across many h."""

    def __init__(self, X: FqMatrix):
        self.X = X
        self.batches = list(cell_batches(X.n, X.q))
        self.profiles = [b.profiles(X) for b in self.batches]

    def _check(self, h: HessenbergFunction):
        if h.n != self.X.n:
            raise DimensionMismatch(f"h has n={h.n}, X has n={self.X.n}")

    def members(self, h: HessenbergFunction) -> list[np.ndarray]:
        """One boolean array per cell, aligned with ``batches``."""
        self._check(h)
        hv = np.array(h.values, dtype=np.int64)
        return [(p <= hv).all(axis=1) for p in self.profiles]

    def count(self, h: HessenbergFunction) -> int:
        return int(sum(m.sum() for m in self.members(h)))

    def flags(self) -> Iterator[FqFlag]:
        for b in self.batches:
            yield from b.flags()

    def member_flags(self, h: HessenbergFunction) -> Iterator[FqFlag]:
        for b, m in zip(self.batches, self.members(h)):
            for f, ok in zip(b.flags(), m.tolist()):
                if ok:
                    yield f


def point_count(X: FqMatrix, h: HessenbergFunction, q: int) -> int:
    if q != X.q:
        raise InvalidInput(f"X is over F_{X.q}, asked to count over F_{q}")
    _check_sizes(X.n, X, h)
    return ProfileScan(X).count(h)


class CellUnionCounts(NamedTuple):
    count: int
    predicted: int
    consistent: bool


def cell_union_counts(h: HessenbergFunction, q: int, scan: ProfileScan | None = None) -> CellUnionCounts:
    """
    Compare the F_q count of H(E_1n, h) with the sum of q^l(s) over cells s
    whose permutation flag passes, and check every flag agrees with its cell.
    """
    if scan is None:
        scan = ProfileScan(preset_matrix("e1n", h.n, q))
    elif scan.X != preset_matrix("e1n", h.n, q):
        raise InvalidInput("cell_union_counts needs a scan of X = E_1n over the same field")
    count = predicted = 0
    consistent = True
    for b, m in zip(scan.batches, scan.members(h)):
        expected = cell_in_variety(b.cell, h)
        count += int(m.sum())
        if expected:
            predicted += q ** length(b.cell)
        if not (m == expected).all():
            consistent = False
    return CellUnionCounts(count, predicted, consistent)


def verify_cell_union(h: HessenbergFunction, q: int) -> bool:
    res = cell_union_counts(h, q)
    return res.consistent and res.count == res.predicted


def verify_not_cell_union(X: FqMatrix, h: HessenbergFunction, q: int) -> bool:
    """True iff some Schubert cell holds both a member and a non-member flag."""
    if q != X.q:
        raise InvalidInput(f"X is over F_{X.q}, asked to scan over F_{q}")
    _check_sizes(X.n, X, h)
    return any(m.any() and not m.all() for m in ProfileScan(X).members(h))


def _semisimple_setup(n: int, q: int):
    if n < 2:
        raise InvalidInput("the semisimple example needs n >= 2")
    X = preset_matrix("semisimple-example", n, q)
    h = HessenbergFunction(tuple([n - 1] * (n - 1) + [n]))
    return X, h


def verify_semisimple_example(n: int, q: int) -> tuple[int, int]:
    """(predicted, actual) point counts for X = sum_{i<n} E_ii, h = (n-1,...,n-1,n)."""
    X, h = _semisimple_setup(n, q)
    predicted = flag_count(n - 1, q) * (1 + projective_count(n - 2, q))
    return predicted, point_count(X, h, q)


class SemisimpleSplit(NamedTuple):
    bundle: int    # e_n in V_{n-1}
    flat: int      # V_{n-1} = <e_1, ..., e_{n-1}>
    other: int     # members in neither class; must be 0


def semisimple_partition(n: int, q: int) -> SemisimpleSplit:
    X, h = _semisimple_setup(n, q)
    scan = ProfileScan(X)
    bundle = flat = other = 0
    for b, m in zip(scan.batches, scan.members(h)):
        e_n = np.zeros((len(b), n), dtype=np.int64)
        e_n[:, n - 1] = 1
        contains_en = ~b.reduce(e_n, n - 1).any(axis=1)
        is_coordinate = ~b.columns[:, n - 1, :n - 1].any(axis=1)
        bundle += int((m & contains_en & ~is_coordinate).sum())
        flat += int((m & is_coordinate & ~contains_en).sum())
        other += int((m & (contains_en == is_coordinate)).sum())
    return SemisimpleSplit(bundle, flat, other)


def is_nilpotent(X: FqMatrix) -> bool:
    power = gfp.matpow(X.entries, X.n, X.q)
    return not any(any(row) for row in power)


def verify_equivalence(X: FqMatrix, h: HessenbergFunction, h2: HessenbergFunction, q: int) -> bool:
    """Flag-by-flag equality of H(X, h) and H(X, h2) for nilpotent X."""
    if q != X.q:
        raise InvalidInput(f"X is over F_{X.q}, asked to scan over F_{q}")
    _check_sizes(X.n, X, h)
    _check_sizes(X.n, X, h2)
    if not is_nilpotent(X):
        raise HypothesisViolation("X is not nilpotent over F_q (X^n != 0)")
    scan = ProfileScan(X)
    return all((a == b).all() for a, b in zip(scan.members(h), scan.members(h2)))


def flag_signature(columns, q: int) -> tuple:
    """Canonical form of the flag spanned by ``columns``: the RREF of each V_i."""
    n = len(columns)
    sig = []
    for i in range(1, n + 1):
        rows = [list(c) for c in columns[:i]]
        sig.append(_rref(rows, q))
    return tuple(sig)


def _rref(rows, p: int) -> tuple:
    rows = [[x % p for x in r] for r in rows]
    width = len(rows[0]) if rows else 0
    lead = 0
    for col in range(width):
        piv = next((r for r in range(lead, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = pow(rows[lead][col], -1, p)
        rows[lead] = [(x * inv) % p for x in rows[lead]]
        for r in range(len(rows)):
            if r != lead and rows[r][col]:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[lead])]
        lead += 1
    return tuple(tuple(r) for r in rows[:lead])
