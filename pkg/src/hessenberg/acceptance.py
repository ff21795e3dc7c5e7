"""
Desk-scale acceptance suite.

Each criterion returns an :class:`Outcome`; a criterion passes only if its
check holds exactly and it finishes inside its time limit. ``run_all`` is
what ``hessenberg selftest`` and ``tests/test_acceptance.py`` execute.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .fforacle import (
    ProfileScan, cell_union_counts, flag_count, preset_matrix, projective_count,
    semisimple_partition, verify_semisimple_example,
)
from .hessfn import Corner, HessenbergFunction, all_hessenberg_functions, minimize_nilpotent
from .hwdecomp import (
    apply_word, brute_force_components, corner_dimension, corner_factorization,
    corner_permutation, decompose,
)
from .permcore import Permutation, bruhat_table, length, longest_element
from .rootsys import (
    as_permutation, bracket_closure, build_root_system, h_alpha, max_coset_rep,
    type_a_root, verify_highest_weight_theorem, weyl_group, SUPPORTED,
)


@dataclass
class Outcome:
    number: int
    title: str
    correct: bool
    seconds: float
    limit: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.correct and self.seconds < self.limit

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        timing = f"{_fmt(self.seconds)} < {_fmt(self.limit)}" if self.seconds < self.limit \
            else f"{_fmt(self.seconds)} >= {_fmt(self.limit)} (too slow)"
        return f"[{verdict}] {self.number:2d}. {self.title}: {self.detail} [{timing}]"


def _fmt(sec: float) -> str:
    return f"{sec * 1e3:.3g} ms" if sec < 1 else f"{sec:.3g} s"


def _timed(fn: Callable[[], tuple[bool, str]], repeats: int = 1) -> tuple[bool, str, float]:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        ok, detail = fn()
        best = min(best, time.perf_counter() - t0)
    return ok, detail, best


def criterion_1() -> Outcome:
    s1, s2 = Permutation((2, 1, 3)), Permutation((1, 3, 2))

    def check():
        rep = decompose(minimize_nilpotent(HessenbergFunction((1, 2, 3))), with_cells=False)
        perms = {w for _, w, _ in rep.components}
        ok = perms == {s1, s2} and rep.dimensions() == [1, 1] and len(rep.components) == 2
        return ok, f"components {sorted(str(w) for w in perms)} dims {rep.dimensions()}"

    ok, detail, sec = _timed(check, repeats=5)
    return Outcome(1, "n=3 worked example Y_s1 u Y_s2", ok, sec, 1e-3, detail)


def criterion_2() -> Outcome:
    def check():
        h = HessenbergFunction((4, 4, 4, 5, 5))
        rep = decompose(h, with_cells=False)
        ok = sorted(rep.dimensions()) == [7, 9] and rep.pure is False
        table = bruhat_table(5)
        union = 0
        for _, w, _ in rep.components:
            union |= table.lower_interval(w)
        members = table.members(union)
        parts = []
        for q in (2, 3):
            expected = sum(q ** length(s) for s in members)
            res = cell_union_counts(h, q)
            ok &= res.count == expected and res.consistent
            parts.append(f"q={q}: {res.count}/{expected}")
        return ok, f"dims {rep.dimensions()} pure={rep.pure}; " + ", ".join(parts)

    ok, detail, sec = _timed(check)
    return Outcome(2, "non-purity of H41 u H54 (n=5)", ok, sec, 1.0, detail)


def _corners_upto(nmax: int):
    for n in range(2, nmax + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield n, Corner(i, j)


def criterion_3() -> Outcome:
    def check():
        bad = [(n, c) for n, c in _corners_upto(8)
               if corner_dimension(c, n) != length(corner_permutation(c, n))]
        total = sum(1 for _ in _corners_upto(8))
        return not bad, f"{total} corners, {len(bad)} mismatches"

    ok, detail, sec = _timed(check)
    return Outcome(3, "dimension formula, n <= 8", ok, sec, 1.0, detail)


def criterion_4() -> Outcome:
    def check():
        bad = 0
        total = 0
        for n, c in _corners_upto(8):
            total += 1
            chain = apply_word(longest_element(n), corner_factorization(c, n))
            lengths = [length(p) for p in chain]
            steps_ok = all(b == a - 1 for a, b in zip(lengths, lengths[1:]))
            if chain[-1] != corner_permutation(c, n) or not steps_ok:
                bad += 1
        return bad == 0, f"{total} words, {bad} failures"

    ok, detail, sec = _timed(check)
    return Outcome(4, "factorization w0 * word, n <= 8", ok, sec, 1.0, detail)


def criterion_5() -> Outcome:
    def check():
        total = bad = 0
        for n in range(2, 7):
            for h in all_hessenberg_functions(n):
                total += 1
                brute = set(brute_force_components(h))
                rep = decompose(minimize_nilpotent(h), with_cells=False)
                if brute != {w for _, w, _ in rep.components}:
                    bad += 1
        return bad == 0, f"{total} functions (n=2..6), {bad} mismatches"

    ok, detail, sec = _timed(check)
    return Outcome(5, "component oracle, all h, n <= 6", ok, sec, 120.0, detail)


def criterion_6() -> Outcome:
    def check():
        total = bad = 0
        for n in range(1, 5):
            for q in (2, 3, 5):
                scan = ProfileScan(preset_matrix("e1n", n, q))
                for h in all_hessenberg_functions(n):
                    total += 1
                    res = cell_union_counts(h, q, scan)
                    if not (res.consistent and res.count == res.predicted):
                        bad += 1
        return bad == 0, f"{total} (h, q) pairs, {bad} mismatches"

    ok, detail, sec = _timed(check)
    return Outcome(6, "cell-union point counts, n <= 4, q in {2,3,5}", ok, sec, 60.0, detail)


def criterion_7() -> Outcome:
    def check():
        total = bad = 0
        for n in range(2, 5):
            for q in (2, 3):
                for name in ("e1n", "regular-nilpotent"):
                    scan = ProfileScan(preset_matrix(name, n, q))
                    for h in all_hessenberg_functions(n):
                        total += 1
                        a = scan.members(h)
                        b = scan.members(minimize_nilpotent(h))
                        if not all((x == y).all() for x, y in zip(a, b)):
                            bad += 1
        return bad == 0, f"{total} (X, h, q) triples, {bad} differing member sets"

    ok, detail, sec = _timed(check)
    return Outcome(7, "nilpotent X-equivalence, n <= 4, q in {2,3}", ok, sec, 60.0, detail)


def criterion_8() -> Outcome:
    def check():
        ok = True
        parts = []
        for n in (3, 4):
            for q in (2, 3):
                predicted, actual = verify_semisimple_example(n, q)
                formula = flag_count(n - 1, q) * (1 + projective_count(n - 2, q))
                split = semisimple_partition(n, q)
                ok &= predicted == actual == formula
                ok &= split.flat == flag_count(n - 1, q)
                ok &= split.bundle == projective_count(n - 2, q) * flag_count(n - 1, q)
                ok &= split.other == 0
                parts.append(f"n={n},q={q}: {actual}={split.bundle}+{split.flat}")
        return ok, "; ".join(parts)

    ok, detail, sec = _timed(check)
    return Outcome(8, "semisimple non-pure example", ok, sec, 60.0, detail)


THEOREM_SYSTEMS = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4), ("D", 4), ("G", 2), ("F", 4),
]


def criterion_9() -> Outcome:
    def check():
        total = bad = 0
        for label, rank in THEOREM_SYSTEMS:
            rs = build_root_system(label, rank)
            W = weyl_group(rs)
            theta = rs.root_index[rs.highest_root]
            stab = sum(1 for r in W.pullback_theta if r == theta)
            for a in rs.roots:
                if not rs.is_long(a):
                    continue
                total += 1
                coset = sum(1 for r in W.pullback_theta if rs.roots[r] == a)
                # max_coset_rep raises unless the Bruhat maximum is unique
                max_coset_rep(rs, a)
                if coset != stab or not verify_highest_weight_theorem(rs, a):
                    bad += 1
        return bad == 0, f"{total} long roots over {len(THEOREM_SYSTEMS)} systems, {bad} failures"

    ok, detail, sec = _timed(check)
    return Outcome(9, "H(E_theta, H_alpha) = Y_w in general type", ok, sec, 300.0, detail)


def criterion_10() -> Outcome:
    def check():
        total = bad = 0
        for label, rank in SUPPORTED:
            rs = build_root_system(label, rank)
            for a in rs.roots:
                total += 1
                if h_alpha(rs, a) != bracket_closure(rs, [a]):
                    bad += 1
        return bad == 0, f"{total} roots over {len(SUPPORTED)} systems, {bad} mismatches"

    ok, detail, sec = _timed(check)
    return Outcome(10, "H_alpha = bracket closure of E_alpha", ok, sec, 60.0, detail)


def criterion_11() -> Outcome:
    def check():
        total = bad = 0
        for n in range(2, 6):
            rs = build_root_system("A", n - 1)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    total += 1
                    w = max_coset_rep(rs, type_a_root(i, j, n))
                    if as_permutation(w, n) != corner_permutation(Corner(i, j), n):
                        bad += 1
        return bad == 0, f"{total} roots (n=2..5), {bad} mismatches"

    ok, detail, sec = _timed(check)
    return Outcome(11, "type-A bridge: max coset rep = corner permutation", ok, sec, 1.0, detail)


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
]


def run_all(echo: Callable[[str], None] | None = print) -> list[Outcome]:
    results = []
    for crit in CRITERIA:
        out = crit()
        results.append(out)
        if echo:
            echo(out.line())
    return results
