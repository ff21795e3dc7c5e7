"""
Root systems of rank <= 4, their Weyl groups with Bruhat order, and the
highest-weight Hessenberg construction in general Lie type.

Roots are integer coordinate vectors over the simple roots (Bourbaki
numbering). The Cartan matrix convention is ``cartan[i][j] = <alpha_i^v,
alpha_j>``, so the simple reflection is s_i(b) = b - (sum_j b_j cartan[i][j])
alpha_i. Weyl group elements act on roots as permutations of the root list.

Root vectors E_a are symbolic: every bracket that matters is decided by root
addition, by a + (-a) landing in the Cartan subalgebra, and by the pairing of
a Cartan element with a root.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import BudgetExceeded, InvalidInput, NoSolution

__all__ = [
    "RootSystem", "WeylElement", "WeylGroup", "GeneralHessenbergSpace",
    "SUPPORTED", "WEYL_CEILING", "build_root_system", "parse_system",
    "parse_root", "succeq", "support", "neighborhood_support", "h_alpha",
    "bracket_closure", "is_bracket_closed", "weyl_group", "weyl_enumerate",
    "max_coset_rep", "highest_weight_sides", "verify_highest_weight_theorem",
    "type_a_root", "as_permutation",
]

Root = tuple[int, ...]

WEYL_CEILING = 1152


def _chain(r: int) -> list[list[int]]:
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        if i + 1 < r:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan(label: str, r: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix and squared simple-root lengths (short roots have 2)."""
    a = _chain(r)
    if label == "A":
        return a, [2] * r
    if label == "B":
        # alpha_r short
        a[r - 1][r - 2] = -2
        return a, [4] * (r - 1) + [2]
    if label == "C":
        # alpha_r long
        a[r - 2][r - 1] = -2
        return a, [2] * (r - 1) + [4]
    if label == "D":
        a = _chain(r)
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
        return a, [2] * r
    if label == "G":
        # alpha_1 short, alpha_2 long
        return [[2, -3], [-1, 2]], [2, 6]
    if label == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[2][1] = -2
        return a, [4, 4, 2, 2]
    raise InvalidInput(f"unknown type {label!r}")


SUPPORTED = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 4), ("G", 2), ("F", 4),
)


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    norms: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    lengths: dict[Root, str] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(_neg(b) for b in self.positive_roots)

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {b: k for k, b in enumerate(self.roots)}

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        # (alpha_i, alpha_j) = cartan[i][j] * |alpha_i|^2 / 2
        r = self.rank
        return tuple(tuple(self.cartan[i][j] * self.norms[i] // 2 for j in range(r))
                     for i in range(r))

    def inner(self, b: Root, c: Root) -> int:
        g = self.gram
        return sum(b[i] * g[i][j] * c[j] for i in range(self.rank) for j in range(self.rank)
                   if b[i] and c[j])

    def coroot_pairing(self, b: Root, i: int) -> int:
        """<alpha_i^v, b> for the simple index i (0-based)."""
        return sum(b[j] * self.cartan[i][j] for j in range(self.rank))

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i) for k in range(self.rank))

    def reflect(self, b: Root, i: int) -> Root:
        c = self.coroot_pairing(b, i)
        return tuple(x - c * int(k == i) for k, x in enumerate(b))

    def reflect_by(self, b: Root, a: Root) -> Root:
        """s_a(b) = b - 2(b,a)/(a,a) a."""
        c = 2 * self.inner(b, a) // self.inner(a, a)
        return tuple(x - c * y for x, y in zip(b, a))

    def is_root(self, b) -> bool:
        return tuple(b) in self.root_index

    def is_positive(self, b: Root) -> bool:
        return any(x > 0 for x in b)

    def is_long(self, b: Root) -> bool:
        return self.lengths[_pos(b)] == "long"

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] != 0


def _neg(b: Root) -> Root:
    return tuple(-x for x in b)


def _pos(b: Root) -> Root:
    return b if any(x > 0 for x in b) else _neg(b)


def _height(b: Root) -> int:
    return sum(b)


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Standard Cartan data; positive roots by closing the simple roots under reflections."""
    return _build(type_label.upper(), int(rank))


@lru_cache(maxsize=None)
def _build(label: str, rank: int) -> RootSystem:
    if (label, rank) not in SUPPORTED:
        raise InvalidInput(
            f"unsupported root system {label}{rank}; supported: "
            + ", ".join(f"{t}{r}" for t, r in SUPPORTED))
    cartan, norms = _cartan(label, rank)
    proto = RootSystem(label, rank, tuple(map(tuple, cartan)), tuple(norms), (), (), {})
    simple = [proto.simple_root(i) for i in range(rank)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        b = queue.popleft()
        for i in range(rank):
            c = proto.reflect(b, i)
            if c not in found:
                found.add(c)
                queue.append(c)
    positive = sorted((b for b in found if proto.is_positive(b)), key=lambda b: (_height(b), b))
    norm_of = {b: proto.inner(b, b) for b in positive}
    longest = max(norm_of.values())
    lengths = {b: "long" if v == longest else "short" for b, v in norm_of.items()}
    highest = max(positive, key=_height)
    return RootSystem(label, rank, proto.cartan, proto.norms, tuple(positive), highest, lengths)


def parse_system(text: str) -> RootSystem:
    """``"B3"`` -> B_3."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise InvalidInput(f"malformed root system label {text!r}")
    return build_root_system(text[0], int(text[1:]))


def parse_root(rs: RootSystem, text: str) -> Root:
    try:
        b = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise InvalidInput(f"malformed root coordinates {text!r}") from None
    if len(b) != rs.rank or not rs.is_root(b):
        raise InvalidInput(f"{text!r} is not a root of {rs.name}")
    return b


def succeq(a: Root, b: Root) -> bool:
    """a >= b: a - b is a nonnegative combination of simple roots."""
    return all(x >= y for x, y in zip(a, b))


def support(a: Root) -> frozenset[int]:
    """Simple indices (1-based) with nonzero coefficient."""
    return frozenset(k + 1 for k, x in enumerate(a) if x)


def neighborhood_support(rs: RootSystem, a: Root) -> frozenset[int]:
    supp = support(a)
    return supp | frozenset(
        j + 1 for j in range(rs.rank) for i in supp if rs.adjacent(i - 1, j))


@dataclass(frozen=True)
class GeneralHessenbergSpace:
    """Span of root vectors E_b (b in ``roots``) and Cartan elements h_i (i in ``toral``)."""
    roots: frozenset[Root]
    toral: frozenset[int]

    def to_dict(self, rs: RootSystem) -> dict:
        ordered = [b for b in rs.roots if b in self.roots]
        return {"roots": [list(b) for b in ordered], "toral": sorted(self.toral)}


def h_alpha(rs: RootSystem, a: Root) -> GeneralHessenbergSpace:
    """The smallest Hessenberg space containing E_a, by its closed description."""
    a = tuple(a)
    if not rs.is_root(a):
        raise InvalidInput(f"{a} is not a root of {rs.name}")
    if rs.is_positive(a):
        return GeneralHessenbergSpace(
            frozenset(b for b in rs.positive_roots if succeq(b, a)), frozenset())
    nbhd = neighborhood_support(rs, a)
    negative = {b for b in rs.roots if not rs.is_positive(b) and succeq(b, a)}
    positive = {b for b in rs.positive_roots if support(b) & nbhd}
    return GeneralHessenbergSpace(frozenset(negative | positive), support(a))


def bracket_closure(rs: RootSystem, seed) -> GeneralHessenbergSpace:
    """
    Smallest root/toral set containing ``seed`` and stable under [., b].

    Rules: E_b with E_g (g > 0) gives E_{b+g} when that is a root; E_{-a_i}
    with E_{a_i} gives h_i; h_i with E_g (g > 0) gives E_g when
    <alpha_i^v, g> != 0. For a non-simple -g the coroot of g lies in the span
    of h_i over supp(g), and every -a_i with i in supp(g) is reached from -g,
    so simple coroots suffice.
    """
    roots: set[Root] = set()
    toral: set[int] = set()
    todo_roots = deque()
    todo_toral = deque()
    for b in seed:
        b = tuple(b)
        if not rs.is_root(b):
            raise InvalidInput(f"{b} is not a root of {rs.name}")
        if b not in roots:
            roots.add(b)
            todo_roots.append(b)
    while todo_roots or todo_toral:
        while todo_roots:
            b = todo_roots.popleft()
            for g in rs.positive_roots:
                c = tuple(x + y for x, y in zip(b, g))
                if not any(c):
                    if sum(g) == 1:
                        i = g.index(1) + 1
                        if i not in toral:
                            toral.add(i)
                            todo_toral.append(i)
                elif rs.is_root(c) and c not in roots:
                    roots.add(c)
                    todo_roots.append(c)
        while todo_toral:
            i = todo_toral.popleft()
            for g in rs.positive_roots:
                if rs.coroot_pairing(g, i - 1) and g not in roots:
                    roots.add(g)
                    todo_roots.append(g)
    return GeneralHessenbergSpace(frozenset(roots), frozenset(toral))


def is_bracket_closed(rs: RootSystem, space: GeneralHessenbergSpace) -> bool:
    for b in space.roots:
        for g in rs.positive_roots:
            c = tuple(x + y for x, y in zip(b, g))
            if not any(c):
                if sum(g) == 1 and g.index(1) + 1 not in space.toral:
                    return False
            elif rs.is_root(c) and c not in space.roots:
                return False
    for i in space.toral:
        for g in rs.positive_roots:
            if rs.coroot_pairing(g, i - 1) and g not in space.roots:
                return False
    return True


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    action: tuple[int, ...] = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)


class WeylGroup:
    """
    All elements of W, each with a reduced word found by breadth-first search.

    ``down[k]`` is the Bruhat lower interval of ``elements[k]`` as an int
    bitmask, built from covers u < u t (t a reflection, lengths differing by
    one) and closed transitively in order of length.
    """

    def __init__(self, rs: RootSystem, ceiling: int = WEYL_CEILING):
        self.rs = rs
        roots = rs.roots
        idx = rs.root_index
        simple_perm = [tuple(idx[rs.reflect(b, i)] for b in roots) for i in range(rs.rank)]
        ident = tuple(range(len(roots)))
        self.elements: list[WeylElement] = [WeylElement((), ident)]
        self.index: dict[tuple[int, ...], int] = {ident: 0}
        queue = deque([0])
        while queue:
            w = self.elements[queue.popleft()]
            for i, s in enumerate(simple_perm):
                act = tuple(w.action[s[k]] for k in range(len(roots)))
                if act not in self.index:
                    if len(self.elements) >= ceiling:
                        raise BudgetExceeded(f"|W({rs.name})| exceeds {ceiling}")
                    self.index[act] = len(self.elements)
                    self.elements.append(WeylElement(w.word + (i + 1,), act))
                    queue.append(self.index[act])
        reflections = [tuple(idx[rs.reflect_by(b, a)] for b in roots) for a in rs.positive_roots]
        down = [0] * len(self.elements)
        for k, u in enumerate(self.elements):
            # BFS order is nondecreasing in length, so covers below u are done
            down[k] |= 1 << k
            for t in reflections:
                act = tuple(u.action[t[m]] for m in range(len(roots)))
                w = self.index[act]
                if self.elements[w].length == u.length + 1:
                    down[w] |= down[k]
        self.down = down
        theta = idx[rs.highest_root]
        # root index of u^-1(theta) for every u
        self.pullback_theta = [u.action.index(theta) for u in self.elements]

    def __len__(self):
        return len(self.elements)

    def leq(self, u: int, w: int) -> bool:
        return bool(self.down[w] >> u & 1)

    def by_word(self, word) -> int:
        act = tuple(range(len(self.rs.roots)))
        s = [tuple(self.rs.root_index[self.rs.reflect(b, i)] for b in self.rs.roots)
             for i in range(self.rs.rank)]
        for i in word:
            act = tuple(act[s[i - 1][m]] for m in range(len(act)))
        return self.index[act]

    def longest(self) -> WeylElement:
        return max(self.elements, key=lambda w: w.length)


@lru_cache(maxsize=None)
def _weyl_group_cached(label: str, rank: int) -> WeylGroup:
    return WeylGroup(_build(label, rank))


def weyl_group(rs: RootSystem) -> WeylGroup:
    return _weyl_group_cached(rs.type_label, rs.rank)


def weyl_enumerate(rs: RootSystem) -> list[WeylElement]:
    return list(weyl_group(rs).elements)


def _check_long(rs: RootSystem, a: Root):
    a = tuple(a)
    if not rs.is_root(a):
        raise InvalidInput(f"{a} is not a root of {rs.name}")
    if not rs.is_long(a):
        raise NoSolution(
            f"{a} is a short root of {rs.name}; no w in W has w^-1(theta) = {a}")
    return a


def _coset(rs: RootSystem, a: Root) -> list[int]:
    W = weyl_group(rs)
    target = rs.root_index[a]
    return [k for k, r in enumerate(W.pullback_theta) if r == target]


def max_coset_rep(rs: RootSystem, a: Root) -> WeylElement:
    """The unique Bruhat-maximal w with w^-1(theta) = a."""
    a = _check_long(rs, a)
    W = weyl_group(rs)
    coset = _coset(rs, a)
    tops = [w for w in coset if all(W.leq(u, w) for u in coset)]
    if len(tops) != 1:
        raise NoSolution(f"coset of {a} in {rs.name} has {len(tops)} Bruhat maxima")
    return W.elements[tops[0]]


def highest_weight_sides(rs: RootSystem, a: Root) -> tuple[int, int]:
    """
    Bitmasks over W of {u : u^-1(theta) in H_a} and {u : u <= w_max}.

    The first side is where E_{u^-1 theta} = u^-1 E_theta u lies in H_a; the
    second is the Schubert variety of the maximal coset element.
    """
    a = _check_long(rs, a)
    W = weyl_group(rs)
    space = h_alpha(rs, a)
    lhs = 0
    for k, r in enumerate(W.pullback_theta):
        if rs.roots[r] in space.roots:
            lhs |= 1 << k
    w = max_coset_rep(rs, a)
    return lhs, W.down[W.index[w.action]]


def verify_highest_weight_theorem(rs: RootSystem, a: Root) -> bool:
    lhs, rhs = highest_weight_sides(rs, a)
    return lhs == rhs


def type_a_root(i: int, j: int, n: int) -> Root:
    """Root of the matrix unit E_ij in A_{n-1}: e_i - e_j over simple roots."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidInput(f"need distinct 1 <= i, j <= {n}")
    lo, hi = min(i, j), max(i, j)
    sign = 1 if i < j else -1
    return tuple(sign if lo <= k + 1 < hi else 0 for k in range(n - 1))


def as_permutation(w: WeylElement, n: int):
    """Image of a type A_{n-1} Weyl element in S_n, via s_i -> s_{i,i+1}."""
    from .permcore import identity, right_multiply_transposition
    perm = identity(n)
    for i in w.word:
        perm = right_multiply_transposition(perm, i, i + 1)
    return perm
