"""Small dense linear algebra over a prime field F_p, on tuples of ints."""

from __future__ import annotations

from .errors import InvalidInput

Vector = tuple[int, ...]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def check_prime(q: int, limit: int = 13):
    if not is_prime(q) or q > limit:
        raise InvalidInput(f"q must be a prime <= {limit}, got {q}")


class Echelon:
    """
    Incrementally built echelon basis.

    Each inserted vector is reduced against the earlier ones and normalized
    to have 1 at its pivot, so sequential reduction by the first m vectors
    zeroes a vector exactly when it lies in their span.
    """

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v, upto: int | None = None) -> list[int]:
        p = self.p
        r = [x % p for x in v]
        for row, piv in zip(self.rows[:upto], self.pivots[:upto]):
            c = r[piv]
            if c:
                r = [(a - c * b) % p for a, b in zip(r, row)]
        return r

    def add(self, v) -> bool:
        """Insert v; returns False (and leaves the basis alone) if v is dependent."""
        r = self.reduce(v)
        for piv, x in enumerate(r):
            if x:
                inv = pow(x, -1, self.p)
                self.rows.append([(a * inv) % self.p for a in r])
                self.pivots.append(piv)
                return True
        return False


def rank(vectors, n: int, p: int) -> int:
    e = Echelon(n, p)
    for v in vectors:
        e.add(v)
    return e.rank


def matvec(m, v, p: int) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in m)


def matmul(a, b, p: int) -> tuple[Vector, ...]:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)


def identity(n: int) -> tuple[Vector, ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matpow(m, k: int, p: int) -> tuple[Vector, ...]:
    out = identity(len(m))
    for _ in range(k):
        out = matmul(out, m, p)
    return out


def inverse(m, p: int) -> tuple[Vector, ...]:
    """Gauss-Jordan inverse; raises InvalidInput for singular input."""
    n = len(m)
    aug = [[x % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise InvalidInput("matrix is singular over F_p")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(a - c * b) % p for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)
