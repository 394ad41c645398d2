"""Small exact linear algebra over the rationals.

Matrices are lists of rows, rows are lists of scalars from the active Q
backend (ints are accepted and coerced where convenient). Everything here is
dense and meant for the small systems this package solves; elimination uses
first-nonzero pivoting, which is deterministic and needs no magnitude
comparisons.
"""

from __future__ import annotations

from math import gcd

from .scalars import Q, ZERO

Matrix = list  # list[list[Q]]


def qmat(rows) -> Matrix:
    return [[Q(x) if isinstance(x, int) else x for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in bt] for row in a]


def mat_vec(a: Matrix, v) -> list:
    return [sum((x * y for x, y in zip(row, v)), ZERO) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        if any(x != y for x, y in zip(ra, rb)):
            return False
    return True


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (rows, pivot_columns).

    Zero rows are dropped from the result. Input is not mutated.
    """
    rows = [list(r) for r in a]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        prow = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[list]:
    """Basis of {v : a v = 0}, one vector per free column, in column order."""
    if not a:
        if ncols is None:
            return []
        return [[Q(1) if i == j else Q(0) for i in range(ncols)] for j in range(ncols)]
    n = len(a[0]) if ncols is None else ncols
    red, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Q(0)] * n
        v[free] = Q(1)
        for row, pcol in zip(red, pivots):
            v[pcol] = -row[free]
        basis.append(v)
    return basis


def det(a: Matrix):
    n = len(a)
    assert all(len(r) == n for r in a), "det needs a square matrix"
    rows = [list(r) for r in a]
    sign = 1
    result = Q(1)
    for col in range(n):
        sel = None
        for i in range(col, n):
            if rows[i][col] != 0:
                sel = i
                break
        if sel is None:
            return Q(0)
        if sel != col:
            rows[col], rows[sel] = rows[sel], rows[col]
            sign = -sign
        piv = rows[col][col]
        result = result * piv
        inv = 1 / piv
        for i in range(col + 1, n):
            if rows[i][col] != 0:
                f = rows[i][col] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return result if sign == 1 else -result


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(r) + [Q(1) if i == j else Q(0) for j in range(n)] for i, r in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def int_vec(v) -> tuple[int, ...]:
    """Coerce a rational vector with unit denominators to integers."""
    out = []
    for x in v:
        q = Q(x)
        n, d = q.numerator, q.denominator
        if d != 1:
            raise ValueError(f"entry {q} is not an integer")
        out.append(int(n))
    return tuple(out)


def int_mat(a: Matrix) -> list[list[int]]:
    return [list(int_vec(row)) for row in a]


def primitivize(v) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector.

    The first nonzero entry of the result is positive. Zero vectors are
    rejected.
    """
    dens = [x.denominator for x in v]
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("cannot primitivize the zero vector")
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


class RowSpace:
    """Incrementally built row space with exact membership tests.

    Rows are reduced against stored pivot rows on entry; a nonzero residual
    becomes a new pivot row normalized to leading coefficient 1. Membership
    of a vector in the span is a residual-is-zero test.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, list] = {}

    @property
    def dim(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row) -> list:
        r = [Q(x) if isinstance(x, int) else x for x in row]
        for col in sorted(self.pivot_rows):
            c = r[col]
            if c != 0:
                prow = self.pivot_rows[col]
                r = [x - c * y for x, y in zip(r, prow)]
        return r

    def add(self, row) -> bool:
        """Insert a row; returns True when it enlarged the space."""
        r = self.reduce(row)
        lead = None
        for i, x in enumerate(r):
            if x != 0:
                lead = i
                break
        if lead is None:
            return False
        inv = 1 / r[lead]
        self.pivot_rows[lead] = [x * inv for x in r]
        # keep stored rows mutually reduced so reduce() is a single pass
        for col, prow in list(self.pivot_rows.items()):
            if col == lead:
                continue
            c = prow[lead]
            if c != 0:
                newrow = self.pivot_rows[lead]
                self.pivot_rows[col] = [x - c * y for x, y in zip(prow, newrow)]
        return True

    def contains(self, row) -> bool:
        return all(x == 0 for x in self.reduce(row))
