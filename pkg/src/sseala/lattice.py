"""Skew-symmetric rational forms on the integer lattice ZZ^N.

A SkewForm bundles the matrix B with its radical {r in ZZ^N : Br = 0}. All
degree bookkeeping in the algebra modules runs through the pairing
(Br|s) = sum_i (Br)_i s_i, which is antisymmetric because B is.

Standard matrices: std_J(m) is the nondegenerate 2m x 2m block [[0, I], [-I, 0]],
std_J1(m) extends it to odd size 2m+1 with a rank-1 radical, and std_Jprime(m)
is diag(J, 0) of the same odd size.
"""

from __future__ import annotations

import json

from .linalg import Matrix, det, identity, mat_eq, matmul, nullspace, primitivize, qmat, rank, transpose
from .scalars import Q, ZERO, parse_q, qstr

Vec = tuple[int, ...]


def pivot(r) -> int:
    """Index of the first nonzero coordinate."""
    for i, x in enumerate(r):
        if x != 0:
            return i
    raise ValueError("zero vector has no pivot")


def add_vec(r: Vec, s: Vec) -> Vec:
    return tuple(r[i] + s[i] for i in range(len(r)))


def neg_vec(r: Vec) -> Vec:
    return tuple(-x for x in r)


def box(n: int, radius: int) -> list[Vec]:
    """All integer vectors with every coordinate in [-radius, radius], lex order."""
    out = [()]
    for _ in range(n):
        out = [v + (c,) for v in out for c in range(-radius, radius + 1)]
    return out


class SkewForm:
    """Validated skew-symmetric rational matrix with cached radical basis."""

    __slots__ = ("N", "B", "radical_basis", "tag")

    def __init__(self, entries: Matrix, tag: str = "custom"):
        n = len(entries)
        b = qmat(entries)
        for row in b:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(n):
                if b[i][j] != -b[j][i]:
                    raise ValueError(f"not skew-symmetric at ({i},{j})")
        self.N = n
        self.B = b
        self.radical_basis = tuple(primitivize(v) for v in nullspace(b, ncols=n))
        self.tag = tag

    def is_degenerate(self) -> bool:
        return bool(self.radical_basis)

    def apply(self, r) -> tuple:
        """Br as a rational vector."""
        if len(r) != self.N:
            raise ValueError(f"vector has length {len(r)}, form has N={self.N}")
        return tuple(sum((row[j] * r[j] for j in range(self.N)), ZERO) for row in self.B)

    def in_radical(self, r) -> bool:
        return all(x == 0 for x in self.apply(r))

    def describe(self) -> dict:
        return {"tag": self.tag, "n": self.N, "entries": [[qstr(x) for x in row] for row in self.B]}


def pairing(ctx: SkewForm, r, s) -> Q:
    """(Br|s), exact. Antisymmetric in (r, s)."""
    if len(r) != ctx.N or len(s) != ctx.N:
        raise ValueError("pairing: dimension mismatch")
    br = ctx.apply(r)
    return sum((br[i] * s[i] for i in range(ctx.N)), ZERO)


def radical(ctx: SkewForm) -> list[Vec]:
    """Primitive integer basis of {r : Br = 0}."""
    return list(ctx.radical_basis)


def congruence_check(A: list[list[int]], Bfrom: SkewForm, Bto: SkewForm) -> bool:
    """True iff A * Bfrom * A^T = Bto exactly and det(A) = +-1."""
    n = len(A)
    for row in A:
        if len(row) != n:
            raise ValueError("congruence_check: A is not square")
    if n != Bfrom.N or n != Bto.N:
        return False
    a = qmat(A)
    d = det(a)
    if d != 1 and d != -1:
        return False
    return mat_eq(matmul(matmul(a, Bfrom.B), transpose(a)), Bto.B)


def symplectic_basis(ctx: SkewForm) -> Matrix:
    """Rational A with A^T J A = B, for nondegenerate B of even size.

    Symplectic Gram-Schmidt: peel off hyperbolic pairs (v, w) with
    (Bv|w) = 1 and both spans isotropic, correcting the remaining vectors
    into the pair's pairing-complement at each step.
    """
    if ctx.is_degenerate():
        raise ValueError(f"symplectic_basis needs nondegenerate B; radical rank is {len(ctx.radical_basis)}")
    n = ctx.N
    assert n % 2 == 0, "nondegenerate skew form has even size"
    m = n // 2
    work = [list(row) for row in identity(n)]
    vs: list[list] = []
    ws: list[list] = []
    while work:
        v = work.pop(0)
        w = None
        for idx, cand in enumerate(work):
            p = pairing(ctx, v, cand)
            if p != 0:
                # normalize so pairing(v, w) = -1, matching (J e_{m+i} | e_i) = 1
                w = [-x / p for x in work.pop(idx)]
                break
        assert w is not None, "nondegenerate form must pair v with something"
        for u in work:
            a = pairing(ctx, w, u)
            b = -pairing(ctx, v, u)
            for i in range(n):
                u[i] = u[i] - a * v[i] - b * w[i]
        vs.append(v)
        ws.append(w)
    assert len(vs) == m
    # columns ordered so that P^T B P = J; then A = P^{-1} gives A^T J A = B
    p_cols = vs + ws
    pmat = [[p_cols[j][i] for j in range(n)] for i in range(n)]
    from .linalg import inverse

    a = inverse(pmat)
    jm = std_J(m)
    assert mat_eq(matmul(matmul(transpose(a), jm.B), a), ctx.B)
    return a


def std_J(m: int) -> SkewForm:
    """2m x 2m block matrix [[0, I],[-I, 0]]. Empty radical."""
    n = 2 * m
    b = [[0] * n for _ in range(n)]
    for i in range(m):
        b[i][m + i] = 1
        b[m + i][i] = -1
    return SkewForm(b, tag=f"J(m={m})")


def std_J1(m: int) -> SkewForm:
    """(2m+1) x (2m+1) degenerate extension of J with rank-1 radical.

    Top-left block J, last column (1,...,1,0), last row (-1,...,-1,0).
    """
    n = 2 * m + 1
    b = [[0] * n for _ in range(n)]
    for i in range(m):
        b[i][m + i] = 1
        b[m + i][i] = -1
    for i in range(2 * m):
        b[i][n - 1] = 1
        b[n - 1][i] = -1
    return SkewForm(b, tag=f"J1(m={m})")


def std_Jprime(m: int) -> SkewForm:
    """diag(J, 0) of size 2m+1."""
    n = 2 * m + 1
    b = [[0] * n for _ in range(n)]
    for i in range(m):
        b[i][m + i] = 1
        b[m + i][i] = -1
    return SkewForm(b, tag=f"Jprime(m={m})")


def find_congruence(Bfrom: SkewForm, Bto: SkewForm, max_entry: int = 1) -> list[list[int]] | None:
    """Search for integer A with det +-1 and A*Bfrom*A^T = Bto.

    Two strategies: a constructive completion that moves a rank-1 radical
    into the last coordinate (covers the J1 -> diag(J,0) family at every m),
    then a brute-force scan over small-entry matrices for N <= 3.
    """
    if Bfrom.N != Bto.N:
        return None
    if len(Bfrom.radical_basis) != len(Bto.radical_basis):
        return None
    n = Bfrom.N

    if len(Bfrom.radical_basis) == 1:
        g = Bfrom.radical_basis[0]
        p = max((i for i in range(n) if g[i] in (1, -1)), default=None)
        if p is not None:
            sign = g[p]
            last = [sign * x for x in g]
            rows = [[1 if j == i else 0 for j in range(n)] for i in range(n) if i != p]
            rows.append(last)
            if congruence_check(rows, Bfrom, Bto):
                return rows

    if n <= 3:
        from itertools import product

        vals = list(range(-max_entry, max_entry + 1))
        for flat in product(vals, repeat=n * n):
            a = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
            if congruence_check(a, Bfrom, Bto):
                return a
    return None


def load_matrix(path: str) -> SkewForm:
    """Read {"n": N, "entries": [["p/q", ...], ...]} and validate skewness."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "n" not in data or "entries" not in data:
        raise ValueError("matrix file must contain keys 'n' and 'entries'")
    n = data["n"]
    entries = data["entries"]
    if not isinstance(n, int) or len(entries) != n:
        raise ValueError("matrix file: entry grid does not match 'n'")
    rows = []
    for row in entries:
        if len(row) != n:
            raise ValueError("matrix file: ragged entry grid")
        rows.append([parse_q(cell) if isinstance(cell, str) else Q(cell) for cell in row])
    return SkewForm(rows, tag=path)


def save_matrix(ctx: SkewForm, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"n": ctx.N, "entries": [[qstr(x) for x in row] for row in ctx.B]}, fh, indent=2)
        fh.write("\n")


def random_skew(n: int, stream, nondegenerate: bool = False, max_num: int = 2, max_den: int = 2) -> SkewForm:
    """Random skew form with small rational entries drawn from the stream."""
    if nondegenerate and n % 2 != 0:
        raise ValueError("odd-size skew forms are always degenerate")
    while True:
        b = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                x = stream.rational(max_num, max_den)
                b[i][j] = x
                b[j][i] = -x
        ctx = SkewForm(b, tag="random")
        if not nondegenerate or rank(ctx.B) == n:
            return ctx
