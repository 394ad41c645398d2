"""Sparse Laurent polynomials over exact rationals in N variables.

A polynomial is a dict mapping integer exponent tuples to nonzero rational
coefficients. The key analytic device is differentiation evaluated at the
all-ones point: (d/dt)^a applied to t^n contributes the falling factorial
n(n-1)...(n-a+1), which is well-defined for negative exponents too. A
polynomial lies in the q-th power of the maximal ideal at (1,...,1) exactly
when all its derivatives of total order < q vanish there; that criterion is
cross-validated against brute-force spans in the filtration tests before
anything else relies on it.
"""

from __future__ import annotations

from .scalars import ONE, Q, ZERO, qstr

Vec = tuple[int, ...]
LaurentPoly = dict  # Vec -> Q, zero coefficients never stored


def lp_zero() -> LaurentPoly:
    return {}


def lp_one(n: int) -> LaurentPoly:
    return {(0,) * n: ONE}


def monomial(r: Vec, coeff=ONE) -> LaurentPoly:
    if coeff == 0:
        return {}
    return {tuple(r): Q(coeff)}


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    out = dict(f)
    for r, c in g.items():
        s = out.get(r, ZERO) + c
        if s == 0:
            out.pop(r, None)
        else:
            out[r] = s
    return out


def neg(f: LaurentPoly) -> LaurentPoly:
    return {r: -c for r, c in f.items()}


def sub(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return add(f, neg(g))


def scale(f: LaurentPoly, a) -> LaurentPoly:
    if a == 0:
        return {}
    return {r: a * c for r, c in f.items()}


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    out: LaurentPoly = {}
    for r, c in f.items():
        for s, d in g.items():
            key = tuple(r[i] + s[i] for i in range(len(r)))
            v = out.get(key, ZERO) + c * d
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return out


def falling(n: int, k: int) -> int:
    """n(n-1)...(n-k+1); handles negative n, and k=0 gives 1."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


def multi_indices(total: int, n: int):
    """All length-n tuples of non-negative ints summing to total, lex order."""
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in multi_indices(total - first, n - 1):
            yield (first,) + rest


def derivative_at_one(f: LaurentPoly, alpha: tuple[int, ...]) -> Q:
    """(d/dt)^alpha f evaluated at (1,...,1), exact."""
    out = ZERO
    for r, c in f.items():
        w = 1
        for j in range(len(alpha)):
            w *= falling(r[j], alpha[j])
            if w == 0:
                break
        if w:
            out = out + c * w
    return out


def vanishing_order_at_one(f: LaurentPoly, qmax: int, n: int | None = None) -> int:
    """Smallest q < qmax with some nonzero derivative of total order q at
    (1,...,1); returns qmax itself when every order below it vanishes."""
    assert qmax >= 0
    if not f:
        return qmax
    if n is None:
        n = len(next(iter(f)))
    for q in range(qmax):
        for alpha in multi_indices(q, n):
            if derivative_at_one(f, alpha) != 0:
                return q
    return qmax


def serialize(f: LaurentPoly) -> list[dict]:
    return [{"exp": list(r), "coef": qstr(f[r])} for r in sorted(f)]


def render(f: LaurentPoly) -> str:
    if not f:
        return "0"
    parts = []
    for r in sorted(f):
        parts.append(f"{qstr(f[r])}*t^{list(r)}")
    return " + ".join(parts)
