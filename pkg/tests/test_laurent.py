from __future__ import annotations

import math

from sseala.laurent import (
    add,
    derivative_at_one,
    falling,
    lp_one,
    monomial,
    mul,
    multi_indices,
    scale,
    serialize,
    sub,
    vanishing_order_at_one,
)
from sseala.sampling import Stream
from sseala.scalars import Q


def one_minus(r):
    n = len(r)
    return sub(lp_one(n), monomial(r))


def test_mul_monomials():
    f = mul(monomial((1, -2)), monomial((3, 1)))
    assert f == {(4, -1): Q(1)}


def test_mul_identity():
    f = add(monomial((2, 0), Q(3)), monomial((-1, 1), Q(-1, 2)))
    assert mul(f, lp_one(2)) == f


def test_expansion():
    f = mul(one_minus((1, 0)), one_minus((0, 1)))
    assert f == {
        (0, 0): Q(1),
        (1, 0): Q(-1),
        (0, 1): Q(-1),
        (1, 1): Q(1),
    }


def test_zero_coefficients_dropped():
    f = sub(monomial((1, 1)), monomial((1, 1)))
    assert f == {}
    assert scale(monomial((1, 0)), 0) == {}


def test_falling_factorial():
    assert falling(5, 0) == 1
    assert falling(5, 2) == 20
    assert falling(-2, 3) == -24
    assert falling(2, 4) == 0


def test_derivative_examples():
    assert derivative_at_one(monomial((3, -5)), (0, 0)) == Q(1)
    f = mul(one_minus((1, 0)), one_minus((0, 1)))
    assert derivative_at_one(f, (1, 1)) == Q(1)
    assert derivative_at_one(f, (1, 0)) == Q(0)


def test_derivative_is_linear():
    s = Stream(21, "laurent-linear")
    for _ in range(40):
        f = {s.vec(2, 3): s.rational(nonzero=True) for _ in range(3)}
        g = {s.vec(2, 3): s.rational(nonzero=True) for _ in range(3)}
        a = s.rational()
        alpha = (s.int_in(0, 2), s.int_in(0, 2))
        lhs = derivative_at_one(add(scale(f, a), g), alpha)
        rhs = a * derivative_at_one(f, alpha) + derivative_at_one(g, alpha)
        assert lhs == rhs


def test_derivative_leibniz_rule():
    s = Stream(22, "laurent-leibniz")
    for _ in range(30):
        f = {s.vec(2, 2): s.rational(nonzero=True) for _ in range(2)}
        g = {s.vec(2, 2): s.rational(nonzero=True) for _ in range(2)}
        for alpha in [(1, 0), (1, 1), (2, 1)]:
            lhs = derivative_at_one(mul(f, g), alpha)
            rhs = Q(0)
            for b0 in range(alpha[0] + 1):
                for b1 in range(alpha[1] + 1):
                    c = math.comb(alpha[0], b0) * math.comb(alpha[1], b1)
                    rhs += c * derivative_at_one(f, (b0, b1)) * derivative_at_one(
                        g, (alpha[0] - b0, alpha[1] - b1)
                    )
            assert lhs == rhs


def test_vanishing_order_examples():
    assert vanishing_order_at_one(one_minus((2, -1)), 5) == 1
    f = mul(one_minus((1, 0)), one_minus((0, 1)))
    assert vanishing_order_at_one(f, 5) == 2
    assert vanishing_order_at_one(monomial((4, 7)), 5) == 0
    assert vanishing_order_at_one({}, 5) == 5


def test_vanishing_order_saturates_at_qmax():
    f = mul(one_minus((1, 0)), one_minus((0, 1)))
    assert vanishing_order_at_one(f, 2) == 2
    assert vanishing_order_at_one(f, 1) == 1


def test_vanishing_order_additive_on_products():
    s = Stream(23, "laurent-orders")
    for _ in range(25):
        f = mul(one_minus(s.vec(2, 2, nonzero=True)), monomial(s.vec(2, 2)))
        g = mul(
            one_minus(s.vec(2, 2, nonzero=True)),
            one_minus(s.vec(2, 2, nonzero=True)),
        )
        of = vanishing_order_at_one(f, 6)
        og = vanishing_order_at_one(g, 6)
        assert vanishing_order_at_one(mul(f, g), 6) == min(of + og, 6)


def test_multi_indices():
    assert list(multi_indices(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(multi_indices(3, 4))) == math.comb(3 + 3, 3)


def test_serialize_canonical():
    f = add(monomial((1, 0), Q(1, 2)), monomial((-1, 2), Q(-3)))
    assert serialize(f) == [
        {"exp": [-1, 2], "coef": "-3"},
        {"exp": [1, 0], "coef": "1/2"},
    ]
