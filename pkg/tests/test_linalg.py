from __future__ import annotations

import pytest

from sseala.linalg import (
    RowSpace,
    det,
    identity,
    inverse,
    mat_eq,
    mat_vec,
    matmul,
    nullspace,
    primitivize,
    qmat,
    rank,
    rref,
    transpose,
)
from sseala.scalars import Q


def test_matmul_and_identity():
    a = qmat([[1, 2], [3, 4]])
    assert mat_eq(matmul(a, identity(2)), a)
    b = qmat([[0, 1], [1, 0]])
    assert matmul(a, b) == qmat([[2, 1], [4, 3]])


def test_transpose():
    a = qmat([[1, 2, 3], [4, 5, 6]])
    assert transpose(a) == qmat([[1, 4], [2, 5], [3, 6]])


def test_rref_and_rank():
    a = qmat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    rows, pivots = rref(a)
    assert pivots == [0, 1]
    assert rank(a) == 2
    # reduced rows reproduce the row space
    assert rank(rows) == 2


def test_rref_does_not_mutate_input():
    a = qmat([[2, 4], [1, 3]])
    before = [row[:] for row in a]
    rref(a)
    assert a == before


def test_nullspace_dimension_and_membership():
    a = qmat([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert all(x == 0 for x in mat_vec(a, v))


def test_nullspace_empty_matrix():
    basis = nullspace([], ncols=3)
    assert len(basis) == 3


def test_det_and_inverse():
    a = qmat([[2, 1], [1, 1]])
    assert det(a) == Q(1)
    inv = inverse(a)
    assert mat_eq(matmul(a, inv), identity(2))
    assert det(qmat([[1, 2], [2, 4]])) == Q(0)
    with pytest.raises(ValueError):
        inverse(qmat([[1, 2], [2, 4]]))


def test_det_sign_of_swap():
    a = qmat([[0, 1], [1, 0]])
    assert det(a) == Q(-1)


def test_primitivize():
    assert primitivize([Q(1, 2), Q(-1, 3)]) == (3, -2)
    assert primitivize([Q(-2), Q(4)]) == (1, -2)
    with pytest.raises(ValueError):
        primitivize([Q(0), Q(0)])


def test_rowspace_incremental():
    rs = RowSpace(3)
    assert rs.add([1, 2, 3])
    assert rs.add([0, 1, 1])
    assert not rs.add([1, 3, 4])
    assert rs.dim == 2
    assert rs.contains([2, 5, 7])
    assert not rs.contains([0, 0, 1])


def test_rowspace_matches_rank():
    rows = [[1, 2, 0, 1], [0, 1, 1, 0], [1, 3, 1, 1], [2, 0, 1, 5]]
    rs = RowSpace(4)
    for r in rows:
        rs.add(r)
    assert rs.dim == rank(qmat(rows))
