import random
from fractions import Fraction

import pytest

from digrep.linalg import (DimensionError, FieldMismatchError, Matrix,
                           PrimeField, QQ, hstack, solve, span_basis,
                           contains, intersect, quotient_dim, sparse_kernel,
                           vstack)
from _oracles import matrix_rank_oracle


def rand_matrix(rng, rows, cols, lo=-4, hi=4):
    return Matrix.from_rows(QQ, [[rng.randint(lo, hi) for _ in range(cols)]
                                 for _ in range(rows)])


def test_field_parsing_and_formatting():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.fmt(Fraction(-5, 2)) == "-5/2"
    f5 = PrimeField(5)
    x = f5.parse("7")
    assert x == f5.of(2)
    assert f5.fmt(x) == "2"
    assert (f5.of(2) / f5.of(3)) * f5.of(3) == f5.of(2)
    with pytest.raises(ValueError):
        PrimeField(6)


def test_field_mixing_rejected():
    a = Matrix.identity(QQ, 2)
    b = Matrix.identity(PrimeField(3), 2)
    with pytest.raises(FieldMismatchError):
        a + b


def test_basic_shapes_and_arithmetic():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    b = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert (a * b).to_lists() == [[2, 1], [4, 3]]
    assert (a + b - b) == a
    assert a.transpose().transpose() == a
    assert (-a + a).is_zero()
    with pytest.raises(DimensionError):
        a * Matrix.identity(QQ, 3)
    with pytest.raises(DimensionError):
        Matrix(QQ, 2, 2, [QQ.of(1)] * 3)


def test_rref_and_rank_against_oracle():
    rng = random.Random(11)
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = rand_matrix(rng, rows, cols)
        assert m.rank() == matrix_rank_oracle(m.to_lists())
        r, piv = m.rref()
        assert len(piv) == m.rank()
        # pivot columns carry unit vectors
        for i, c in enumerate(piv):
            col = [r[k, c] for k in range(rows)]
            assert col[i] == 1 and all(x == 0 for k, x in enumerate(col) if k != i)


def test_kernel_basis_is_a_kernel_and_spans_it():
    rng = random.Random(12)
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = rand_matrix(rng, rows, cols)
        ker = m.kernel_basis()
        for v in ker:
            assert (m * v).is_zero()
        assert len(ker) == cols - m.rank()
        assert len(span_basis(ker)) == len(ker)


def test_solve_consistent_and_inconsistent():
    a = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    b = Matrix.column(QQ, [1, 2])
    x = solve(a, b)
    assert x is not None and a * x == b
    assert solve(a, Matrix.column(QQ, [1, 3])) is None
    rng = random.Random(13)
    for _ in range(20):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = rand_matrix(rng, rows, cols)
        x0 = rand_matrix(rng, cols, 1)
        b = m * x0
        x = solve(m, b)
        assert x is not None and m * x == b


def test_inverse_round_trip_and_singular():
    rng = random.Random(14)
    count = 0
    while count < 15:
        m = rand_matrix(rng, 3, 3)
        if m.rank() < 3:
            with pytest.raises(ZeroDivisionError):
                m.inverse()
            continue
        assert m * m.inverse() == Matrix.identity(QQ, 3)
        count += 1


def test_stack_operations():
    a = Matrix.from_rows(QQ, [[1, 2]])
    b = Matrix.from_rows(QQ, [[3, 4]])
    assert vstack([a, b]).to_lists() == [[1, 2], [3, 4]]
    assert hstack([a.transpose(), b.transpose()]).to_lists() == [[1, 3], [2, 4]]


def test_span_basis_is_canonical():
    rng = random.Random(15)
    for _ in range(20):
        n = rng.randint(1, 4)
        vecs = [rand_matrix(rng, n, 1) for _ in range(rng.randint(1, 4))]
        b1 = span_basis(vecs)
        shuffled = list(vecs)
        rng.shuffle(shuffled)
        scaled = [v.scale(QQ.of(rng.choice([1, 2, -3]))) for v in shuffled]
        b2 = span_basis(scaled + shuffled)
        assert b1 == b2
        for v in vecs:
            assert contains(b1, v)


def test_intersect_and_quotient_dim():
    e1 = Matrix.column(QQ, [1, 0, 0])
    e2 = Matrix.column(QQ, [0, 1, 0])
    e3 = Matrix.column(QQ, [0, 0, 1])
    inter = intersect([e1, e2], [e2, e3])
    assert inter == [e2]
    assert quotient_dim(3, [e1, e2]) == 1
    assert intersect([e1], [e3]) == []


def test_sparse_kernel_matches_dense():
    rng = random.Random(16)
    for _ in range(25):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        dense = rand_matrix(rng, rows, cols, -2, 2)
        sparse_rows = [{j: dense[i, j] for j in range(cols) if dense[i, j]}
                       for i in range(rows)]
        ker = sparse_kernel(cols, sparse_rows, QQ)
        for v in ker:
            assert (dense * v).is_zero()
        assert len(ker) == cols - dense.rank()
        assert span_basis(ker) == span_basis(dense.kernel_basis())


def test_prime_field_linear_algebra():
    f3 = PrimeField(3)
    m = Matrix.from_rows(f3, [[1, 2], [2, 2]])
    assert m.rank() == 2
    assert m * m.inverse() == Matrix.identity(f3, 2)
    sing = Matrix.from_rows(f3, [[1, 2], [2, 4]])
    assert sing.rank() == 1
    assert len(sing.kernel_basis()) == 1
