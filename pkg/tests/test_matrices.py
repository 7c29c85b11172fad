import random

import pytest

from tsrforge.errors import DimensionMismatch, NonSquareMatrix, ZeroConstantTerm
from tsrforge.fields import make_field
from tsrforge.matrices import (Matrix, companion_matrix, matrix_charpoly,
                               matrix_det, matrix_is_invertible)
from tsrforge.polys import Polynomial, format_poly, parse_poly


def _rand_matrix(rng, field, n):
    return Matrix.from_rows(field, [[field.element(rng.randrange(field.order))
                                     for _ in range(n)] for _ in range(n)])


def test_companion_layout():
    f2 = make_field(2)
    C = companion_matrix(parse_poly("x^2 + x + 1", f2))
    assert [[e.int_value for e in C.row(i)] for i in range(2)] == [[0, 1], [1, 1]]
    f5 = make_field(5)
    C5 = companion_matrix(parse_poly("x^3 + 2x^2 + 3x + 4", f5))
    # subdiagonal ones, last column holds negated coefficients
    assert [[e.int_value for e in C5.row(i)] for i in range(3)] == [
        [0, 0, 1], [1, 0, 2], [0, 1, 3]]


def test_companion_charpoly_round_trip():
    rng = random.Random(3)
    for q in (2, 3, 4, 9):
        field = make_field(q)
        for _ in range(25):
            n = rng.randrange(1, 5)
            coeffs = [field.element(rng.randrange(q)) for _ in range(n)] + [field.one()]
            f = Polynomial.make(field, coeffs)
            assert matrix_charpoly(companion_matrix(f)) == f


def test_companion_requires_monic_input_shape():
    f3 = make_field(3)
    with pytest.raises(ValueError):
        companion_matrix(Polynomial.constant(f3, f3.one()))


def test_matrix_ring_laws():
    rng = random.Random(7)
    f4 = make_field(4)
    for _ in range(25):
        A = _rand_matrix(rng, f4, 3)
        B = _rand_matrix(rng, f4, 3)
        C = _rand_matrix(rng, f4, 3)
        assert (A + B) + C == A + (B + C)
        assert A * (B + C) == A * B + A * C
        assert (A * B) * C == A * (B * C)
        I = Matrix.identity(f4, 3)
        assert A * I == A and I * A == A


def test_det_multiplicative():
    rng = random.Random(13)
    f5 = make_field(5)
    for _ in range(30):
        A = _rand_matrix(rng, f5, 3)
        B = _rand_matrix(rng, f5, 3)
        assert matrix_det(A * B) == matrix_det(A) * matrix_det(B)


def test_invertibility_matches_det():
    rng = random.Random(19)
    f3 = make_field(3)
    for _ in range(40):
        A = _rand_matrix(rng, f3, 2)
        assert matrix_is_invertible(A) == (not matrix_det(A).is_zero())


def test_charpoly_known():
    f2 = make_field(2)
    A = Matrix.from_rows(f2, [[1, 1], [0, 1]])
    # (x-1)^2 = x^2 + 1 over F_2
    assert format_poly(matrix_charpoly(A)) == "x^2 + 1"
    f3 = make_field(3)
    B = Matrix.from_rows(f3, [[0, 1], [2, 0]])
    assert format_poly(matrix_charpoly(B)) == "x^2 + 1"


def test_cayley_hamilton_random():
    rng = random.Random(29)
    for q in (2, 3, 9):
        field = make_field(q)
        for _ in range(15):
            n = rng.randrange(1, 4)
            A = _rand_matrix(rng, field, n)
            chi = matrix_charpoly(A)
            acc = Matrix.zeros(field, n, n)
            for i, c in enumerate(chi.coeffs):
                acc = acc + A.power(i).scale(c)
            assert acc == Matrix.zeros(field, n, n)


def test_apply_and_power():
    f2 = make_field(2)
    A = Matrix.from_rows(f2, [[0, 1], [1, 1]])
    v = (f2.one(), f2.zero())
    assert A.apply(v) == (f2.zero(), f2.one())
    assert A.power(0) == Matrix.identity(f2, 2)
    assert A.power(3) == A * A * A


def test_shape_errors():
    f2 = make_field(2)
    with pytest.raises(DimensionMismatch):
        Matrix.from_rows(f2, [[1, 0], [1]])
    A = Matrix.from_rows(f2, [[1, 0], [0, 1]])
    B = Matrix.from_rows(f2, [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(DimensionMismatch):
        _ = A + B
    with pytest.raises(NonSquareMatrix):
        matrix_charpoly(B)
    with pytest.raises(NonSquareMatrix):
        matrix_det(B)
