from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import matrices, square_matrices
from drazinkit.errors import ShapeError, SingularMatrixError
from drazinkit.matrix import Matrix, block, identity, zeros
from drazinkit.scalar import Scalar

M = Matrix.from_rows


def test_construction_is_canonical():
    assert M([["1/2", "2/4"]]) == M([[Fraction(1, 2), Fraction(1, 2)]])
    assert M([[2, 4]]) * Fraction(1, 2) == M([[1, 2]])
    assert M([[1j - 1j]]).is_real
    assert hash(M([["3/6"]])) == hash(M([["1/2"]]))


def test_indexing_and_slices():
    x = M([[1, 2, 3], [4, 5, "i"]])
    assert x[1, 2] == Scalar(Fraction(0), Fraction(1))
    assert x[:, 1:] == M([[2, 3], [5, "i"]])
    assert x.columns([2, 0]) == M([[3, 1], ["i", 4]])
    assert x.T.shape == (3, 2)


def test_add_examples():
    x = M([[1, "2/3"], ["i", 0]])
    assert x + zeros(2) == x
    assert M([[1]]) + M([["1/2"]]) == M([["3/2"]])
    assert (x + (-1) * x).is_zero


def test_mul_examples():
    x = M([[1, "2/3"], ["i", 0]])
    assert identity(2) @ x == x
    assert M([[0, 2], [0, 0]]) @ M([[0, 1], [0, -1]]) == M([[0, -2], [0, 0]])
    assert (M([[0, 1], [0, -1]]) @ M([[0, 2], [0, 0]])).is_zero


def test_pow_examples():
    x = M([[1, 2], [3, 4]])
    assert x ** 0 == identity(2)
    assert (M([[0, 1], [0, 0]]) ** 2).is_zero
    d = M([[-1, 1], [0, 0]])
    assert d ** 3 == d


def test_rank_examples():
    assert zeros(3, 2).rank() == 0
    assert identity(4).rank() == 4
    assert M([[0, 1], [0, -1]]).rank() == 1


def test_inverse_examples():
    assert identity(3).inverse() == identity(3)
    assert M([[2]]).inverse() == M([["1/2"]])
    assert M([[1, 1], [0, 1]]).inverse() == M([[1, -1], [0, 1]])
    with pytest.raises(SingularMatrixError):
        M([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ShapeError):
        zeros(2, 3).inverse()


def test_subspace_examples():
    assert identity(3).null_space_basis().shape == (3, 0)
    assert zeros(3).column_space_basis().shape == (3, 0)
    k = M([[0, 1], [0, 0]]).null_space_basis()
    assert k.shape == (2, 1) and k[1, 0] == Scalar() and k[0, 0] != Scalar()


def test_shape_errors():
    with pytest.raises(ShapeError):
        zeros(2, 3) @ zeros(2, 3)
    with pytest.raises(ShapeError):
        zeros(2) + zeros(3)
    with pytest.raises(ShapeError):
        block([[zeros(2), zeros(3)]])


def test_block_assembly():
    a, b = M([[1]]), M([[2, 3]])
    c, d = M([[4], [5]]), M([[6, 7], [8, 9]])
    assert block([[a, b], [c, d]]) == M([[1, 2, 3], [4, 6, 7], [5, 8, 9]])


@given(st.data())
def test_associativity(data):
    p, q, r, s = (data.draw(st.integers(1, 4)) for _ in range(4))
    x = data.draw(matrices(rows=p, cols=q))
    y = data.draw(matrices(rows=q, cols=r))
    z = data.draw(matrices(rows=r, cols=s))
    assert (x @ y) @ z == x @ (y @ z)
    assert identity(p) @ x == x == x @ identity(q)


@given(matrices(max_size=6))
def test_rank_nullity_and_transpose(x):
    r = x.rank()
    assert r == x.T.rank()
    assert x.column_space_basis().cols == r
    kernel = x.null_space_basis()
    assert kernel.cols == x.cols - r
    assert (x @ kernel).is_zero


@given(square_matrices(max_size=5))
def test_inverse_when_full_rank(x):
    if x.rank() == x.rows:
        inv = x.inverse()
        assert inv @ x == identity(x.rows) == x @ inv
    else:
        with pytest.raises(SingularMatrixError):
            x.inverse()


@given(matrices(max_size=4))
def test_text_round_trip(x):
    assert Matrix.from_rows(x.to_strings()) == x
