import pytest

from leonard.field import GF, Q
from leonard.matrix import Matrix, intersect, same_span, span_rank


def test_products_and_inverse():
    m = Matrix(Q, [[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(Q, 2)
    assert m.determinant() == 1
    assert m.trace() == 3


def test_singular():
    m = Matrix(GF(5), [[1, 2], [3, 6]])
    assert m.rank() == 1
    assert m.determinant() == 0
    with pytest.raises(ValueError):
        m.inverse()
    (k,) = m.nullspace()
    assert m.apply(k) == (0, 0)


def test_shapes():
    lower = Matrix(Q, [[1, 0, 0], [2, 3, 0], [0, 4, 5]])
    assert lower.is_lower_bidiagonal() and not lower.is_upper_bidiagonal()
    assert lower.transpose().is_upper_bidiagonal()
    tri = Matrix(Q, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert tri.is_irreducible_tridiagonal() and not tri.is_lower_bidiagonal()
    assert not Matrix(Q, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]).is_tridiagonal()
    assert Matrix.diagonal(Q, [1, 2]).is_diagonal()


def test_subspace_helpers():
    e = lambda *xs: tuple(Q(x) for x in xs)  # noqa: E731
    a = [e(1, 0, 0), e(0, 1, 0)]
    b = [e(0, 1, 0), e(0, 0, 1)]
    (v,) = intersect(Q, a, b)
    assert same_span(Q, [v], [e(0, 1, 0)])
    assert span_rank(Q, a + b) == 3
    assert not same_span(Q, a, b)


def test_format():
    m = Matrix(Q, [[1, -2], [3, 10]])
    assert m.format() == "1 -2\n3 10"
    assert m.format(pretty=True) == " 1 -2\n 3 10"
