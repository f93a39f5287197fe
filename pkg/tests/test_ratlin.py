from fractions import Fraction

import numpy as np
import pytest

from acbmetric import ratlin
from acbmetric.errors import SingularMetric


def test_parse_and_format():
    assert ratlin.parse_rational("-6/4") == Fraction(-3, 2)
    assert ratlin.parse_rational(" 7 ") == 7
    assert ratlin.format_rational(Fraction(-3, 2)) == "-3/2"
    assert ratlin.format_rational(Fraction(4, 2)) == "2"
    for bad in ("1/0", "0.5", "1e3", "", "1/-2", "x"):
        with pytest.raises(ValueError):
            ratlin.parse_rational(bad)


def test_floats_rejected():
    with pytest.raises(TypeError):
        ratlin.frac_array([0.5])


def test_invert_symmetric_examples():
    I5 = ratlin.identity(5)
    assert (ratlin.invert_symmetric(I5) == I5).all()
    g = ratlin.frac_array(np.diag([1, 1, 1, -1, -1]))
    assert (ratlin.invert_symmetric(g) == g).all()
    with pytest.raises(SingularMetric):
        ratlin.invert_symmetric(np.diag([1, 0]))
    with pytest.raises(ValueError):
        ratlin.invert_symmetric([[1, 2], [3, 4]])


def test_invert_non_diagonal():
    m = ratlin.frac_array([[2, 1, 0], [1, 0, "1/3"], [0, "1/3", -1]])
    assert (m.dot(ratlin.invert_symmetric(m)) == ratlin.identity(3)).all()


def test_signature_examples():
    assert ratlin.signature(np.diag([1, 1, 1, -1, -1])) == (3, 2, 0)
    assert ratlin.signature(ratlin.identity(3)) == (3, 0, 0)
    assert ratlin.signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert ratlin.signature([[0, 0], [0, 0]]) == (0, 0, 2)
    # all diagonal pivots vanish but the matrix has full rank
    assert ratlin.signature([[0, 1, 0], [1, 0, 0], [0, 0, 0]]) == (1, 1, 1)
    assert ratlin.signature([[1, 2], [2, 4]]) == (1, 0, 1)


def test_solve_affine_examples():
    s = ratlin.solve_affine(ratlin.identity(2), [1, 2])
    assert s.consistent and s.particular == (1, 2) and s.nullspace_basis == ()
    s = ratlin.solve_affine([[1, 1]], [0])
    assert s.particular == (0, 0) and s.nullspace_basis == ((-1, 1),)
    s = ratlin.solve_affine([[1], [1]], [0, 1])
    assert not s.consistent and s.dimension == -1


def test_solve_affine_rational_entries():
    A = ratlin.frac_array([["1/2", "1/3", 0], [0, "2/5", "-1/7"]])
    b = ratlin.frac_array(["1/6", "3"])
    s = ratlin.solve_affine(A, b)
    assert s.dimension == 1
    for c in (0, 1, Fraction(-7, 3)):
        assert (A.dot(s.point([c])) == b).all()


def test_certificate():
    A = ratlin.frac_array([[1, 2], [2, 4], [0, 1]])
    b = ratlin.frac_array([1, 3, 0])
    y = ratlin.inconsistency_certificate(A, b)
    assert ratlin.is_zero(y.dot(A)) and y.dot(b) != 0
    assert ratlin.inconsistency_certificate(A, [1, 2, 0]) is None


def test_rank_and_nullspace():
    A = ratlin.frac_array([[1, 2, 3], [2, 4, 6]])
    assert ratlin.rank(A) == 1
    assert all(ratlin.is_zero(A.dot(v)) for v in ratlin.nullspace(A))
