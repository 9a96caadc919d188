import numpy as np
import pytest
from gmpy2 import mpq

from strad import linalg as la
from strad.fields import QQ, PrimeField, parse_field


def test_rref_and_rank():
    a = la.asmatrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, piv = la.rref(a)
    assert piv == [0, 1]
    assert la.rank(a) == 2
    assert r[0, 0] == 1 and r[1, 1] == 1


def test_nullspace_is_annihilated():
    a = la.asmatrix(QQ, [[1, 2, 3], [2, 4, 6]])
    ns = la.nullspace(QQ, a)
    assert len(ns) == 2
    for v in ns:
        assert all(x == 0 for x in a.dot(v))


def test_solve_consistent_and_not():
    a = la.asmatrix(QQ, [[1, 1], [1, -1]])
    x = la.solve(QQ, a, np.array([QQ(3), QQ(1)], dtype=object))
    assert list(x) == [2, 1]
    b = la.asmatrix(QQ, [[1, 1], [2, 2]])
    assert la.solve(QQ, b, np.array([QQ(1), QQ(3)], dtype=object)) is None


def test_exact_rationals():
    a = la.asmatrix(QQ, [[3, 1], [1, 3]])
    x = la.solve(QQ, a, np.array([QQ(1), QQ(0)], dtype=object))
    assert x[0] == mpq(3, 8) and x[1] == mpq(-1, 8)


def test_prime_field_arithmetic():
    F = parse_field("fp:5")
    assert isinstance(F, PrimeField)
    x = F(3)
    assert x * F(2) == F(1)
    assert 1 / x == F(2)
    assert -x == F(2)
    a = la.asmatrix(F, [[1, 2], [2, 4]])
    assert la.rank(a) == 1


def test_parse_field_rejects_composite():
    with pytest.raises(ValueError):
        parse_field("fp:6")
    with pytest.raises(ValueError):
        parse_field("reals")


def test_row_basis_and_membership():
    vecs = [np.array([QQ(1), QQ(0), QQ(1)], dtype=object), np.array([QQ(2), QQ(0), QQ(2)], dtype=object)]
    basis, piv = la.row_basis(QQ, vecs, 3)
    assert len(piv) == 1
    assert la.in_span(np.array([QQ(5), QQ(0), QQ(5)], dtype=object), basis, piv)
    assert not la.in_span(np.array([QQ(0), QQ(1), QQ(0)], dtype=object), basis, piv)
