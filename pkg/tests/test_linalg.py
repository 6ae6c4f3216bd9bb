"""Exact linear algebra: rank, kernel, determinant, inverse."""

import random
from fractions import Fraction

import pytest

from ncph.coxeter import CoxeterDiagram, CoxeterSystem
from ncph.fields import quadratic_field, rationals
from ncph.linalg import Matrix, dot


def test_identity_rank():
    qq = rationals()
    assert Matrix.identity(qq, 3).rank() == 3


def test_kernel_of_two_independent_normals():
    system = CoxeterSystem(CoxeterDiagram.from_type("A", 3))
    normals = [root for _, root in system.reflections][:2]
    m = Matrix(system.field, normals)
    assert m.rank() == 2
    kernel = m.kernel()
    assert len(kernel) == 1
    for row in normals:
        assert dot(row, kernel[0]).is_zero()


def test_a2_rotation_determinant():
    # alpha1 = (1,0), alpha2 = (-1/2, sqrt3/2) over Q(sqrt3)
    field = quadratic_field(3)
    half = Fraction(1, 2)
    a1 = (field.one, field.zero)
    a2 = (field.from_rational(-half), field.theta * half)
    from ncph.coxeter import reflection_matrix
    c = reflection_matrix(field, a1) * reflection_matrix(field, a2)
    delta = Matrix.identity(field, 2) - c
    assert delta.det() == field.from_rational(3)
    assert delta.rank() == 2


def test_inverse_times_matrix_is_identity_up_to_dim8():
    random.seed(11)
    qq = rationals()
    for n in range(1, 9):
        while True:
            m = Matrix(qq, [[Fraction(random.randint(-6, 6),
                                      random.randint(1, 4))
                             for _ in range(n)] for _ in range(n)])
            if not m.det().is_zero():
                break
        assert m.inverse() * m == Matrix.identity(qq, n)


def test_inverse_over_quadratic_field():
    field = quadratic_field(5)
    random.seed(3)
    m = Matrix(field, [[field.from_coords((random.randint(-3, 3),
                                           random.randint(-2, 2)))
                        for _ in range(4)] for _ in range(4)])
    assert not m.det().is_zero()
    assert m.inverse() * m == Matrix.identity(field, 4)


def test_singular_matrix_rejected():
    qq = rationals()
    m = Matrix(qq, [[1, 2], [2, 4]])
    assert m.rank() == 1
    with pytest.raises(ValueError):
        m.inverse()
    assert m.det().is_zero()


def test_solve():
    qq = rationals()
    m = Matrix(qq, [[2, 1], [1, 3]])
    x = m.solve((qq.from_rational(5), qq.from_rational(10)))
    assert m.apply(x) == (qq.from_rational(5), qq.from_rational(10))
    inconsistent = Matrix(qq, [[1, 1], [1, 1]])
    assert inconsistent.solve((qq.from_rational(0), qq.from_rational(1))) is None
