"""Exact matrices: rank/kernel, Bareiss determinants, Pfaffians."""

import random

import pytest

from polegeom.fields import GF, QQ
from polegeom.forms import catalog_form
from polegeom.linalg import (
    Matrix,
    PolyMatrix,
    determinant,
    pfaffian,
    random_alternating,
    random_invertible,
)
from polegeom.poles import contraction_matrix, symbolic_matrix
from polegeom.poly import MultiPoly, parse_poly


def test_zero_matrix_rank():
    m = Matrix.zero(GF(5), 3, 3)
    rank, kernel = m.rank_and_kernel()
    assert rank == 0
    assert len(kernel) == 3


def test_identity_rank():
    m = Matrix.identity(QQ, 4)
    rank, kernel = m.rank_and_kernel()
    assert rank == 4
    assert kernel == []


def test_t1_contraction_at_e1():
    # contraction of the rank-3 basic form at u = e1 has rank 2, kernel <e1>
    h = catalog_form("T1", GF(3))
    m = contraction_matrix(h, (1, 0, 0))
    assert m.rows == ((0, 0, 0), (0, 0, 1), (0, 2, 0))
    rank, kernel = m.rank_and_kernel()
    assert rank == 2
    assert kernel == [(1, 0, 0)]


def test_kernel_annihilates():
    rng = random.Random(4242)
    for field in (GF(7), QQ):
        for _ in range(25):
            rows = [
                [rng.randint(-4, 4) for _ in range(5)] for _ in range(rng.randint(1, 6))
            ]
            m = Matrix(field, rows)
            rank, kernel = m.rank_and_kernel()
            assert rank + len(kernel) == 5
            for v in kernel:
                assert all(x == field.zero for x in m.mul_vec(v))


def test_principal_delete_2x2():
    F = QQ
    a = parse_poly("u1", 2, F)
    m = PolyMatrix(F, 2, [[MultiPoly.zero(2, F), a], [-a, MultiPoly.zero(2, F)]])
    d = m.principal_delete(1)
    assert d.size == 1
    assert d.entry(0, 0).is_zero()
    with pytest.raises(IndexError):
        m.principal_delete(3)


def test_principal_delete_t9_block():
    sym = symbolic_matrix(catalog_form("T9", QQ))
    top = sym.principal_delete(7)
    assert top.size == 6
    for i in range(6):
        for j in range(6):
            assert top.entry(i, j) == sym.entry(i, j)


def test_pfaffian_2x2():
    F = QQ
    a = parse_poly("u1", 2, F)
    m = PolyMatrix(F, 2, [[MultiPoly.zero(2, F), a], [-a, MultiPoly.zero(2, F)]])
    assert pfaffian(m) == a


def test_pfaffian_4x4_classic():
    # Pf = a12*a34 - a13*a24 + a14*a23
    F = GF(7)
    rows = [[0] * 4 for _ in range(4)]
    rows[0][1], rows[1][0] = 1, 6
    rows[2][3], rows[3][2] = 1, 6
    assert pfaffian(Matrix(F, rows)) == 1


def test_pfaffian_odd_is_zero():
    m = random_alternating(GF(5), 5, random.Random(1))
    assert pfaffian(m) == 0
    sym = symbolic_matrix(catalog_form("T1", QQ))
    assert pfaffian(sym).is_zero()
    assert determinant(sym).is_zero()


def test_pfaffian_rejects_non_alternating():
    with pytest.raises(ValueError):
        pfaffian(Matrix.identity(GF(3), 4))


def test_pfaffian_squares_to_determinant():
    rng = random.Random(777)
    for field in (GF(7), QQ):
        for n in (2, 3, 4, 5, 6):
            for _ in range(10):
                m = random_alternating(field, n, rng)
                pf = pfaffian(m)
                assert field.mul(pf, pf) == determinant(m)


def test_char2_alternating():
    # in characteristic 2 alternating means symmetric with zero diagonal
    F = GF(2)
    rows = [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]]
    m = Matrix(F, rows)
    assert m.is_alternating()
    pf = pfaffian(m)
    assert F.mul(pf, pf) == determinant(m)


def test_determinant_2x2_symbolic():
    F = QQ
    m = PolyMatrix(
        F,
        4,
        [
            [parse_poly("u1", 4, F), parse_poly("u2", 4, F)],
            [parse_poly("u3", 4, F), parse_poly("u4", 4, F)],
        ],
    )
    assert determinant(m) == parse_poly("u1*u4-u2*u3", 4, F)


def test_determinant_bareiss_matches_cofactor():
    rng = random.Random(2024)
    for _ in range(20):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        m = Matrix(QQ, rows)
        poly_m = PolyMatrix(
            QQ, 1, [[MultiPoly.constant(1, QQ, x) for x in row] for row in rows]
        )
        det_poly = determinant(poly_m)
        expected = det_poly.evaluate((0,))
        assert determinant(m) == expected


def test_alternating_rank_is_even():
    for p in (2, 3):
        F = GF(p)
        rng = random.Random(p)
        for _ in range(30):
            m = random_alternating(F, 6, rng)
            assert m.rank() % 2 == 0


def test_random_invertible_is_invertible():
    rng = random.Random(55)
    for field in (GF(2), GF(3), QQ):
        g = random_invertible(field, 5, rng)
        assert g.rank() == 5
