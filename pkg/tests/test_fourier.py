from __future__ import annotations

import random

import pytest

from lcdmds.errors import DomainError, UsageError
from lcdmds.finite_field import FieldSpec, element_of_order, root_of_unity
from lcdmds.fourier import FourierMatrix, dual_row_index
from lcdmds.linalg import dot, matmul, transpose


def fourier(p, m, n):
    f = FieldSpec.gf(p, m)
    return FourierMatrix(f, element_of_order(f, n))


def test_trivial_sizes():
    f = FieldSpec.gf(3)
    assert FourierMatrix(f, root_of_unity(f, 1, 1)).matrix() == [[1]]
    assert FourierMatrix(f, root_of_unity(f, 2, 2)).matrix() == [[1, 1], [1, 2]]


def test_gf8_product_is_identity():
    F = fourier(2, 3, 7)
    star = [F.star_column(j) for j in range(7)]
    prod = [[dot(F.field, F.row(i), star[j]) for j in range(7)] for i in range(7)]
    assert prod == [[int(i == j) for j in range(7)] for i in range(7)]


@pytest.mark.parametrize("p,m,n", [(2, 3, 7), (23, 1, 11), (29, 1, 7), (53, 1, 52), (3, 3, 13),
                                   (2, 4, 15), (5, 2, 12), (17, 1, 16), (2, 6, 63)])
def test_pairing_is_n_delta(p, m, n):
    F = fourier(p, m, n)
    G = F.matrix()
    Fstar = F.star().matrix()  # symmetric, so rows are the columns f_j
    nn = F.n_in_field()
    assert matmul(F.field, G, transpose(Fstar)) == [[nn if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(n):
        assert F.star_column(j) == Fstar[j]
        assert F.star_column(j) == G[dual_row_index(j, n)]


def test_rows_are_powers_of_row_one():
    F = fourier(53, 1, 52)
    e1 = F.row(1)
    for i in (0, 2, 7, 51):
        assert F.row(i) == [F.field.pow(x, i) for x in e1]


def test_dual_row_index_examples():
    assert dual_row_index(0, 7) == 0
    assert dual_row_index(2, 7) == 5
    assert dual_row_index(5, 11) == 6


def test_transform_basics():
    F = fourier(23, 1, 11)
    assert F.transform([0] * 11) == [0] * 11
    assert F.transform([1] + [0] * 10) == F.row(0)
    with pytest.raises(UsageError):
        F.transform([1, 2])


@pytest.mark.parametrize("p,m,n", [(23, 1, 11), (2, 8, 255), (3, 3, 13)])
def test_inverse_roundtrip(p, m, n):
    F = fourier(p, m, n)
    rng = random.Random(n)
    for _ in range(100):
        v = [rng.randrange(F.field.q) for _ in range(n)]
        assert F.inverse_transform(F.transform(v)) == v


def test_rejects_wrong_order_and_characteristic():
    f = FieldSpec.gf(29)
    w = element_of_order(f, 7)
    with pytest.raises(DomainError):
        FourierMatrix(f, root_of_unity(f, 16, 14))
    g = FieldSpec.gf(2, 2)
    with pytest.raises(DomainError):
        root_of_unity(g, 1, 2)
    assert FourierMatrix(f, w).n == 7


def test_large_n_rows_on_demand():
    F = fourier(2, 13, 8191)
    r = F.row(8190)
    assert len(r) == 8191
    assert r[1] == F.field.pow(F.omega.value, 8190)
