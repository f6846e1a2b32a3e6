"""Degrees, the scalar product and the Koszul sign."""

import itertools

import pytest

from dqsp.grading import degree_add, koszul_sign, promote, scalar_product

Z22 = list(itertools.product((0, 1), repeat=2))


def test_degree_add():
    assert degree_add((0, 1), (1, 0)) == (1, 1)
    assert degree_add((1, 1), (1, 1)) == (0, 0)
    assert degree_add((1, 0, 1), (0, 0, 1)) == (1, 0, 0)


def test_scalar_product():
    assert scalar_product((0, 1), (1, 0)) == 0
    assert scalar_product((1, 1), (1, 1)) == 0
    assert scalar_product((0, 1), (1, 1)) == 1


def test_koszul_sign():
    assert koszul_sign((0, 1), (0, 1)) == -1   # xi is a self-fermion
    assert koszul_sign((0, 1), (1, 0)) == +1   # xi and theta commute
    assert koszul_sign((1, 1), (0, 1)) == -1   # z twists against xi


def test_scalar_product_symmetric_and_bilinear():
    for a in Z22:
        for b in Z22:
            assert scalar_product(a, b) == scalar_product(b, a)
            for c in Z22:
                assert (scalar_product(degree_add(a, b), c)
                        == (scalar_product(a, c) + scalar_product(b, c)) % 2)


def test_koszul_signs_cancel_pairwise():
    for a in Z22:
        for b in Z22:
            assert koszul_sign(a, b) * koszul_sign(b, a) == 1


def test_promote():
    assert promote((0, 1), 3) == (0, 0, 1)
    assert promote((1, 0, 1), 3) == (1, 0, 1)
    with pytest.raises(ValueError):
        promote((1, 0, 1), 2)


def test_length_mismatch():
    with pytest.raises(ValueError):
        degree_add((0, 1), (0, 1, 1))
    with pytest.raises(ValueError):
        scalar_product((0,), (0, 1))
