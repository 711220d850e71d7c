#!/usr/bin/env python3
"""
Quaternionic determinants, the Pfaffian form and q-Hermitian networks
"""
from fractions import Fraction

import pytest

from hexanet.core.exceptions import NotHermitian
from hexanet.services.generator import MatrixGenerator
from hexanet.services.hermitian import face_identity_holds, is_hermitian_network
from hexanet.services.minors import ExactMatrix, det
from hexanet.services.networks import matrix_to_network
from hexanet.services.quaternionic import (
    complex_form,
    is_q_hermitian,
    pfaffian,
    q_almost_principal,
    q_reconstruct,
    qdet,
    qdet_pfaffian,
    quaternion_block,
    random_q_hermitian,
)
from hexanet.services.scalars import Ring, Scalar


def quat(a=0, b=0, c=0, d=0):
    return Scalar.quat(a, b, c, d)


@pytest.fixture
def unit_example():
    rows = [
        [quat(1), quat(0, 1), quat(0, 0, 1)],
        [quat(0, -1), quat(2), quat(0, 0, 0, 1)],
        [quat(0, 0, -1), quat(0, 0, 0, -1), quat(3)],
    ]
    return ExactMatrix.from_rows(rows, Ring.QUAT)


def test_qdet_examples(unit_example):
    assert is_q_hermitian(unit_example)
    assert qdet(unit_example) == Fraction(-2)
    assert qdet(unit_example, [1, 2]) == Fraction(1)
    assert qdet(unit_example, []) == Fraction(1)

    diagonal = ExactMatrix.from_rows([[quat(2), quat()], [quat(), quat(3)]], Ring.QUAT)
    assert qdet(diagonal) == Fraction(6)
    assert qdet_pfaffian(diagonal) == Fraction(6)


def test_qdet_matches_commutative_determinant(generator):
    m = generator.generic_hermitian(3)
    embedded = ExactMatrix.from_rows([[x.embed(Ring.QUAT) for x in row] for row in m.entries], Ring.QUAT)
    assert Scalar.of(Ring.GAUSS, qdet(embedded)) == det(m)


def test_pfaffian_small():
    one, zero = Scalar.gauss(1), Scalar.gauss(0)
    assert pfaffian([[zero, one], [-one, zero]]) == one
    a = [[Scalar.gauss(x) for x in row] for row in ([0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0])]
    # a01 a23 - a02 a13 + a03 a12
    assert pfaffian(a) == Scalar.gauss(1 * 6 - 2 * 5 + 3 * 4)
    assert pfaffian([[zero]]) == zero


def test_complex_form():
    block = quaternion_block(quat(1, 2, 3, 4))
    assert block == ((Scalar.gauss(1, 2), Scalar.gauss(3, 4)), (Scalar.gauss(-3, 4), Scalar.gauss(1, -2)))
    form = complex_form(ExactMatrix.from_rows([[quat(5)]], Ring.QUAT))
    assert form == [[Scalar.gauss(5), Scalar.gauss(0)], [Scalar.gauss(0), Scalar.gauss(5)]]


def test_dyson_identity(unit_example, generator):
    assert qdet_pfaffian(unit_example) == Fraction(-2)
    for n in (2, 3, 4):
        for _ in range(5):
            m = random_q_hermitian(generator, n)
            assert qdet(m) == qdet_pfaffian(m)


@pytest.mark.slow
def test_dyson_identity_many_samples():
    for n in (2, 3, 4):
        for sample in range(50):
            m = random_q_hermitian(MatrixGenerator(seed=1000 * n + sample), n)
            assert qdet(m) == qdet_pfaffian(m), f"n={n} seed={1000 * n + sample}"


def test_almost_principal_three_by_three(unit_example):
    # rows {2,3}, cols {1,3}: d* c - f e* with d = i, e = j, f = k, c = 3
    assert q_almost_principal(unit_example, {3}, 2, 1) == quat(0, -4)
    assert q_almost_principal(unit_example, {3}, 1, 2) == quat(0, 4)
    assert q_almost_principal(unit_example, set(), 2, 1) == quat(0, -1)


def test_q_networks_satisfy_face_identity(generator):
    for n in (2, 3, 4):
        net = matrix_to_network(random_q_hermitian(generator, n))
        for i, j in sorted(net.faces):
            assert face_identity_holds(net, i, j), (n, i, j)
        assert is_hermitian_network(net)


def test_almost_principal_collisions(unit_example):
    with pytest.raises(ValueError):
        q_almost_principal(unit_example, {3}, 1, 1)
    with pytest.raises(ValueError):
        q_almost_principal(unit_example, {3}, 3, 1)


def test_q_reconstruct_round_trip(generator):
    for n in (2, 3, 4):
        m = random_q_hermitian(generator, n)
        net = matrix_to_network(m)
        assert all(x.is_real() for x in net.vertices.values())
        assert q_reconstruct(net) == m


def test_non_q_hermitian_input():
    m = ExactMatrix.from_rows([[quat(1), quat(0, 1)], [quat(0, 1), quat(2)]], Ring.QUAT)
    assert not is_q_hermitian(m)
    with pytest.raises(NotHermitian):
        qdet(m)
    with pytest.raises(NotHermitian):
        qdet_pfaffian(m)
