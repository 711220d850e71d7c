#!/usr/bin/env python3
"""
Inverting the network map: fill schedule, entry solves and round trips
"""
import numpy as np
import pytest

from hexanet.core.exceptions import InvalidTiling, NonGeneric, NotNormalized
from hexanet.services.generator import MatrixGenerator
from hexanet.services.minors import ExactMatrix, FaceConvention, MinorSpec
from hexanet.services.networks import Network, matrix_to_network, transport
from hexanet.services.reconstruct import (
    ScalarPartial,
    fill_schedule,
    reconstruct,
    reconstruct_any_tiling,
    round_trip_check,
    solve_entry,
)
from hexanet.services.scalars import Ring, Scalar
from hexanet.services.tilings import enumerate_tilings, random_flips, standard_tiling, subset


def test_fill_schedule_shape():
    for n in (2, 3, 4, 5):
        for convention in FaceConvention:
            steps = fill_schedule(n, convention)
            assert len(steps) == n * n
            assert len({s.unknown for s in steps}) == n * n
            assert sum(s.is_face for s in steps) == n * (n - 1) // 2

    first = fill_schedule(3)[:4]
    assert [s.position for s in first] == [subset(3), subset(2), subset(1), (2, 3)]
    assert [s.unknown for s in first] == [(3, 3), (2, 2), (1, 1), (3, 2)]


def test_solve_entry():
    m = ScalarPartial(2, Ring.RAT)
    m[1, 1] = Scalar.rat(2)
    m[2, 1] = Scalar.rat(5)
    m[2, 2] = Scalar.rat(7)
    value = solve_entry(m, MinorSpec.principal({1, 2}), Scalar.rat(-1), (1, 2))
    assert value == Scalar.rat(3)
    assert m.to_matrix() == ExactMatrix.from_rows([[2, 3], [5, 7]])
    with pytest.raises(KeyError):
        m[1, 2] = Scalar.rat(0)


def test_two_by_two_examples(small_matrix):
    net = Network(
        standard_tiling(2),
        {frozenset(): Scalar.rat(1), subset(1): Scalar.rat(2), subset(2): Scalar.rat(7), subset(1, 2): Scalar.rat(1)},
        {(1, 2): Scalar.rat(5)},
    )
    assert reconstruct(net) == small_matrix

    i = Scalar.gauss(0, 1)
    hermitian = Network(
        standard_tiling(2),
        {frozenset(): Scalar.gauss(1), subset(1): Scalar.gauss(2), subset(2): Scalar.gauss(3), subset(1, 2): Scalar.gauss(-4)},
        {(1, 2): Scalar.gauss(1) + i},
    )
    expected = ExactMatrix.from_rows([[Scalar.gauss(2), Scalar.gauss(1, -1)], [Scalar.gauss(1, 1), Scalar.gauss(3)]], Ring.GAUSS)
    assert reconstruct(hermitian) == expected


def test_round_trip_on_standard_tiling(sample_matrix, generator):
    assert reconstruct(matrix_to_network(sample_matrix)) == sample_matrix
    for n in (3, 4, 5, 6):
        for ring in (Ring.RAT, Ring.GAUSS):
            for _ in range(3):
                m = generator.generic_matrix(n, ring)
                assert reconstruct(matrix_to_network(m)) == m


def test_round_trip_lower_convention(generator):
    for n in (3, 4, 5):
        m = generator.generic_matrix(n)
        assert reconstruct(matrix_to_network(m, convention=FaceConvention.LOWER)) == m


def test_round_trip_through_flips(generator):
    rng = np.random.default_rng(11)
    for n in (3, 4, 5):
        m = generator.generic_matrix(n)
        _, moves = random_flips(standard_tiling(n), 8, rng)
        assert round_trip_check(m, moves)


def test_reconstruct_from_any_tiling(generator):
    m = generator.generic_matrix(4, Ring.GAUSS)
    for t in enumerate_tilings(4):
        assert reconstruct_any_tiling(matrix_to_network(m, t)) == m


def test_reconstruct_preconditions(generator):
    m = generator.generic_matrix(3)
    net = matrix_to_network(m)
    with pytest.raises(NotNormalized):
        reconstruct(net.scaled(Scalar.rat(2)))
    flipped, _ = random_flips(standard_tiling(3), 1, np.random.default_rng(0))
    with pytest.raises(InvalidTiling):
        reconstruct(transport(net, flipped))


def test_vanishing_face_is_reported():
    net = Network(
        standard_tiling(2),
        {frozenset(): Scalar.rat(1), subset(1): Scalar.rat(2), subset(2): Scalar.rat(7), subset(1, 2): Scalar.rat(1)},
        {(1, 2): Scalar.rat(0)},
    )
    with pytest.raises(NonGeneric):
        reconstruct(net)


@pytest.mark.slow
def test_round_trip_many_matrices():
    for n in (3, 4, 5, 6):
        for ring in (Ring.RAT, Ring.GAUSS):
            generator = MatrixGenerator(seed=n)
            for _ in range(100):
                m = generator.generic_matrix(n, ring)
                assert reconstruct(matrix_to_network(m)) == m
