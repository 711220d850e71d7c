#!/usr/bin/env python3
"""
Half-aztec domino tilings and Schröder paths
"""
import pytest

from hexanet.core.exceptions import BoundExceeded, InvalidInput
from hexanet.services.half_aztec import (
    DominoTiling,
    check_calibration,
    enumerate_half_aztec,
    forced_horizontal,
    half_aztec,
    half_aztec_entry,
    monomial_weight,
    placement,
    row_transfer,
    schroder_number,
    schroder_paths,
)
from hexanet.services.laurent import letter_names, parse_laurent, symbolic_reconstruct


def test_region_shape():
    region = half_aztec(2, 1, 2)
    assert region.rows() == {0: [2, 3], 1: [2, 3]}
    assert not region.inner
    inner = half_aztec(2, 2, 1)
    assert inner.inner
    assert inner.squares == frozenset()
    with pytest.raises(ValueError):
        half_aztec(2, 3, 1)


def test_placement_small():
    assert placement(2) == {(1, 1): "v1", (2, 1): "f12", (3, 1): "v2", (2, 2): "v12"}
    assert placement(2, inner=True) == {(2, 1): "f12"}


def test_two_by_two_entries():
    cases = [
        {"entry": (1, 1), "tilings": 1, "polynomial": "v1"},
        {"entry": (1, 2), "tilings": 2, "polynomial": "v1*v2/f12 + v12/f12"},
        {"entry": (2, 1), "tilings": 1, "polynomial": "f12"},
        {"entry": (2, 2), "tilings": 1, "polynomial": "v2"},
    ]
    for case in cases:
        i, j = case["entry"]
        assert len(enumerate_half_aztec(2, i, j)) == case["tilings"]
        assert half_aztec_entry(2, i, j) == parse_laurent(case["polynomial"])
    check_calibration(2)


def test_tiling_counts_match_term_counts():
    symbolic = symbolic_reconstruct(4)
    for j, count in ((1, 1), (2, 2), (3, 6), (4, 22)):
        tilings = enumerate_half_aztec(4, 1, j)
        assert len(tilings) == count
        assert len(symbolic.entry(1, j)) == count
        assert all(t.covered() == half_aztec(4, 1, j).squares for t in tilings)


def test_schroder_numbers():
    assert [schroder_number(n) for n in range(5)] == [1, 2, 6, 22, 90]
    for n in range(5):
        assert sum(1 for _ in schroder_paths(n)) == schroder_number(n)


def test_schroder_paths_stay_below_diagonal():
    for path in schroder_paths(3):
        x = y = 0
        for dx, dy in path:
            x, y = x + dx, y + dy
            assert y <= x
        assert (x, y) == (3, 3)


def test_schroder_counts_half_aztec_first_row():
    for j in range(1, 5):
        assert len(enumerate_half_aztec(4, 1, j)) == schroder_number(j - 1)


def test_schroder_bound():
    with pytest.raises(BoundExceeded):
        schroder_paths(40)


def test_monomial_weight_of_single_tiling():
    t = DominoTiling((((3, 0), (4, 0)), ((2, 1), (3, 1))))
    assert t.long_side_midpoints() == {(3, 0): 1, (3, 1): 1, (2, 1): 1, (2, 2): 1}
    assert monomial_weight(t, placement(2)) == parse_laurent("v1")
    (only,) = enumerate_half_aztec(2, 1, 1)
    assert only.covered() == t.covered()


def test_monomial_weight_rejects_unplaced_points():
    t = DominoTiling((((1, 0), (1, 1)), ((2, 0), (2, 1))))
    assert t.long_side_midpoints()[(1, 1)] == 2
    with pytest.raises(InvalidInput):
        monomial_weight(t, placement(2, inner=True))
    assert monomial_weight(t, placement(2)) == parse_laurent("v2*v12/v1")


def test_calibration_order_four():
    check_calibration(4)
    check_calibration(3)


def test_entry_one_three_contains_aj_over_bd():
    entry = half_aztec_entry(4, 1, 3).rename(letter_names(4))
    assert parse_laurent("a*j/(b*d)") in entry.monomials()
    assert len(entry) == 6
    assert half_aztec_entry(2, 1, 2).variables() == {"v1", "v2", "f12", "v12"}


def test_forced_horizontal_dominoes():
    region = half_aztec(2, 1, 1)
    forced = forced_horizontal(region)
    assert forced == (((3, 0), (4, 0)), ((2, 1), (3, 1)))
    assert forced_horizontal(half_aztec(4, 1, 4)) == ()
    for t in enumerate_half_aztec(4, 1, 2, prune=False):
        assert set(forced_horizontal(half_aztec(4, 1, 2))) <= set(t.dominoes)


def test_pruned_matches_unpruned():
    for i in range(1, 4):
        for j in range(1, 4):
            pruned = {frozenset(t.dominoes) for t in enumerate_half_aztec(3, i, j)}
            full = {frozenset(t.dominoes) for t in enumerate_half_aztec(3, i, j, prune=False)}
            assert pruned == full
            assert len(pruned) == len(enumerate_half_aztec(3, i, j))


def test_row_transfer_small_regions():
    assert row_transfer(frozenset()) == [()]
    assert row_transfer(frozenset({(1, 0)})) == []
    square = frozenset({(1, 0), (2, 0), (1, 1), (2, 1)})
    assert len(row_transfer(square)) == 2
