from fractions import Fraction as F

import pytest

from startrack.errors import NotNeighbours, OutOfRange
from startrack.farey import (
    admissible_direct,
    admissible_set,
    farey_parents,
    left_farey_sequence,
    orbit_segment,
    xi_inverse,
    xi_map,
)


def test_parents():
    assert farey_parents(F(3, 8)) == (F(1, 3), F(2, 5))
    assert farey_parents(F(3, 10)) == (F(2, 7), F(1, 3))
    assert farey_parents(F(1, 5)) == (F(0), F(1, 4))


def test_left_farey_sequence():
    assert left_farey_sequence(F(3, 10)) == [F(0), F(1, 4), F(2, 7)]
    assert left_farey_sequence(F(3, 7)) == [F(0), F(1, 3), F(2, 5)]
    assert left_farey_sequence(F(1, 4)) == [F(0)]


def test_orbit_segments():
    assert orbit_segment(F(3, 7), 1, 0) == [1, 4, 0]
    assert orbit_segment(F(3, 7), 3, 6) == [3, 6]
    assert orbit_segment(F(3, 7), 5, 5) == [5]


def test_xi():
    assert xi_map(F(1, 3), F(2, 5), F(1, 2)) == F(3, 8)
    assert xi_map(F(1, 3), F(2, 5), F(1, 3)) == F(4, 11)
    assert xi_map(F(0), F(1, 2), F(1, 3)) == F(1, 4)
    with pytest.raises(NotNeighbours):
        xi_map(F(1, 4), F(1, 2), F(1, 2))
    with pytest.raises(OutOfRange):
        xi_map(F(1, 3), F(2, 5), F(1))


def test_admissible():
    assert admissible_set(F(3, 7)) == [0, 1, 2]
    assert admissible_set(F(2, 5)) == [0, 1]
    for n in range(3, 12):
        assert admissible_set(F(1, n)) == [0]


def test_admissible_cardinalities_match_lfs():
    # the i-th admissible k has |O[k, 0]| equal to the i-th denominator of LFS
    for n in range(3, 40):
        for m in range(1, (n + 1) // 2):
            q = F(m, n)
            if q.denominator != n:
                continue
            ks = admissible_set(q)
            lfs = left_farey_sequence(q)
            assert len(ks) == len(lfs)
            assert ks == admissible_direct(q)
            assert ks[-1] == m - 1
            for k, parent in zip(ks, lfs):
                assert len(orbit_segment(q, k, 0)) == parent.denominator


def test_xi_round_trip_small():
    left, right = F(1, 3), F(2, 5)
    for s in range(2, 20):
        for r in range(1, s):
            t = F(r, s)
            assert xi_inverse(left, right, xi_map(left, right, t)) == t
