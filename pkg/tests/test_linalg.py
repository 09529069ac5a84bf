"""Dokładna algebra liniowa i simpleks pierwszej fazy."""
import math
from fractions import Fraction

import pytest

from core import linalg
from core.errors import ResourceLimitError
from core.simplex import LinearSystem, check_point, find_feasible_point


def test_bareiss_matches_small_determinants():
    assert linalg.bareiss_det([[2, 1], [1, 3]]) == 5
    assert linalg.bareiss_det([[1, 2], [2, 4]]) == 0
    assert linalg.bareiss_det([[0, 1], [1, 0]]) == -1
    assert linalg.bareiss_det([]) == 1
    assert linalg.bareiss_det([[0, 2, 1], [1, 0, 3], [4, 1, 0]]) == 25


def test_rank_over_rationals():
    assert linalg.rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    skew = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]
    assert linalg.rank(skew) == 2


def test_unipotent_inverse(make_unipotent):
    for n in (1, 3, 5):
        u = make_unipotent(n).matrix()
        assert linalg.matmul(u, linalg.unipotent_inverse(u)) == linalg.identity(n)


def test_permutation_matrix_reorders_rows_and_columns():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    p = linalg.permutation_matrix([2, 0, 1])
    assert linalg.congruence(p, m) == [[9, 7, 8], [3, 1, 2], [6, 4, 5]]


def test_interpolate_recovers_coefficients():
    values = [1 + 2 * t + 3 * t * t for t in range(3)]
    assert linalg.interpolate(values) == [1, 2, 3]
    assert linalg.interpolate([5, 5, 5, 5]) == [5, 0, 0, 0]
    assert linalg.interpolate([]) == []


def test_minors_of_size_two():
    m = [[1, 2, 0], [3, 4, 1]]
    minors = linalg.all_minors(m, 2)
    assert minors[((0, 1), (0, 1))] == -2
    assert minors[((0, 1), (0, 2))] == 1
    assert minors[((0, 1), (1, 2))] == 2


def test_minor_cap_is_enforced():
    with pytest.raises(ResourceLimitError):
        linalg.minor_levels(linalg.identity(6), 3, cap=100)


def test_xgcd_bezout():
    for a, b in [(240, 46), (4, 6), (17, 5), (0, 7)]:
        x, y, g = linalg.xgcd(a, b)
        assert x * a + y * b == g
        assert abs(g) == math.gcd(a, b)


def test_hermite_normal_form():
    assert linalg.hermite_normal_form([[2, 0], [0, 3], [4, 6]], 2) == [(2, 0), (0, 3)]
    assert linalg.hermite_normal_form([[2, 5], [0, 3]], 2) == [(2, 2), (0, 3)]
    assert linalg.hermite_normal_form([[4], [6]], 1) == [(2,)]
    assert linalg.hermite_normal_form([[0, 0]], 2) == []


def test_simplex_finds_point_on_feasible_system():
    system = LinearSystem(num_vars=3)
    system.add_equality({0: 1, 1: 1, 2: 1}, 4)
    system.add_equality({0: 1, 1: -1}, 1)
    for v in range(3):
        system.add_bound(v, 2)
    point = find_feasible_point(system)
    assert point is not None
    assert check_point(system, point)
    assert all(isinstance(x, Fraction) for x in point)


def test_simplex_detects_infeasibility():
    system = LinearSystem(num_vars=2)
    system.add_equality({0: 1, 1: 1}, 5)
    system.add_bound(0, 1)
    system.add_bound(1, 1)
    assert find_feasible_point(system) is None


def test_simplex_negative_right_hand_side():
    system = LinearSystem(num_vars=2)
    system.add_equality({0: 1, 1: -1}, -1)
    system.add_upper({0: 1, 1: 1}, 3)
    point = find_feasible_point(system)
    assert point is not None and check_point(system, point)
