import asyncio

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import BudgetExceededError, UsageError
from modules.polytope.h_polytope import build_A_star, build_C_star, contains, on_boundary
from modules.polytope.lattice_enum import (
    count,
    count_async,
    count_boundary,
    count_points,
    enumerate_points,
    interior_shell_points,
    partition_box,
    redundant_inequalities,
    shell_points,
)


def test_c_star_2_unit_points():
    assert list(enumerate_points(build_C_star(2), 1)) == [(-1, 1), (0, -1), (0, 0), (0, 1), (1, -1)]


@pytest.mark.parametrize("P, k, total, boundary", [
    (build_C_star(2), 1, 5, 4),
    (build_C_star(3), 2, 35, 26),
    (build_A_star(2), 1, 7, 6),
    (build_C_star(1), 5, 11, 2),
])
def test_known_counts(P, k, total, boundary):
    result = count(P, k)
    assert (result.total, result.boundary) == (total, boundary)


def test_zero_dilation_is_the_origin():
    result = count(build_C_star(3), 0)
    assert (result.total, result.boundary) == (1, 0)
    assert list(enumerate_points(build_C_star(3), 0)) == [(0, 0, 0)]
    assert list(shell_points(build_C_star(3), 0)) == []


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("k", range(0, 5))
def test_c_star_counts_match_closed_form(d, k):
    assert count_points(build_C_star(d), k) == (k + 1) ** d + k ** d


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("k", range(0, 5))
def test_a_star_counts_match_closed_form(d, k):
    assert count_points(build_A_star(d), k) == (k + 1) ** (d + 1) - k ** (d + 1)


@pytest.mark.parametrize("d", range(2, 6))
@pytest.mark.parametrize("k", range(1, 5))
def test_boundary_reduction_identity(d, k):
    prefix = build_A_star(d - 1)
    assert count_boundary(build_C_star(d), k) == count_boundary(prefix, k) + 2 * count_points(prefix, k - 1)


def test_a_star_zero_is_a_single_point():
    assert list(enumerate_points(build_A_star(0), 3)) == [()]
    assert count_boundary(build_A_star(0), 3) == 0


def test_budget_guard():
    with pytest.raises(BudgetExceededError) as info:
        count(build_C_star(3), 2, budget=100)
    assert info.value.box_size == 125
    assert info.value.budget == 100


def test_negative_dilation_rejected():
    with pytest.raises(UsageError):
        count(build_C_star(2), -1)


@settings(max_examples=50, deadline=None)
@given(x=st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_enumeration_agrees_with_membership(x):
    P = build_C_star(3)
    points = set(enumerate_points(P, 2))
    shell = set(shell_points(P, 2))
    assert (x in points) == contains(P, 2, x)
    assert (x in shell) == on_boundary(P, 2, x)


@pytest.mark.parametrize("build_polytope", [build_C_star, build_A_star])
@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("k", range(1, 5))
def test_no_interior_shell_points(build_polytope, d, k):
    assert interior_shell_points(build_polytope(d), k) == []


def test_partition_box_covers_the_box():
    box = [(-3, 3), (-1, 1)]
    slabs = partition_box(box, 3)
    assert [s[0] for s in slabs] == [(-3, -1), (0, 1), (2, 3)]
    assert all(s[1:] == box[1:] for s in slabs)
    assert len(partition_box(box, 50)) == 7
    with pytest.raises(UsageError):
        partition_box(box, 0)


@pytest.mark.parametrize("parts", [1, 2, 5])
def test_count_async_matches_count(parts):
    P = build_C_star(4)
    assert asyncio.run(count_async(P, 3, parts=parts)) == count(P, 3)


def test_c_star_single_coordinate_bounds_are_redundant():
    # |a_1| <= 1 follows from |2a_1 + a_2| <= 1 and |a_2| <= 1
    assert redundant_inequalities(build_C_star(2), 1) == {0, 1}


@pytest.mark.parametrize("d", range(1, 4))
def test_a_star_system_is_irredundant(d):
    assert redundant_inequalities(build_A_star(d), 1) == set()
