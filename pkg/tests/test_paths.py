from collections import Counter

import pytest

from npaths.paths import (
    IllegalPeel,
    NonCanonical,
    StandardPath,
    Tableau,
    TableauError,
    brute_force_endpoint_counts,
    check_necessary_condition,
    count_by_endpoint,
    count_by_stats,
    count_grouped,
    enumerate_paths,
    path_to_tableau,
    tableau_to_path,
    total_paths,
)
from npaths.poset import Composition as C

RHO = ((), (1,), (1, 1), (1, 2), (1, 1, 2))


def test_enumerate_small():
    assert [p.steps for p in enumerate_paths(0)] == [(C(),)]
    two = {tuple(tuple(s) for s in p) for p in enumerate_paths(2)}
    assert two == {((), (1,), (1, 1)), ((), (1,), (2,))}
    assert len(enumerate_paths(4)) == 23


def test_enumerated_paths_are_valid_and_distinct():
    found = enumerate_paths(6)
    assert len(found) == 518
    assert len({p.steps for p in found}) == 518
    for p in found:
        p.validate()


def test_invalid_path_rejected():
    with pytest.raises(ValueError):
        StandardPath.from_steps([(), (1,), (1, 1), (1, 1, 1), (1, 1, 3)]).validate()
    with pytest.raises(ValueError):
        StandardPath.from_steps([(1,), (2,)]).validate()


def test_gamma_only_step_is_not_a_path():
    steps = [(), (1,), (2,), (2, 1), (2, 2), (2, 1, 2)]
    with pytest.raises(ValueError):
        StandardPath.from_steps(steps).validate()


def test_path_to_tableau_examples():
    assert path_to_tableau(RHO).columns == ((4,), (2,), (1, 3))
    assert path_to_tableau([(), (1,)]).columns == ((1,),)
    assert path_to_tableau([(), (1,), (1, 1)]).columns == ((2,), (1,))


def test_tableau_to_path_examples():
    assert tableau_to_path([[4], [2], [1, 3]]).steps == tuple(C(s) for s in RHO)
    with pytest.raises(NonCanonical):
        tableau_to_path([[1], [2]])
    with pytest.raises(IllegalPeel) as info:
        tableau_to_path([[1], [3], [2]])
    # label 3 is the first peeled and sits alone in the middle column
    assert info.value.label == 3


def test_tableau_bad_labels():
    with pytest.raises(TableauError):
        tableau_to_path([[1, 3]])
    with pytest.raises(TableauError):
        tableau_to_path([[2, 1]])


def test_tableau_shape_stats():
    t = Tableau.of([[4], [2], [1, 3]])
    assert t.shape == C((1, 1, 2))
    assert (t.size, t.width, t.height) == (4, 3, 2)
    assert t.bottom_row() == (4, 2, 1)


@pytest.mark.parametrize("n", range(8))
def test_bijection_round_trip(n):
    seen = set()
    for p in enumerate_paths(n):
        t = path_to_tableau(p)
        assert t.shape == p.endpoint
        assert tableau_to_path(t) == p
        assert check_necessary_condition(t)
        seen.add(t)
    assert len(seen) == total_paths(n)


def test_necessary_condition_examples():
    assert check_necessary_condition([[2], [1]])
    assert not check_necessary_condition([[1], [2]])
    assert check_necessary_condition([[4], [2], [1, 3]])


def test_count_by_endpoint_examples():
    assert count_by_endpoint(3) == {C((1, 1, 1)): 1, C((1, 2)): 2, C((2, 1)): 2, C((3,)): 1}
    assert count_by_endpoint(4)[C((2, 2))] == 4
    assert count_by_endpoint(1) == {C((1,)): 1}


@pytest.mark.parametrize("n", range(9))
def test_count_by_endpoint_matches_enumeration(n):
    brute = Counter(p.endpoint for p in enumerate_paths(n))
    assert count_by_endpoint(n) == dict(brute)
    assert brute_force_endpoint_counts(n) == dict(brute)


def test_count_by_stats_examples():
    assert count_by_stats(4) == {(4, 0): 1, (0, 1): 1, (1, 1): 6, (2, 1): 11, (0, 2): 4}
    assert count_by_stats(8, height_bound=2)[(0, 4)] == 336
    assert count_by_stats(0) == {(0, 0): 1}


def test_count_grouped():
    assert sum(count_grouped(7, "width").values()) == 2868
    heights = Counter()
    for p in enumerate_paths(4):
        heights[p.endpoint.height] += 1
    assert count_grouped(4, "height") == dict(heights)
    by_height = count_grouped(5, "height")
    assert sum(by_height.values()) == 103
    assert by_height[1] == 1 and by_height[5] == 1
    with pytest.raises(ValueError):
        count_grouped(3, "colour")


def test_parallel_brute_force_agrees():
    assert brute_force_endpoint_counts(8, workers=2) == count_by_endpoint(8)
