import pytest

from picardlab.catalog import (
    admissible_degrees,
    closed_form_size,
    config_size,
    degree_search_bound,
    inventory,
    support_max,
    thresholds,
)
from picardlab.errors import InvalidInputError


def entries(d):
    return [(c, (t.a, t.b)) for c, t in inventory(d).entries]


def test_small_inventories():
    assert entries(2) == [(2, (2, 1)), (3, (3, 2))]
    assert inventory(2).total_points == 5
    assert entries(3) == [(3, (1, 1)), (5, (2, 1))]
    assert inventory(3).total_points == 8
    assert entries(4) == [(12, (1, 1))]


def test_general_inventories():
    assert entries(9) == [(1, (1, 1)), (27, (2, 1)), (6, (3, 1)), (6, (3, 2))]
    assert entries(8) == [(27, (3, 2)), (6, (3, 2))]
    assert entries(7) == [(15, (1, 1)), (12, (2, 1))]


def test_rejects_small_degree():
    for f in (inventory, config_size, closed_form_size):
        with pytest.raises(InvalidInputError):
            f(1)


def test_config_size_examples():
    assert config_size(2) == 13
    assert config_size(3) == 13
    assert config_size(4) == 12
    assert config_size(9) == 91 == closed_form_size(9)


def test_closed_form_examples():
    assert closed_form_size(7) == 39
    assert closed_form_size(5) == 40
    assert closed_form_size(6) == 37


def test_config_size_matches_closed_form():
    for d in range(2, 201):
        assert config_size(d) == closed_form_size(d), d


def test_admissible_degrees_examples():
    assert admissible_degrees(11) == []
    assert admissible_degrees(12) == [4]
    assert admissible_degrees(36) == [2, 3, 4]
    assert admissible_degrees(37) == [2, 3, 4, 6]


def test_search_bound_is_complete():
    for n in range(1, 3000, 7):
        bound = degree_search_bound(n)
        assert all(config_size(d) > n for d in range(bound + 1, bound + 30))


def test_support_max_examples():
    assert support_max(11) is None
    assert support_max(12) == 12
    assert support_max(36) == 13
    assert support_max(37) == 37


def test_thresholds():
    assert thresholds() == (12, 37)
    assert thresholds(1000) == (12, 37)


def test_admissible_monotone():
    prev = set()
    for n in range(1, 600):
        cur = set(admissible_degrees(n))
        assert prev <= cur
        prev = cur
