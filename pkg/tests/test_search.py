from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from simdim import BudgetExceeded
from simdim.graph import to_mask
from simdim.search import (Counter, all_covers, find_cover, first_cover, lower_bound,
                           minimal_constraints, minimum_size)


def brute_covers(constraints, n):
    for k in range(n + 1):
        found = [to_mask(S) for S in combinations(range(n), k)
                 if all(to_mask(S) & c for c in constraints)]
        if found:
            return k, found
    return None


constraint_sets = st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, (1 << n) - 1), max_size=12)))


def test_minimal_constraints_drops_supersets():
    assert minimal_constraints([0b111, 0b011, 0b011, 0b100, 0b110]) == [0b100, 0b011]


def test_packing_bound():
    assert lower_bound([0b0011, 0b1100, 0b0110]) == 2


def test_empty_constraint_rejected():
    with pytest.raises(ValueError):
        minimum_size([0b1, 0], 2, Counter())


def test_no_constraints_needs_nothing():
    assert minimum_size([], 4, Counter()) == 0
    assert first_cover([], 4, 0, Counter()) == 0
    assert list(all_covers([], 2, 1, Counter())) == [0b01, 0b10]


def test_find_cover_respects_allowed():
    assert find_cover([0b011], 0b010, 1, Counter()) == 0b010
    assert find_cover([0b011], 0b100, 1, Counter()) is None


def test_budget_enforced():
    constraints = [to_mask(p) for p in combinations(range(12), 2)]
    with pytest.raises(BudgetExceeded):
        minimum_size(constraints, 12, Counter(budget=10))


def test_first_cover_of_impossible_size():
    assert first_cover([0b11, 0b1100], 4, 1, Counter()) is None
    assert first_cover([0b1], 2, 3, Counter()) is None


@settings(max_examples=150, deadline=None)
@given(constraint_sets)
def test_search_matches_brute_force(case):
    n, constraints = case
    k, covers = brute_covers(constraints, n)
    counter = Counter()
    assert minimum_size(minimal_constraints(constraints), n, counter) == k
    assert first_cover(constraints, n, k, counter) == min(covers, key=lambda m: sorted(
        i for i in range(n) if m >> i & 1))
    assert list(all_covers(constraints, n, k, counter)) == covers
