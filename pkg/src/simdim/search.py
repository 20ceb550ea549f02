"""Exact minimum hitting sets over vertex bitmasks.

Both problems solved by this package reduce to the same search.  A set ``S``
is a (simultaneous) generator iff it meets the distinguisher set of every
vertex pair in every member graph, and a dominating set iff it meets every
closed neighbourhood.  Each constraint is a bitmask of the vertices that can
satisfy it; only inclusion-minimal constraints are kept.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BudgetExceeded
from .graph import bits

DEFAULT_BUDGET = 10**8


class Counter:
    """Counts candidate checks and enforces the search budget."""

    __slots__ = ("budget", "checks")

    def __init__(self, budget: int | None = DEFAULT_BUDGET):
        self.budget = budget
        self.checks = 0

    def tick(self, amount: int = 1) -> None:
        self.checks += amount
        if self.budget is not None and self.checks > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} candidate checks")


def minimal_constraints(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and every mask that contains another mask."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _packing_bound(constraints: list[int]) -> int:
    # pairwise disjoint constraints each need their own vertex
    used = 0
    count = 0
    for c in constraints:
        if not c & used:
            used |= c
            count += 1
    return count


def _restrict(constraints, allowed):
    out = []
    for c in constraints:
        c &= allowed
        if not c:
            return None
        out.append(c)
    out.sort(key=int.bit_count)
    return out


def find_cover(constraints: list[int], allowed: int, size: int, counter: Counter) -> int | None:
    """Some set of at most ``size`` vertices from ``allowed`` hitting every constraint.

    Branches on the smallest remaining constraint; a vertex rejected in one
    branch is excluded from the later ones, so no subset is visited twice.
    """
    counter.tick()
    if not constraints:
        return 0
    if size <= 0:
        return None
    restricted = _restrict(constraints, allowed)
    if restricted is None or _packing_bound(restricted) > size:
        return None
    pivot = restricted[0]
    for v in bits(pivot):
        bit = 1 << v
        rest = [c for c in restricted if not c & bit]
        found = find_cover(rest, allowed, size - 1, counter)
        if found is not None:
            return found | bit
        allowed &= ~bit
        restricted = _restrict(restricted, allowed)
        if restricted is None:
            return None
    return None


def lower_bound(constraints: list[int]) -> int:
    return _packing_bound(sorted(constraints, key=int.bit_count))


def minimum_size(constraints: list[int], n: int, counter: Counter, start: int = 0) -> int:
    """Smallest ``k`` admitting a hitting set, by increasing cardinality."""
    everything = (1 << n) - 1
    if any(not c for c in constraints):
        raise ValueError("an empty constraint can never be hit")
    k = max(start, lower_bound(constraints))
    while find_cover(constraints, everything, k, counter) is None:
        k += 1
    return k


def first_cover(constraints: list[int], n: int, size: int, counter: Counter) -> int | None:
    """Lexicographically smallest hitting set of exactly ``size`` vertices.

    Sets compare as sorted index sequences.  Vertices are decided in
    increasing order; ``v`` is taken whenever the constraints it leaves can
    still be hit by ``size - 1`` vertices above ``v``.
    """
    everything = (1 << n) - 1
    if size > n or find_cover(constraints, everything, size, counter) is None:
        return None
    chosen = 0
    remaining = size
    for v in range(n):
        if remaining == 0:
            break
        bit = 1 << v
        above = everything & ~((bit << 1) - 1)
        rest = [c for c in constraints if not c & bit]
        if n - v - 1 >= remaining - 1 and find_cover(rest, above, remaining - 1, counter) is not None:
            chosen |= bit
            remaining -= 1
            constraints = rest
    return chosen


def all_covers(constraints: list[int], n: int, size: int, counter: Counter) -> Iterator[int]:
    """Every hitting set of exactly ``size`` vertices, in lexicographic order.

    For ``size`` above the minimum this includes non-minimal supersets.
    """
    everything = (1 << n) - 1

    def extend(chosen, start, remaining, live):
        if remaining == 0:
            if not live:
                yield chosen
            return
        for v in range(start, n - remaining + 1):
            counter.tick()
            bit = 1 << v
            rest = [c for c in live if not c & bit]
            above = everything & ~((bit << 1) - 1)
            if find_cover(rest, above, remaining - 1, counter) is None:
                continue
            yield from extend(chosen | bit, v + 1, remaining - 1, rest)

    yield from extend(0, 0, size, list(constraints))
