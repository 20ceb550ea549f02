"""Generators, bases and domination for single graphs and families.

Public functions take vertex sets as iterables of internal indices and return
``frozenset`` objects.  ``F`` may be a :class:`GraphFamily`, a single graph
or a list of graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InvalidParameter, UnsupportedMetric
from .graph import ADJ, FULL, Full, Graph, as_family, bits, is_connected, metric_table, to_mask
from .search import (DEFAULT_BUDGET, Counter, all_covers, first_cover, minimal_constraints,
                     minimum_size)


def _check_metric(family, metric) -> None:
    if isinstance(metric, Full):
        for g in family:
            if not is_connected(g):
                raise UnsupportedMetric(f"member {g.name} is disconnected; the full metric is undefined")


def _as_mask(S) -> int:
    return S if isinstance(S, int) else to_mask(S)


def is_generator(F, metric, S) -> bool:
    """True iff every pair of distinct vertices has different distance
    vectors to ``S`` in every member graph."""
    family = as_family(F)
    _check_metric(family, metric)
    idx = sorted(bits(_as_mask(S)))
    if any(v >= family.n for v in idx):
        raise InvalidParameter("vertex set exceeds the vertex range")
    if not idx:
        return family.n == 1
    for g in family:
        vectors = metric_table(g, metric).dist[idx, :].T
        if len(np.unique(vectors, axis=0)) != g.n:
            return False
    return True


@lru_cache(maxsize=1024)
def _constraints(adjs: tuple[tuple[int, ...], ...], metric) -> tuple[int, ...]:
    n = len(adjs[0])
    if n == 1:
        return ()
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    iu, ju = np.triu_indices(n, 1)
    masks = set()
    for adj in adjs:
        dist = metric_table(Graph(n, adj), metric).dist
        differs = dist[:, iu] != dist[:, ju]
        pair_masks = np.bitwise_or.reduce(np.where(differs, weights[:, None], np.uint64(0)), axis=0)
        masks.update(int(m) for m in pair_masks)
    return tuple(minimal_constraints(masks))


def distinguisher_constraints(F, metric) -> list[int]:
    """Minimal sets of vertices that must each be hit by a generator.

    One mask per vertex pair and member, holding the vertices that tell the
    pair apart; masks containing another mask are dropped.
    """
    family = as_family(F)
    _check_metric(family, metric)
    return list(_constraints(tuple(g.adj for g in family), metric))


# -- twins --------------------------------------------------------------------

@dataclass(frozen=True)
class TwinClass:
    kind: str  # "true", "false" or "singleton"
    members: frozenset[int]


def twin_classes(g: Graph) -> list[TwinClass]:
    """Partition of the vertices into maximal twin classes.

    Twins share their closed (true) or open (false) neighbourhood; a class
    with two or more vertices is always of a single kind.
    """
    by_closed: dict[int, int] = {}
    by_open: dict[int, int] = {}
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in range(g.n):
        for key, table in ((g.closed(v), by_closed), (g.adj[v], by_open)):
            if key in table:
                parent[find(v)] = find(table[key])
            else:
                table[key] = v
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = []
    for members in groups.values():
        if len(members) == 1:
            kind = "singleton"
        elif g.has_edge(members[0], members[1]):
            kind = "true"
        else:
            kind = "false"
        classes.append(TwinClass(kind, frozenset(members)))
    classes.sort(key=lambda c: min(c.members))
    return classes


def twin_lower_bound(F) -> int:
    """Every generator keeps all but one vertex of each twin class."""
    return max(sum(len(c.members) - 1 for c in twin_classes(g)) for g in as_family(F))


# -- minimum generators ---------------------------------------------------------

def min_generator(F, metric=ADJ, budget: int | None = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Exact (simultaneous) dimension and the lexicographically first basis."""
    family = as_family(F)
    constraints = distinguisher_constraints(family, metric)
    counter = Counter(budget)
    k = minimum_size(constraints, family.n, counter, start=twin_lower_bound(family))
    witness = first_cover(constraints, family.n, k, counter)
    return k, frozenset(bits(witness))


def adjacency_dimension(g: Graph, budget: int | None = DEFAULT_BUDGET) -> int:
    return min_generator(g, ADJ, budget)[0]


def metric_dimension(g: Graph, budget: int | None = DEFAULT_BUDGET) -> int:
    return min_generator(g, FULL, budget)[0]


def simultaneous_adjacency_dimension(F, budget: int | None = DEFAULT_BUDGET) -> int:
    return min_generator(F, ADJ, budget)[0]


def simultaneous_metric_dimension(F, budget: int | None = DEFAULT_BUDGET) -> int:
    return min_generator(F, FULL, budget)[0]


@dataclass(frozen=True)
class BasisCatalog:
    dimension: int
    bases: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.bases)

    def __contains__(self, item):
        return frozenset(item) in self.bases


def enumerate_bases(F, metric=ADJ, budget: int | None = DEFAULT_BUDGET) -> BasisCatalog:
    """All minimum (simultaneous) generators in lexicographic order."""
    family = as_family(F)
    constraints = distinguisher_constraints(family, metric)
    counter = Counter(budget)
    k = minimum_size(constraints, family.n, counter, start=twin_lower_bound(family))
    bases = tuple(frozenset(bits(m)) for m in all_covers(constraints, family.n, k, counter))
    return BasisCatalog(k, bases)


# -- domination -----------------------------------------------------------------

def is_dominating(g: Graph, S) -> bool:
    mask = _as_mask(S)
    return all(g.closed(v) & mask for v in range(g.n))


def min_dominating_set(F, budget: int | None = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Simultaneous domination number and the lexicographically first witness."""
    family = as_family(F)
    constraints = minimal_constraints(g.closed(v) for g in family for v in range(g.n))
    counter = Counter(budget)
    k = minimum_size(constraints, family.n, counter)
    return k, frozenset(bits(first_cover(constraints, family.n, k, counter)))


def gamma(g: Graph, budget: int | None = DEFAULT_BUDGET) -> int:
    return min_dominating_set(g, budget)[0]


def simultaneous_gamma(F, budget: int | None = DEFAULT_BUDGET) -> int:
    return min_dominating_set(F, budget)[0]


def gamma_prime_witness(g: Graph, budget: int | None = DEFAULT_BUDGET) -> tuple[int, int, frozenset[int]]:
    """``min_v gamma(G - v)`` with the first minimising ``v`` and a dominating
    set of ``G - v`` expressed in the indices of ``G``."""
    if g.n < 2:
        raise InvalidParameter("gamma' needs at least two vertices")
    best = None
    for v in range(g.n):
        k, dom = min_dominating_set(g.delete_vertex(v), budget)
        if best is None or k < best[0]:
            lifted = frozenset(u if u < v else u + 1 for u in dom)
            best = (k, v, lifted)
    return best


def gamma_prime(g: Graph, budget: int | None = DEFAULT_BUDGET) -> int:
    return gamma_prime_witness(g, budget)[0]


# -- premises of the corona theorems ---------------------------------------------

@dataclass(frozen=True)
class PremiseProfile:
    """Basis-level facts about a family, computed from its full basis catalog.

    A basis is *trapped* when it lies inside the open neighbourhood of some
    vertex in some member.
    """

    sd_a: int
    n_bases: int
    exists_dominating_basis: bool
    exists_nondominating_basis: bool
    exists_basis_never_inside_neighbourhood: bool
    exists_dominating_untrapped_basis: bool
    all_dominating_bases_trapped: bool
    all_bases_trapped: bool
    witnesses: dict = field(default_factory=dict, compare=False)


def trap_of(F, B) -> tuple[int, int] | None:
    """First ``(member index, vertex)`` whose open neighbourhood contains ``B``."""
    mask = _as_mask(B)
    for i, h in enumerate(as_family(F)):
        for v in range(h.n):
            if h.adj[v] & mask == mask:
                return i, v
    return None


def premise_profile(F, budget: int | None = DEFAULT_BUDGET) -> PremiseProfile:
    family = as_family(F)
    catalog = enumerate_bases(family, ADJ, budget)
    witnesses: dict = {}
    flags = dict(dominating=False, nondominating=False, untrapped=False, dom_untrapped=False)
    all_dom_trapped = True
    all_trapped = True
    dominating_bases = []
    for basis in catalog.bases:
        dominating = all(is_dominating(h, basis) for h in family)
        trap = trap_of(family, basis)
        if dominating:
            flags["dominating"] = True
            dominating_bases.append(basis)
            witnesses.setdefault("dominating_basis", basis)
            if trap is None:
                flags["dom_untrapped"] = True
                all_dom_trapped = False
                witnesses.setdefault("dominating_untrapped_basis", basis)
            else:
                witnesses.setdefault("dominating_basis_trap", (basis, trap))
        else:
            flags["nondominating"] = True
            witnesses.setdefault("nondominating_basis", basis)
        if trap is None:
            flags["untrapped"] = True
            all_trapped = False
            witnesses.setdefault("untrapped_basis", basis)
    witnesses["dominating_bases"] = tuple(dominating_bases)
    return PremiseProfile(
        sd_a=catalog.dimension,
        n_bases=len(catalog),
        exists_dominating_basis=flags["dominating"],
        exists_nondominating_basis=flags["nondominating"],
        exists_basis_never_inside_neighbourhood=flags["untrapped"],
        exists_dominating_untrapped_basis=flags["dom_untrapped"],
        all_dominating_bases_trapped=all_dom_trapped,
        all_bases_trapped=all_trapped,
        witnesses=witnesses,
    )


# -- gaps on cycles ---------------------------------------------------------------

@dataclass(frozen=True)
class GapProfile:
    ones: int
    twos: int
    threes: int
    longest: int


def gap_profile(n: int, B) -> GapProfile:
    """Maximal runs of non-members of ``B`` around the cycle ``0, 1, ..., n-1``."""
    members = set(B)
    if not members or len(members) >= n or any(not 0 <= v < n for v in members):
        raise InvalidParameter("gap profile needs a proper non-empty subset of the cycle")
    start = min(members)
    runs = []
    length = 0
    for step in range(1, n + 1):
        v = (start + step) % n
        if v in members:
            if length:
                runs.append(length)
            length = 0
        else:
            length += 1
    return GapProfile(runs.count(1), runs.count(2), runs.count(3), max(runs, default=0))
