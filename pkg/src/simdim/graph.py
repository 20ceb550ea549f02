"""Immutable small graphs stored as rows of neighbour bitmasks.

Vertex ``i`` of a graph on ``n`` vertices is bit ``i`` of a Python int, so a
vertex set is a single machine-word-sized integer (``n <= 64``).  Graphs keep
an optional tuple of external labels; algorithms work on the internal
indices ``0..n-1`` and the labels are only used for input and output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityExceeded, InvalidParameter, UnsupportedMetric

MAX_ORDER = 64

#: table entry for a pair in different components under the full metric
UNREACHABLE = -1

#: girth of an acyclic graph
INFINITE = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[i]`` is the bitmask of the open neighbourhood of ``i``.  The name
    does not take part in equality.
    """

    n: int
    adj: tuple[int, ...]
    name: str = field(default="G", compare=False)
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise CapacityExceeded(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise InvalidParameter("adjacency rows do not match the order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidParameter(f"row {i} references a vertex outside [0, {self.n})")
            if row >> i & 1:
                raise InvalidParameter(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise InvalidParameter(f"edge {i}-{j} is not symmetric")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        else:
            labels = tuple(int(x) for x in self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n or min(labels) < 0:
                raise InvalidParameter("labels must be n distinct non-negative integers")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "G",
                   labels: Sequence[int] | None = None) -> "Graph":
        if not 1 <= n <= MAX_ORDER:
            raise CapacityExceeded(f"order {n} outside [1, {MAX_ORDER}]")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge {u}-{v} outside [0, {n})")
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), name, None if labels is None else tuple(labels))

    # -- basic queries -------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighbourhood of ``v`` as a mask."""
        return self.adj[v] | 1 << v

    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.n))

    # -- label translation ----------------------------------------------------

    def label_of(self, v: int) -> int:
        return self.labels[v]

    def to_labels(self, vertices: Iterable[int] | int) -> tuple[int, ...]:
        """Sorted external labels of a vertex set (mask or iterable)."""
        if isinstance(vertices, int):
            vertices = bits(vertices)
        return tuple(sorted(self.labels[v] for v in vertices))

    def from_labels(self, labels: Iterable[int]) -> frozenset[int]:
        index = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return frozenset(index[lab] for lab in labels)
        except KeyError as exc:
            raise InvalidParameter(f"unknown vertex label {exc.args[0]}") from None

    # -- derived graphs -------------------------------------------------------

    def renamed(self, name: str) -> "Graph":
        return Graph(self.n, self.adj, name, self.labels)

    def relabel(self, perm: Sequence[int], name: str | None = None) -> "Graph":
        """Image ``f(G)`` of the graph under the vertex permutation ``perm``.

        Edge ``{u, v}`` becomes ``{perm[u], perm[v]}``; labels stay attached to
        positions, so the result lives on the same labelled vertex set.
        """
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameter("not a permutation of the vertex set")
        adj = [0] * self.n
        for u in range(self.n):
            adj[perm[u]] = to_mask(perm[w] for w in bits(self.adj[u]))
        return Graph(self.n, tuple(adj), name or self.name, self.labels)

    def induced(self, vertices: Iterable[int] | int, name: str | None = None) -> "Graph":
        """Subgraph induced by a vertex set, re-indexed in increasing order."""
        keep = list(bits(vertices)) if isinstance(vertices, int) else sorted(set(vertices))
        if not keep:
            raise InvalidParameter("cannot induce on an empty vertex set")
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph.from_edges(len(keep), edges, name or self.name,
                                [self.labels[v] for v in keep])

    def delete_vertex(self, v: int) -> "Graph":
        if self.n < 2:
            raise InvalidParameter("cannot delete the only vertex")
        return self.induced([u for u in range(self.n) if u != v], f"{self.name}-{self.labels[v]}")


@dataclass(frozen=True)
class GraphFamily:
    """Ordered, non-empty list of graphs on a common vertex count."""

    members: tuple[Graph, ...]

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise InvalidParameter("a family needs at least one member")
        n = members[0].n
        if any(g.n != n for g in members):
            raise InvalidParameter("family members have different orders")
        object.__setattr__(self, "members", members)

    @property
    def n(self) -> int:
        return self.members[0].n

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]


def as_family(obj) -> GraphFamily:
    """Accept a family, a single graph or any sequence of graphs."""
    if isinstance(obj, GraphFamily):
        return obj
    if isinstance(obj, Graph):
        return GraphFamily((obj,))
    return GraphFamily(tuple(obj))


# -- metric selectors ---------------------------------------------------------

@dataclass(frozen=True)
class Full:
    def __str__(self):
        return "full"


@dataclass(frozen=True)
class Truncated:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParameter("truncation threshold must be >= 1")

    def __str__(self):
        return "adj" if self.t == 2 else f"t={self.t}"


FULL = Full()
ADJ = Truncated(2)


def parse_metric(text: str):
    """``full``, ``adj`` (the truncation at 2) or ``t=<k>``."""
    text = text.strip().lower()
    if text == "full":
        return FULL
    if text == "adj":
        return ADJ
    if text.startswith("t="):
        try:
            return Truncated(int(text[2:]))
        except ValueError:
            pass
    raise InvalidParameter(f"unknown metric {text!r}")


@dataclass(frozen=True, eq=False)
class MetricTable:
    n: int
    metric: object
    dist: np.ndarray

    def __getitem__(self, key):
        return int(self.dist[key])


@lru_cache(maxsize=4096)
def _bfs_table(adj: tuple[int, ...]) -> np.ndarray:
    n = len(adj)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        seen = frontier = 1 << s
        d = 0
        while frontier:
            nxt = 0
            for v in bits(frontier):
                dist[s, v] = d
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
    dist.setflags(write=False)
    return dist


def metric_table(g: Graph, metric=FULL) -> MetricTable:
    """All-pairs distances under the full or a truncated metric.

    Truncation clamps at ``t`` and sends pairs in different components to
    ``t``; the full metric marks them ``UNREACHABLE``.
    """
    base = _bfs_table(g.adj)
    if isinstance(metric, Truncated):
        t = metric.t
        dist = np.where((base == UNREACHABLE) | (base > t), t, base)
        dist.setflags(write=False)
        return MetricTable(g.n, metric, dist)
    if not isinstance(metric, Full):
        raise InvalidParameter(f"unknown metric {metric!r}")
    return MetricTable(g.n, metric, base)


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise UnsupportedMetric(f"graph {g.name} is disconnected; the full metric is undefined")


def diameter(g: Graph) -> int:
    """Largest finite eccentricity, or ``UNREACHABLE`` if disconnected."""
    base = _bfs_table(g.adj)
    if (base == UNREACHABLE).any():
        return UNREACHABLE
    return int(base.max())


def girth(g: Graph):
    """Length of a shortest cycle; ``INFINITE`` for forests."""
    best = INFINITE
    for root in range(g.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            for w in bits(g.adj[u]):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, depth[u] + depth[w] + 1)
    return best


# -- constructors -------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("path order must be >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("cycle order must be >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("complete graph order must be >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def empty(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("empty graph order must be >= 1")
    return Graph.from_edges(n, [], f"N{n}")


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise InvalidParameter("part sizes must be >= 1")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)], f"K{r},{s}")


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "complete_bipartite": complete_bipartite,
}


def build_standard(kind: str, *orders: int) -> Graph:
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise InvalidParameter(f"unknown graph kind {kind!r}") from None
    return builder(*orders)


def disjoint_union(g: Graph, h: Graph, name: str | None = None) -> Graph:
    """``g`` keeps labels ``0..n_g-1``; ``h`` is shifted by ``n_g``."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityExceeded(f"union has {n} vertices")
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(n, edges, name or f"{g.name}u{h.name}")


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj))
    return Graph(g.n, adj, f"co{g.name}", g.labels)
