"""Graph families generated by permutations that fix a vertex set pointwise.

A permutation is a tuple ``f`` with ``f[v]`` the image of vertex ``v``.
``G'`` belongs to the family of ``G`` for ``(B, f)`` when the neighbourhood of
every ``x`` in ``B`` is the ``f``-image of its neighbourhood in ``G``; edges
with both ends outside ``B`` are unconstrained.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidParameter
from .graph import Graph, GraphFamily, bits, to_mask
from .resolving import min_generator

Permutation = tuple


@dataclass(frozen=True)
class StabilizerSpec:
    n: int
    fixed: frozenset[int]

    def __post_init__(self):
        fixed = frozenset(self.fixed)
        if any(not 0 <= v < self.n for v in fixed):
            raise InvalidParameter("fixed set exceeds the vertex range")
        object.__setattr__(self, "fixed", fixed)

    @property
    def free(self) -> list[int]:
        return [v for v in range(self.n) if v not in self.fixed]

    def size(self) -> int:
        return math.factorial(self.n - len(self.fixed))


def _compose(spec: StabilizerSpec, images) -> Permutation:
    perm = list(range(spec.n))
    for v, w in zip(spec.free, images):
        perm[v] = w
    return tuple(perm)


def iter_stabilizer(spec: StabilizerSpec):
    """Every permutation fixing ``spec.fixed``, lexicographic on the images
    of the free vertices."""
    free = spec.free
    for images in itertools.permutations(free):
        yield _compose(spec, images)


def random_stabilizer_element(spec: StabilizerSpec, rng: random.Random) -> Permutation:
    images = spec.free
    rng.shuffle(images)
    return _compose(spec, images)


def stabilizer_enumerate(spec: StabilizerSpec, limit: int = 40320, seed: int = 0) -> list[Permutation]:
    """The whole stabilizer when it has at most ``limit`` elements, otherwise
    ``limit`` seeded random elements."""
    if spec.size() <= limit:
        return list(iter_stabilizer(spec))
    rng = random.Random(seed)
    return [random_stabilizer_element(spec, rng) for _ in range(limit)]


def is_member_Bf(g2: Graph, g: Graph, B, f: Permutation) -> bool:
    if g2.n != g.n or len(f) != g.n:
        raise InvalidParameter("graphs and permutation must share the vertex count")
    for x in B:
        if f[x] != x:
            raise InvalidParameter(f"permutation moves vertex {x} of the fixed set")
        if g2.adj[x] != to_mask(f[w] for w in bits(g.adj[x])):
            return False
    return True


def is_member_B(g2: Graph, g: Graph, B, budget: int = 10**6) -> tuple[bool, Permutation | None]:
    """Search the stabilizer of ``B`` for a permutation witnessing membership."""
    if g2.n != g.n:
        raise InvalidParameter("graphs must share the vertex count")
    spec = StabilizerSpec(g.n, frozenset(B))
    if spec.size() > budget:
        raise BudgetExceeded(f"stabilizer has {spec.size()} elements (budget {budget})")
    # cheap necessary condition: neighbourhoods inside B are fixed by every f
    inside = to_mask(spec.fixed)
    for x in spec.fixed:
        if g2.adj[x] & inside != g.adj[x] & inside or g2.degree(x) != g.degree(x):
            return False, None
    for f in iter_stabilizer(spec):
        if is_member_Bf(g2, g, spec.fixed, f):
            return True, f
    return False, None


def sample_members(g: Graph, B, mode: str = "relabel", seed: int = 0, count: int = 4) -> GraphFamily:
    """``count`` members of the family of ``g`` for ``B``, starting with ``g``.

    ``relabel`` emits images ``f(g)``; ``free-outside`` also redraws every
    edge with both ends outside ``B`` as a fair coin.
    """
    if mode not in ("relabel", "free-outside"):
        raise InvalidParameter(f"unknown sampling mode {mode!r}")
    if count < 1:
        raise InvalidParameter("count must be >= 1")
    spec = StabilizerSpec(g.n, frozenset(B))
    rng = random.Random(seed)
    outside = spec.free
    members = [g]
    for i in range(1, count):
        f = random_stabilizer_element(spec, rng)
        image = g.relabel(f, f"{g.name}~{i}")
        if mode == "free-outside":
            keep = [(u, v) for u, v in image.edges() if u in spec.fixed or v in spec.fixed]
            redraw = [(u, v) for u, v in itertools.combinations(outside, 2) if rng.random() < 0.5]
            image = Graph.from_edges(g.n, keep + redraw, image.name, g.labels)
        members.append(image)
    return GraphFamily(tuple(members))


def adjacency_basis(g: Graph) -> frozenset[int]:
    return min_generator(g)[1]


def weakly_induced(g: Graph, B) -> Graph:
    """``N[B]`` with every edge of ``g`` that has an end in ``B``."""
    b = to_mask(B)
    if not b:
        raise InvalidParameter("weakly induced subgraph needs a non-empty set")
    closed = 0
    for x in bits(b):
        closed |= g.closed(x)
    keep = list(bits(closed))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if (b >> u | b >> v) & 1]
    return Graph.from_edges(len(keep), edges, f"{g.name}[B]w", [g.labels[v] for v in keep])


def small_iso(g1: Graph, g2: Graph, max_order: int = 10) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible images."""
    if max(g1.n, g2.n) > max_order:
        raise BudgetExceeded(f"isomorphism test limited to order {max_order}")
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    n = g1.n
    deg1 = [g1.degree(v) for v in range(n)]
    deg2 = [g2.degree(v) for v in range(n)]
    if sorted(deg1) != sorted(deg2):
        return False
    order = sorted(range(n), key=lambda v: (-deg1[v], v))
    mapping = [-1] * n
    used = 0

    def extend(depth):
        nonlocal used
        if depth == n:
            return True
        u = order[depth]
        for v in range(n):
            if used >> v & 1 or deg2[v] != deg1[u]:
                continue
            if any(g1.has_edge(u, w) != g2.has_edge(v, mapping[w]) for w in order[:depth]):
                continue
            mapping[u] = v
            used |= 1 << v
            if extend(depth + 1):
                return True
            used &= ~(1 << v)
            mapping[u] = -1
        return False

    return extend(0)
