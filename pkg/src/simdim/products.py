"""Corona and join products with a fixed vertex layout.

In ``G ⊙ H`` the roots come first (root ``i`` is vertex ``i``) and copy ``i``
of ``H`` occupies the contiguous block starting at ``n + i * n_h``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityExceeded
from .graph import MAX_ORDER, Graph, GraphFamily, as_family


@dataclass(frozen=True)
class CoronaLayout:
    n: int
    n_h: int

    @property
    def order(self) -> int:
        return self.n * (1 + self.n_h)

    def root(self, i: int) -> int:
        return i

    def copy(self, i: int, a: int) -> int:
        return self.n + i * self.n_h + a

    def copy_mask(self, i: int) -> int:
        return ((1 << self.n_h) - 1) << self.copy(i, 0)

    @property
    def roots_mask(self) -> int:
        return (1 << self.n) - 1

    def lift(self, i: int, subset) -> frozenset[int]:
        """Vertices of copy ``i`` corresponding to ``subset`` of ``V(H)``."""
        return frozenset(self.copy(i, a) for a in subset)

    def spread(self, subset) -> frozenset[int]:
        """Union of the lifts of ``subset`` into every copy."""
        return frozenset(v for i in range(self.n) for v in self.lift(i, subset))

    def project(self, i: int, vertices) -> frozenset[int]:
        lo = self.copy(i, 0)
        return frozenset(v - lo for v in vertices if lo <= v < lo + self.n_h)


def _product_name(left: str, right: str, sym: str, ascii_names: bool) -> str:
    word = {"⊙": "odot", "+": "plus"}[sym]
    return f"{left}{word}{right}" if ascii_names else f"{left}{sym}{right}"


def corona(g: Graph, h: Graph, ascii_names: bool = False) -> Graph:
    layout = CoronaLayout(g.n, h.n)
    if layout.order > MAX_ORDER:
        raise CapacityExceeded(f"{g.name} ⊙ {h.name} would have {layout.order} vertices")
    edges = list(g.edges())
    for i in range(g.n):
        edges.extend((layout.copy(i, a), layout.copy(i, b)) for a, b in h.edges())
        edges.extend((i, layout.copy(i, a)) for a in range(h.n))
    return Graph.from_edges(layout.order, edges, _product_name(g.name, h.name, "⊙", ascii_names))


def join(g: Graph, h: Graph, ascii_names: bool = False) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityExceeded(f"{g.name} + {h.name} would have {n} vertices")
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    edges.extend((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph.from_edges(n, edges, _product_name(g.name, h.name, "+", ascii_names))


def family_corona(gs, hs, ascii_names: bool = False) -> GraphFamily:
    """All products ``G ⊙ H``, ``G``-major."""
    gs, hs = as_family(gs), as_family(hs)
    return GraphFamily(tuple(corona(g, h, ascii_names) for g in gs for h in hs))


def family_join(gs, hs, ascii_names: bool = False) -> GraphFamily:
    gs, hs = as_family(gs), as_family(hs)
    return GraphFamily(tuple(join(g, h, ascii_names) for g in gs for h in hs))


def corona_layout(gs, hs) -> CoronaLayout:
    return CoronaLayout(as_family(gs).n, as_family(hs).n)
