"""Line-based text format for graphs and families.

::

    # comment
    graph C8
    n 8
    labels 1 2 3 4 5 6 7 8     (optional)
    e 1 2
    ...
    end

Edge endpoints are external vertex labels.  Without a ``labels`` line the
labels of a file are ``0..n-1`` when every endpoint is below ``n``, and
``1..n`` when every endpoint lies in ``[1, n]``; the choice is made once per
file so that all members of a family share their labels.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import ParseError, SimdimError
from .graph import Graph, GraphFamily


class _Block:
    def __init__(self, name, line):
        self.name = name
        self.line = line
        self.n = None
        self.labels = None
        self.edges = []


def _ints(parts, lineno, source):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", lineno, source) from None


def parse_graphs(text: str, source: str | None = None) -> list[Graph]:
    """Parse every graph block of ``text`` in order."""
    blocks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "graph":
            if current is not None:
                raise ParseError("'graph' inside an open block", lineno, source)
            if len(rest) != 1:
                raise ParseError("'graph' takes exactly one name", lineno, source)
            current = _Block(rest[0], lineno)
            continue
        if current is None:
            raise ParseError(f"{key!r} outside a graph block", lineno, source)
        if key == "n":
            (n,) = _ints(rest, lineno, source) if len(rest) == 1 else (None,)
            if n is None or current.n is not None:
                raise ParseError("'n' must appear once with one integer", lineno, source)
            current.n = n
        elif key == "labels":
            current.labels = _ints(rest, lineno, source)
        elif key == "e":
            if len(rest) != 2:
                raise ParseError("'e' takes two endpoints", lineno, source)
            u, v = _ints(rest, lineno, source)
            current.edges.append((u, v, lineno))
        elif key == "end":
            if current.n is None:
                raise ParseError(f"graph {current.name} has no 'n' line", lineno, source)
            blocks.append(current)
            current = None
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, source)
    if current is not None:
        raise ParseError(f"graph {current.name} is missing 'end'", current.line, source)

    implicit = [b for b in blocks if b.labels is None]
    base = 0
    if implicit and all(min(u, v) >= 1 and max(u, v) <= b.n for b in implicit for u, v, _ in b.edges):
        base = int(any(max(u, v) == b.n for b in implicit for u, v, _ in b.edges))
    graphs = []
    for b in blocks:
        labels = b.labels if b.labels is not None else list(range(base, base + b.n))
        if len(labels) != b.n:
            raise ParseError(f"graph {b.name}: {len(labels)} labels for order {b.n}", b.line, source)
        index = {lab: i for i, lab in enumerate(labels)}
        edges = []
        for u, v, lineno in b.edges:
            if u not in index or v not in index:
                raise ParseError(f"edge {u}-{v} uses an unknown vertex label", lineno, source)
            edges.append((index[u], index[v]))
        try:
            graphs.append(Graph.from_edges(b.n, edges, b.name, labels))
        except SimdimError as exc:
            raise ParseError(f"graph {b.name}: {exc}", b.line, source) from None
    return graphs


def parse_family(text: str, source: str | None = None) -> GraphFamily:
    graphs = parse_graphs(text, source)
    if not graphs:
        raise ParseError("no graph blocks found", None, source)
    if any(g.n != graphs[0].n for g in graphs):
        raise ParseError("family members have different orders", None, source)
    if any(g.labels != graphs[0].labels for g in graphs):
        raise ParseError("family members use different vertex labels", None, source)
    return GraphFamily(tuple(graphs))


def parse_graph(text: str, source: str | None = None) -> Graph:
    graphs = parse_graphs(text, source)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph block, found {len(graphs)}", None, source)
    return graphs[0]


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", None, str(path)) from None


def load_graph(path) -> Graph:
    return parse_graph(_read(path), str(path))


def load_family(path) -> GraphFamily:
    return parse_family(_read(path), str(path))


def format_graph(g: Graph) -> str:
    name = "_".join(g.name.split()) or "G"
    lines = [f"graph {name}", f"n {g.n}"]
    if g.labels != tuple(range(g.n)):
        lines.append("labels " + " ".join(map(str, g.labels)))
    edges = sorted(tuple(sorted((g.labels[u], g.labels[v]))) for u, v in g.edges())
    lines.extend(f"e {u} {v}" for u, v in edges)
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_graphs(graphs: Iterable[Graph]) -> str:
    return "".join(format_graph(g) for g in graphs)


def save_graphs(path, graphs: Iterable[Graph]) -> None:
    Path(path).write_text(format_graphs(graphs), encoding="utf-8")
