"""Small undirected graph with BFS, quotients and DOT export."""
from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable


class Graph:
    """Simple undirected graph; nodes are hashable, iteration order is insertion order."""

    def __init__(self, nodes: Iterable[Hashable] = (), edges: Iterable[tuple] = ()):
        self.adj: dict = {}
        self.attrs: dict = {}
        for n in nodes:
            self.add_node(n)
        for a, b in edges:
            self.add_edge(a, b)

    def add_node(self, n, **attrs) -> None:
        if n not in self.adj:
            self.adj[n] = set()
            self.attrs[n] = {}
        self.attrs[n].update(attrs)

    def add_edge(self, a, b) -> None:
        """Add ``a -- b``; loops are dropped."""
        self.add_node(a)
        self.add_node(b)
        if a != b:
            self.adj[a].add(b)
            self.adj[b].add(a)

    @property
    def nodes(self) -> list:
        return list(self.adj)

    def edges(self) -> list[tuple]:
        order = {n: i for i, n in enumerate(self.adj)}
        out = []
        for a in self.adj:
            for b in sorted(self.adj[a], key=order.__getitem__):
                if order[a] < order[b]:
                    out.append((a, b))
        return out

    def __contains__(self, n) -> bool:
        return n in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    def neighbors(self, n) -> set:
        if n not in self.adj:
            raise KeyError(f"unknown node {n!r}")
        return self.adj[n]

    def degree(self, n) -> int:
        return len(self.neighbors(n))

    def bfs(self, sources: Iterable) -> dict:
        """Distances from the nearest source to every reachable node."""
        dist = {}
        queue = deque()
        for s in sources:
            if s not in self.adj:
                raise KeyError(f"unknown node {s!r}")
            if s not in dist:
                dist[s] = 0
                queue.append(s)
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def distance(self, a, b) -> int | None:
        """BFS distance, or ``None`` when ``b`` is unreachable."""
        if b not in self.adj:
            raise KeyError(f"unknown node {b!r}")
        return self.bfs([a]).get(b)

    def is_connected(self) -> bool:
        if not self.adj:
            return True
        return len(self.bfs([next(iter(self.adj))])) == len(self.adj)

    def subgraph(self, keep: Iterable) -> Graph:
        keep = [n for n in self.adj if n in set(keep)]
        ks = set(keep)
        g = Graph()
        for n in keep:
            g.add_node(n, **self.attrs[n])
        for a, b in self.edges():
            if a in ks and b in ks:
                g.add_edge(a, b)
        return g

    def quotient(self, cls: Callable) -> Graph:
        """Image under the node map ``cls``; loops and multi-edges vanish."""
        q = Graph()
        for n in self.adj:
            q.add_node(cls(n), **self.attrs[n])
        for a, b in self.edges():
            q.add_edge(cls(a), cls(b))
        return q

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        for n in self.adj:
            g.add_node(n, **self.attrs[n])
        g.add_edges_from(self.edges())
        return g

    def to_dot(self, name: str = "G", label: Callable | None = None) -> str:
        label = label or str
        ids = {n: f"n{i}" for i, n in enumerate(self.adj)}
        lines = [f"graph {name} {{"]
        for n, i in ids.items():
            extra = "".join(f", {k}=\"{v}\"" for k, v in sorted(self.attrs[n].items()))
            text = str(label(n)).replace('"', '\\"')
            lines.append(f'  {i} [label="{text}"{extra}];')
        for a, b in self.edges():
            lines.append(f"  {ids[a]} -- {ids[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def box_product_distance(g1: Graph, g2: Graph, a: tuple, b: tuple) -> int | None:
    """Distance in the Cartesian product ``g1 x g2`` between ``(a1,a2)`` and ``(b1,b2)``."""
    d1 = g1.distance(a[0], b[0])
    d2 = g2.distance(a[1], b[1])
    if d1 is None or d2 is None:
        return None
    return d1 + d2
