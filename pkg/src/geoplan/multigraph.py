"""Finite undirected multigraphs with loops.

Edges are identified by their position in ``Multigraph.edges``; parallel
edges and loops are allowed.  A loop contributes 2 to the degree of its
vertex.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FormatError, UsageError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise UsageError("vertex_count must be non-negative")
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise UsageError(f"edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(vertex_count, tuple((int(u), int(v)) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incident_edges(self, v: int) -> list[int]:
        """Indices of edges touching ``v``; a loop is listed once."""
        return [i for i, (a, b) in enumerate(self.edges) if a == v or b == v]

    def is_loop(self, i: int) -> bool:
        a, b = self.edges[i]
        return a == b

    def incidence_rows(self) -> tuple[tuple[int, ...], ...]:
        """Edge-by-vertex incidence matrix over {0, 1, 2}."""
        rows = []
        for u, v in self.edges:
            row = [0] * self.vertex_count
            row[u] += 1
            row[v] += 1
            rows.append(tuple(row))
        return tuple(rows)

    def to_text(self) -> str:
        lines = [f"{self.vertex_count} {self.edge_count}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Multigraph":
        """Read the ``n l`` header followed by ``l`` lines of ``u v``."""
        rows = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1)]
        rows = [(no, toks) for no, toks in rows if toks and not toks[0].startswith("#")]
        if not rows:
            raise FormatError("empty graph file")
        no, head = rows[0]
        if len(head) != 2:
            raise FormatError("header must be 'n l'", no)
        try:
            n, ell = int(head[0]), int(head[1])
        except ValueError:
            raise FormatError("header must contain two integers", no) from None
        body = rows[1:]
        if len(body) != ell:
            raise FormatError(f"expected {ell} edge lines, found {len(body)}", no)
        edges = []
        for no, toks in body:
            if len(toks) != 2:
                raise FormatError("edge line must be 'u v'", no)
            try:
                u, v = int(toks[0]), int(toks[1])
            except ValueError:
                raise FormatError("edge endpoints must be integers", no) from None
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"endpoint out of range 0..{n - 1}", no)
            edges.append((u, v))
        return cls(n, tuple(edges))


@dataclass(frozen=True)
class LocalGraph:
    """A multigraph together with the ids its vertices and edges had in a larger structure."""

    graph: Multigraph
    vertex_ids: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def degree_of(self, vertex_id: int) -> int:
        if vertex_id not in self.vertex_ids:
            return 0
        return degree(self.graph, self.vertex_ids.index(vertex_id))


def local_graph(vertex_ids: Iterable[int], edges: Sequence[tuple[int, int, int]]) -> LocalGraph:
    """Build a LocalGraph from ``(edge_id, u, v)`` triples over global vertex ids."""
    vids = tuple(sorted(set(vertex_ids)))
    index = {x: i for i, x in enumerate(vids)}
    g = Multigraph(len(vids), tuple((index[u], index[v]) for _, u, v in edges))
    return LocalGraph(g, vids, tuple(e for e, _, _ in edges))


def parse_degree_list(text: str) -> list[int]:
    """Entries of ``5,3,2^4`` style input, without any validity checks."""
    vals = []
    for tok in re.split(r"[,\s]+", text.strip().strip("()")):
        if not tok:
            continue
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
        if not m:
            raise FormatError(f"bad degree sequence token {tok!r}")
        vals += [int(m.group(1))] * int(m.group(2) or 1)
    return vals


class DegreeSequence(tuple):
    """Non-increasing tuple of positive integers with an even sum."""

    def __new__(cls, entries: Iterable[int]):
        vals = sorted((int(x) for x in entries), reverse=True)
        if not vals:
            raise UsageError("a degree sequence needs at least one entry")
        if vals[-1] < 1:
            raise UsageError("degree sequence entries must be positive")
        if sum(vals) % 2:
            raise UsageError(f"degree sequence {tuple(vals)} has an odd sum")
        return super().__new__(cls, vals)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse ``5,3,2^4`` style input; ``x^k`` repeats ``x`` k times."""
        return cls(parse_degree_list(text))

    @property
    def total(self) -> int:
        return sum(self)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"DegreeSequence({str(self)})"


@dataclass(frozen=True)
class DoubleGraph:
    """Every edge of ``base`` duplicated; half-edges ``2i`` and ``2i+1`` copy edge ``i``."""

    base: Multigraph

    @property
    def half_edge_count(self) -> int:
        return 2 * self.base.edge_count

    @staticmethod
    def base_edge(half_edge: int) -> int:
        return half_edge // 2

    @staticmethod
    def copies(edge: int) -> tuple[int, int]:
        return 2 * edge, 2 * edge + 1

    def as_multigraph(self) -> Multigraph:
        return Multigraph(self.base.vertex_count, tuple(e for e in self.base.edges for _ in range(2)))


def degree(g: Multigraph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise UsageError(f"vertex {v} out of range")
    return sum((a == v) + (b == v) for a, b in g.edges)


def degree_sequence(g: Multigraph) -> DegreeSequence:
    if g.edge_count == 0:
        raise UsageError("degree sequence of an edgeless graph is undefined")
    return DegreeSequence(g.degrees())


def _components(n: int, edges: Iterable[Edge]) -> list[int]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    comp = [-1] * n
    c = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = c
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = c
                    queue.append(y)
        c += 1
    return comp


def is_connected(g: Multigraph) -> bool:
    if g.vertex_count <= 1:
        return True
    return max(_components(g.vertex_count, g.edges)) == 0


def is_eulerian(g: Multigraph) -> bool:
    """Connected on its non-isolated vertices with all degrees even."""
    if g.edge_count == 0:
        raise UsageError("Eulerian test on a graph with no edges")
    deg = g.degrees()
    if any(d % 2 for d in deg):
        return False
    comp = _components(g.vertex_count, g.edges)
    return len({comp[v] for v in range(g.vertex_count) if deg[v]}) == 1


def double_graph(g: Multigraph) -> DoubleGraph:
    return DoubleGraph(g)
