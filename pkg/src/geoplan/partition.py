"""Eulerian partitions of double graphs.

Each edge of a multigraph ``G`` is duplicated; a partition assigns a color
to both copies.  A partition is *Eulerian* when every color class is an
Eulerian subgraph, a *t-partition* when the class sizes are the entries of
``t``, and *locally connected* when, at every vertex, the colors meeting
there are linked into one component by the edges whose two copies carry
different colors.  ``G`` together with such a partition is the same data as
a geographic plan whose faces are the colors.

The search in :class:`ColoringSearch` assigns an unordered color pair to
each edge in turn.  It prunes on class capacities, on per-vertex parity,
on link-graph connectivity as soon as a vertex has all of its edges
colored, and breaks symmetry between interchangeable colors.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import BudgetExceeded, UsageError
from .multigraph import (
    LocalGraph,
    Multigraph,
    is_connected,
    is_eulerian,
    local_graph,
)
from .plan import Plan, is_geographic


@dataclass(frozen=True)
class EulerianPartition:
    """Colors of the two copies of every base edge.

    ``pairs[i]`` holds the colors of copies ``2i`` and ``2i+1`` of edge
    ``i``.  Colors are 0-based.
    """

    base: Multigraph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if len(pairs) != self.base.edge_count:
            raise UsageError("need one color pair per base edge")
        if any(a < 0 or b < 0 for a, b in pairs):
            raise UsageError("colors must be non-negative")
        object.__setattr__(self, "pairs", pairs)

    def color(self, half_edge: int) -> int:
        return self.pairs[half_edge // 2][half_edge % 2]

    @property
    def color_count(self) -> int:
        return 1 + max((c for p in self.pairs for c in p), default=-1)

    def multiplicity(self, edge: int, j: int) -> int:
        a, b = self.pairs[edge]
        return (a == j) + (b == j)

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.color_count
        for a, b in self.pairs:
            sizes[a] += 1
            sizes[b] += 1
        return sizes

    def used_colors(self) -> list[int]:
        return [j for j, s in enumerate(self.class_sizes()) if s]

    def class_degree(self, v: int, j: int) -> int:
        """Degree of ``v`` in color class ``j``."""
        total = 0
        for (a, b), (u, w) in zip(self.pairs, self.base.edges):
            mult = (a == j) + (b == j)
            total += mult * ((u == v) + (w == v))
        return total

    def to_text(self) -> str:
        return "".join(f"{i}: {a} {b}\n" for i, (a, b) in enumerate(self.pairs))

    @classmethod
    def parse(cls, base: Multigraph, text: str) -> "EulerianPartition":
        from .errors import FormatError

        pairs = {}
        for no, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                idx, rest = line.split(":")
                a, b = rest.split()
                pairs[int(idx)] = (int(a), int(b))
            except ValueError:
                raise FormatError("expected 'edge_index: color color'", no) from None
        if sorted(pairs) != list(range(base.edge_count)):
            raise FormatError("partition must list every edge index exactly once")
        return cls(base, tuple(pairs[i] for i in range(base.edge_count)))


@dataclass(frozen=True)
class LinkGraph:
    vertex: int
    colors: frozenset
    edges: tuple[tuple[int, int], ...]

    def is_connected(self) -> bool:
        if not self.colors:
            return True
        adj = {c: set() for c in self.colors}
        for j, k in self.edges:
            adj[j].add(k)
            adj[k].add(j)
        start = min(self.colors)
        seen, stack = {start}, [start]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.colors)


def class_subgraph(part: EulerianPartition, j: int) -> LocalGraph:
    """Color class ``j`` as a graph on the vertices it touches."""
    if j < 0 or j >= part.color_count or not part.class_sizes()[j]:
        raise UsageError(f"color {j} is not used by the partition")
    items = []
    for i, ((a, b), (u, v)) in enumerate(zip(part.pairs, part.base.edges)):
        items += [(i, u, v)] * ((a == j) + (b == j))
    return local_graph((w for _, u, v in items for w in (u, v)), items)


def is_eulerian_partition(part: EulerianPartition) -> bool:
    return all(is_eulerian(class_subgraph(part, j).graph) for j in part.used_colors())


def is_t_partition(part: EulerianPartition, t: Iterable[int]) -> bool:
    sizes = sorted((s for s in part.class_sizes() if s), reverse=True)
    return sizes == sorted(t, reverse=True)


def link_graph(part: EulerianPartition, v: int) -> LinkGraph:
    if not 0 <= v < part.base.vertex_count:
        raise UsageError(f"vertex {v} out of range")
    colors, edges = set(), []
    for (a, b), (u, w) in zip(part.pairs, part.base.edges):
        if u == v or w == v:
            colors.update((a, b))
            if a != b:
                edges.append((min(a, b), max(a, b)))
    return LinkGraph(v, frozenset(colors), tuple(edges))


def is_locally_connected(part: EulerianPartition) -> bool:
    return all(link_graph(part, v).is_connected() for v in range(part.base.vertex_count))


def is_witness(part: EulerianPartition, t: Optional[Iterable[int]] = None) -> bool:
    """All three predicates at once (t optional)."""
    ok = is_eulerian_partition(part) and is_locally_connected(part)
    return ok and (t is None or is_t_partition(part, t))


def partition_to_plan(g: Multigraph, part: EulerianPartition) -> Plan:
    """The plan whose faces are the colors; edge ``i`` joins the colors of its copies."""
    if part.base != g:
        raise UsageError("partition belongs to a different graph")
    if not is_connected(g):
        raise UsageError("base graph must be connected")
    if not (is_eulerian_partition(part) and is_locally_connected(part)):
        raise UsageError("partition is not a locally connected Eulerian partition")
    used = part.used_colors()
    relabel = {c: i for i, c in enumerate(used)}
    h = Multigraph(len(used), tuple((relabel[a], relabel[b]) for a, b in part.pairs))
    return Plan(g, h)


def plan_to_partition(p: Plan) -> EulerianPartition:
    """Color each copy of an edge by a face it borders (loops of H fill both copies)."""
    if not is_geographic(p):
        raise UsageError("plan is not geographic")
    return EulerianPartition(p.g, p.h.edges)


# ---------------------------------------------------------------------------
# search


class _Stop(Exception):
    pass


def _bfs_order(g: Multigraph) -> list[int]:
    deg = g.degrees()
    adj = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    order, seen = [], set()
    for s in sorted(range(g.vertex_count), key=lambda x: (-deg[x], x)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(set(adj[x]), key=lambda y: (-deg[y], y)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0


class ColoringSearch:
    """Backtracking over color pairs for the edges of ``g``.

    With ``targets`` the class sizes must equal ``targets`` (as a multiset);
    otherwise any number of colors in ``[min_colors, max_colors]`` is
    allowed and colors are numbered by first appearance.  ``local`` adds
    the link-graph and class-connectivity conditions; without it only
    parity is enforced and ``connected_h`` asks for a connected face graph
    instead.
    """

    def __init__(
        self,
        g: Multigraph,
        targets: Optional[Sequence[int]] = None,
        *,
        min_colors: int = 1,
        max_colors: Optional[int] = None,
        local: bool = True,
        connected_h: bool = False,
        node_budget: Optional[int] = None,
    ):
        if g.edge_count == 0:
            raise UsageError("graph has no edges")
        self.g = g
        self.local = local
        self.connected_h = connected_h
        self.node_budget = node_budget
        self.stats = SearchStats()
        ell = g.edge_count
        if targets is not None:
            t = sorted(targets, reverse=True)
            if sum(t) != 2 * ell:
                raise UsageError(f"class sizes sum to {sum(t)}, expected {2 * ell}")
            self.targets = t
            self.max_colors = len(t)
            self.min_colors = len(t)
            group_of, starts = [], []
            for j, x in enumerate(t):
                if j == 0 or x != t[j - 1]:
                    starts.append(j)
                group_of.append(len(starts) - 1)
            ends = starts[1:] + [len(t)]
            self.group_of = group_of
            self.group_bounds = list(zip(starts, ends))
        else:
            self.targets = None
            self.max_colors = max_colors if max_colors is not None else 2 * ell
            self.min_colors = min_colors

        rank = {v: i for i, v in enumerate(_bfs_order(g))}
        order = sorted(
            range(ell),
            key=lambda i: (max(rank[x] for x in g.edges[i]), min(rank[x] for x in g.edges[i]), i),
        )
        self.order = order
        self.ends = [g.edges[i] for i in order]
        last = {}
        for pos, (u, v) in enumerate(self.ends):
            last[u] = pos
            last[v] = pos
        self.closes = [[] for _ in range(ell)]
        for v, pos in last.items():
            self.closes[pos].append(v)
        self.incident_pos = [[] for _ in range(g.vertex_count)]
        self.nonloop = [0] * g.vertex_count
        for pos, (u, v) in enumerate(self.ends):
            self.incident_pos[u].append(pos)
            if u != v:
                self.incident_pos[v].append(pos)
                self.nonloop[u] += 1
                self.nonloop[v] += 1

    # -- helpers ---------------------------------------------------------

    def _link_ok(self, x, pa, pb):
        present = 0
        adj = {}
        for q in self.incident_pos[x]:
            a, b = pa[q], pb[q]
            present |= (1 << a) | (1 << b)
            if a != b:
                adj[a] = adj.get(a, 0) | (1 << b)
                adj[b] = adj.get(b, 0) | (1 << a)
        reach = present & -present
        while True:
            grow = reach
            bits = reach
            while bits:
                low = bits & -bits
                grow |= adj.get(low.bit_length() - 1, 0)
                bits ^= low
            if grow == reach:
                return reach == present
            reach = grow

    def _classes_connected(self, pa, pb, ncol):
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for pos, (u, v) in enumerate(self.ends):
            for c in {pa[pos], pb[pos]}:
                ru, rv = find((c, u)), find((c, v))
                if ru != rv:
                    parent[ru] = rv
        roots = {}
        for pos, (u, _) in enumerate(self.ends):
            for c in (pa[pos], pb[pos]):
                r = find((c, u))
                if roots.setdefault(c, r) != r:
                    return False
        return True

    def _h_connected(self, pa, pb, ncol):
        parent = list(range(ncol))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = ncol
        for a, b in zip(pa, pb):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return comps == 1

    def _candidates(self, used, group_used):
        """Color pairs allowed for the next edge, as (j, k, group_used') triples."""
        out = []
        if self.targets is None:
            top = min(used + 1, self.max_colors)
            for j in range(top):
                for k in range(j, top):
                    out.append((j, k, None))
            if used + 1 < self.max_colors:
                out.append((used, used + 1, None))
            return out
        avail = []
        for gi, (s, e) in enumerate(self.group_bounds):
            avail.extend(range(s, s + group_used[gi]))
        fresh = []
        for gi, (s, e) in enumerate(self.group_bounds):
            if s + group_used[gi] < e:
                fresh.append((gi, s + group_used[gi]))
        cols = sorted(avail + [c for _, c in fresh])
        fresh_set = {c for _, c in fresh}
        for x, j in enumerate(cols):
            for k in cols[x:]:
                gu = None
                if j in fresh_set or k in fresh_set:
                    gu = list(group_used)
                    for c in {j, k} & fresh_set:
                        gu[self.group_of[c]] += 1
                out.append((j, k, gu))
        for gi, c in fresh:
            s, e = self.group_bounds[gi]
            if c + 1 < e:
                gu = list(group_used)
                gu[gi] += 2
                out.append((c, c + 1, gu))
        return out

    # -- driver ----------------------------------------------------------

    def run(self, on_leaf: Callable, prefix: Optional[Sequence[tuple[int, int]]] = None, split_depth=None):
        """Call ``on_leaf(pairs_by_edge, sizes)`` for every solution.

        ``on_leaf`` returning True stops the search.  With ``split_depth``
        the search stops at that depth and calls ``on_leaf`` with the
        partial assignment (in search order) instead.  ``prefix`` forces the
        first choices, in search order.  Returns True if stopped early.
        """
        ell = len(self.ends)
        ncol_max = self.max_colors
        targets = self.targets
        ends = self.ends
        closes = self.closes
        nonloop_left = list(self.nonloop)
        odd = [0] * self.g.vertex_count
        size = [0] * ncol_max
        pa = [0] * ell
        pb = [0] * ell
        stats = self.stats
        budget = self.node_budget
        local = self.local
        min_colors = self.min_colors
        order = self.order

        def emit(used):
            pairs = [None] * ell
            for pos in range(ell):
                pairs[order[pos]] = (pa[pos], pb[pos])
            return on_leaf(tuple(pairs), tuple(size[:used]))

        def rec(pos, used, group_used):
            stats.nodes += 1
            if budget is not None and stats.nodes > budget:
                raise BudgetExceeded(f"search exceeded {budget} nodes")
            if split_depth is not None and pos == split_depth:
                if on_leaf(tuple(zip(pa[:pos], pb[:pos])), None):
                    raise _Stop
                return
            if pos == ell:
                if used < min_colors:
                    return
                if local and not self._classes_connected(pa, pb, used):
                    return
                if self.connected_h and not self._h_connected(pa, pb, used):
                    return
                stats.leaves += 1
                if emit(used):
                    raise _Stop
                return
            u, v = ends[pos]
            loop = u == v
            remaining_after = ell - pos - 1
            forced = prefix[pos] if prefix is not None and pos < len(prefix) else None
            for j, k, gu in self._candidates(used, group_used):
                if forced is not None and (j, k) != tuple(forced):
                    continue
                if targets is not None:
                    if j == k:
                        if size[j] + 2 > targets[j]:
                            continue
                    elif size[j] + 1 > targets[j] or size[k] + 1 > targets[k]:
                        continue
                    new_used = used
                    new_gu = gu if gu is not None else group_used
                else:
                    new_used = max(used, k + 1)
                    new_gu = None
                    if new_used + 2 * remaining_after < min_colors:
                        continue
                size[j] += 1
                size[k] += 1
                pa[pos] = j
                pb[pos] = k
                toggled = not loop and j != k
                if toggled:
                    flip = (1 << j) | (1 << k)
                    odd[u] ^= flip
                    odd[v] ^= flip
                if not loop:
                    nonloop_left[u] -= 1
                    nonloop_left[v] -= 1
                ok = (
                    bin(odd[u]).count("1") <= 2 * nonloop_left[u]
                    and bin(odd[v]).count("1") <= 2 * nonloop_left[v]
                )
                if ok and local:
                    for x in closes[pos]:
                        if not self._link_ok(x, pa, pb):
                            ok = False
                            break
                if ok:
                    if targets is not None:
                        rec(pos + 1, sum(new_gu), new_gu)
                    else:
                        rec(pos + 1, new_used, None)
                if not loop:
                    nonloop_left[u] += 1
                    nonloop_left[v] += 1
                if toggled:
                    odd[u] ^= flip
                    odd[v] ^= flip
                size[j] -= 1
                size[k] -= 1

        try:
            if targets is not None:
                rec(0, 0, [0] * len(self.group_bounds))
            else:
                rec(0, 0, None)
        except _Stop:
            return True
        return False


def _solve_prefix(args):
    g, t, prefix, budget = args
    found = []
    search = ColoringSearch(g, t, node_budget=budget)
    search.run(lambda pairs, sizes: found.append(pairs) or True, prefix=prefix)
    return (found[0] if found else None), search.stats.nodes


def find_partition(
    g: Multigraph,
    t: Iterable[int],
    *,
    workers: int = 1,
    node_budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> Optional[EulerianPartition]:
    """A locally connected Eulerian t-partition of the double graph, or None.

    The search is exhaustive, so None certifies that no such partition
    exists.  With ``workers > 1`` the branches below a shallow split are
    farmed out to processes and the first witness found wins.
    """
    t = list(t)
    if not is_connected(g):
        raise UsageError("find_partition needs a connected graph")
    if g.edge_count == 0 or sum(t) != 2 * g.edge_count:
        raise UsageError(f"sum of t must be {2 * g.edge_count}")
    if min(t) < 1:
        raise UsageError("class sizes must be positive")
    if workers <= 1:
        search = ColoringSearch(g, t, node_budget=node_budget)
        found = []
        search.run(lambda pairs, sizes: found.append(pairs) or True)
        if stats is not None:
            stats.nodes += search.stats.nodes
            stats.leaves += search.stats.leaves
        return EulerianPartition(g, found[0]) if found else None

    splitter = ColoringSearch(g, t)
    prefixes = []
    splitter.run(lambda pairs, sizes: prefixes.append(pairs), split_depth=min(3, g.edge_count))
    # results are consumed in prefix order so the witness matches the sequential search
    result = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_solve_prefix, (g, t, p, node_budget)) for p in prefixes]
        for i, fut in enumerate(futures):
            pairs, nodes = fut.result()
            if stats is not None:
                stats.nodes += nodes
            if pairs is not None:
                result = pairs
                for rest in futures[i + 1:]:
                    rest.cancel()
                break
    return EulerianPartition(g, result) if result is not None else None


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("GEOPLAN_WORKERS", "1")))
    except ValueError:
        return 1
