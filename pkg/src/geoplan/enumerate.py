"""Exhaustive enumeration: realizations, dual graphs and the bivector census.

The census records, for a fixed number of edges, which pairs of degree
sequences are realized by geographic plans.  Two enumeration routes exist:

* ``enumerate_duals`` follows the column-multiset construction: incidence
  columns with even scalar product against every column of ``B_G`` are
  combined into ``B_H`` matrices whose rows sum to 2.
* ``census`` and ``is_realizable`` instead color the doubled edges of each
  realization (see :mod:`geoplan.partition`), which reaches the same plans
  with far less work.  The column route serves as an independent check.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, UsageError
from .multigraph import DegreeSequence, Multigraph, is_connected
from .partition import (
    ColoringSearch,
    EulerianPartition,
    SearchStats,
    default_workers,
    partition_to_plan,
)
from .plan import Plan, SequencePair, dual, is_geographic

MODES = ("strict", "necessary")
WINDOWS = ("complete", "narrow")


@dataclass(frozen=True)
class SearchConfig:
    """Census and realizability settings.

    ``mode='strict'`` accepts only geographic plans; ``'necessary'`` accepts
    every even plan with both graphs connected.  ``window='narrow'`` scans
    ``n <= l//2 + 1`` and ``n <= m <= l + n - 2`` verbatim; ``'complete'``
    covers every feasible pair (see :func:`feasible_pairs`).
    """

    ell: int = 1
    mode: str = "strict"
    workers: int = 1
    window: str = "complete"
    node_budget: Optional[int] = None

    def __post_init__(self):
        if self.ell < 1:
            raise UsageError("ell must be at least 1")
        if self.mode not in MODES:
            raise UsageError(f"mode must be one of {MODES}")
        if self.window not in WINDOWS:
            raise UsageError(f"window must be one of {WINDOWS}")
        if self.workers < 1:
            raise UsageError("workers must be positive")


# ---------------------------------------------------------------------------
# integer partitions and windows


def partitions_into(total: int, parts: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` positive integers summing to ``total``."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    hi = min(largest, total - (parts - 1))
    lo = -(-total // parts)
    for first in range(hi, lo - 1, -1):
        for rest in partitions_into(total - first, parts - 1, first):
            yield (first,) + rest


def narrow_window(ell: int) -> list[tuple[int, int]]:
    """The (n, m) pairs scanned by the published census loops."""
    return [(n, m) for n in range(1, ell // 2 + 2) for m in range(n, ell + n - 1)]


def feasible_pairs(ell: int, window: str = "complete") -> list[SequencePair]:
    if window == "narrow":
        shapes = narrow_window(ell)
    else:
        shapes = [(n, m) for n in range(1, 2 * ell + 1) for m in range(1, 2 * ell + 1)]
    out = []
    for n, m in shapes:
        for d in partitions_into(2 * ell, n):
            for t in partitions_into(2 * ell, m):
                out.append(SequencePair(d, t))
    return sorted(out)


def _search_shapes(ell: int, cfg: SearchConfig) -> list[tuple[int, int]]:
    """(n, m) shapes that need an actual search; the rest follow by duality or are empty."""
    if cfg.window == "narrow":
        shapes = narrow_window(ell)
    else:
        # duality lets us keep n <= m; a connected graph with l edges has at most l + 1 vertices
        shapes = [(n, m) for n in range(1, ell + 2) for m in range(n, ell + 2)]
    if cfg.mode == "strict":
        # a geographic plan is the skeleton of a map, so n - l + m <= 2
        shapes = [(n, m) for n, m in shapes if n + m <= ell + 2]
    return shapes


# ---------------------------------------------------------------------------
# realizations


def _raw_realizations(d: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    n = len(d)
    res = list(d)
    edges: list[tuple[int, int]] = []

    def spread(u, v, rem):
        # give ``rem`` more edge ends of u to vertices v, v+1, ...
        if rem == 0:
            yield from vertex(u + 1)
            return
        if v >= n or sum(res[v:]) < rem:
            return
        for k in range(min(rem, res[v]), -1, -1):
            res[v] -= k
            edges.extend([(u, v)] * k)
            yield from spread(u, v + 1, rem - k)
            del edges[len(edges) - k:]
            res[v] += k

    def vertex(u):
        if u == n:
            yield tuple(edges)
            return
        r = res[u]
        res[u] = 0
        for loops in range(r // 2, -1, -1):
            edges.extend([(u, u)] * loops)
            yield from spread(u, u + 1, r - 2 * loops)
            del edges[len(edges) - loops:]
        res[u] = r

    yield from vertex(0)


_PERM_LIMIT = 40320


def _block_permutations(d: Sequence[int]) -> Optional[list[tuple[int, ...]]]:
    blocks = [list(g) for _, g in itertools.groupby(range(len(d)), key=lambda i: d[i])]
    count = 1
    for b in blocks:
        for k in range(2, len(b) + 1):
            count *= k
    if count > _PERM_LIMIT:
        return None
    perms = []
    for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perms.append(tuple(x for blk in combo for x in blk))
    return perms


def _graph_key(edges, perm) -> tuple:
    return tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))


def enumerate_realizations(d: Sequence[int], unique: bool = False) -> Iterator[Multigraph]:
    """Connected multigraphs with loops whose degree sequence is ``d``.

    Vertex ``i`` has degree ``d[i]`` (``d`` sorted non-increasing).  Each
    edge multiset is produced once; with ``unique`` only one graph per
    isomorphism class is kept, unless the degree pattern admits more than
    40320 symmetric relabelings, in which case duplicates are tolerated.
    """
    d = DegreeSequence(d)
    perms = _block_permutations(d) if unique else None
    seen = set()
    for edges in _raw_realizations(d):
        g = Multigraph(len(d), edges)
        if not is_connected(g):
            continue
        if perms is not None:
            key = min(_graph_key(edges, p) for p in perms)
            if key in seen:
                continue
            seen.add(key)
        yield g


# ---------------------------------------------------------------------------
# the column-multiset route


def even_column_candidates(bg: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Vectors in {0,1,2}^l with even scalar product against every column of ``bg``."""
    ell = len(bg)
    n = len(bg[0]) if ell else 0
    out = []
    for vec in itertools.product((0, 1, 2), repeat=ell):
        if all(sum(vec[i] * bg[i][c] for i in range(ell)) % 2 == 0 for c in range(n)):
            out.append(vec)
    return out


def _graph_from_columns(columns: Sequence[Sequence[int]], ell: int) -> Multigraph:
    edges = []
    for i in range(ell):
        ends = [f for f, col in enumerate(columns) for _ in range(col[i])]
        edges.append((ends[0], ends[1]))
    return Multigraph(len(columns), tuple(edges))


def enumerate_duals(
    g: Multigraph,
    m: int,
    cfg: Optional[SearchConfig] = None,
    face_degrees: Optional[Sequence[int]] = None,
) -> Iterator[Plan]:
    """Plans (g, h) with ``m`` faces built from multisets of even columns.

    Every yielded plan is even and has a connected ``h``; strict mode also
    requires it to be geographic.  ``face_degrees`` optionally restricts the
    column sums to that multiset.
    """
    mode = cfg.mode if cfg is not None else "strict"
    ell = g.edge_count
    bg = g.incidence_rows()
    cols = [c for c in even_column_candidates(bg) if any(c)]
    if face_degrees is not None:
        want = sorted(face_degrees, reverse=True)
        allowed = set(want)
        cols = [c for c in cols if sum(c) in allowed]
    else:
        want = None
    chosen: list[tuple[int, ...]] = []
    rows = [0] * ell

    def rec(start, left):
        if left == 0:
            if any(r != 2 for r in rows):
                return
            if want is not None and sorted((sum(c) for c in chosen), reverse=True) != want:
                return
            h = _graph_from_columns(chosen, ell)
            if not is_connected(h):
                return
            plan = Plan(g, h)
            if mode == "strict" and not is_geographic(plan):
                return
            yield plan
            return
        for idx in range(start, len(cols)):
            col = cols[idx]
            if any(rows[i] + col[i] > 2 for i in range(ell)):
                continue
            for i in range(ell):
                rows[i] += col[i]
            chosen.append(col)
            yield from rec(idx, left - 1)
            chosen.pop()
            for i in range(ell):
                rows[i] -= col[i]

    yield from rec(0, m)


# ---------------------------------------------------------------------------
# coloring route


def _make_search(g: Multigraph, t, mode: str, budget=None) -> ColoringSearch:
    if mode == "strict":
        return ColoringSearch(g, t, node_budget=budget)
    return ColoringSearch(g, t, local=False, connected_h=True, node_budget=budget)


def _first_coloring(g, t, mode, stats: SearchStats, budget=None):
    search = _make_search(g, t, mode, budget)
    found = []
    try:
        search.run(lambda pairs, sizes: found.append(pairs) or True)
    finally:
        stats.nodes += search.stats.nodes
        stats.leaves += search.stats.leaves
    return found[0] if found else None


def _coloring_to_plan(g: Multigraph, pairs) -> Plan:
    used = sorted({c for p in pairs for c in p})
    relabel = {c: i for i, c in enumerate(used)}
    return Plan(g, Multigraph(len(used), tuple((relabel[a], relabel[b]) for a, b in pairs)))


def _census_task(args):
    d, ts, mode, budget = args
    stats = SearchStats()
    graphs = list(enumerate_realizations(d, unique=True))
    hits = []
    for t in ts:
        for g in graphs:
            if _first_coloring(g, t, mode, stats, budget) is not None:
                hits.append(t)
                break
    return d, tuple(hits), stats.nodes, stats.leaves, len(graphs)


@dataclass
class BivectorCensus:
    ell: int
    mode: str
    window: str
    all_feasible: frozenset
    realizable: frozenset
    stats: dict = field(default_factory=dict)

    @property
    def non_realizable(self) -> frozenset:
        return self.all_feasible - self.realizable

    def verdict(self, pair: SequencePair) -> Optional[bool]:
        """True/False for pairs inside the window, None outside it."""
        if pair not in self.all_feasible:
            return None
        return pair in self.realizable

    def to_json_dict(self, include_timing: bool = True) -> dict:
        stats = dict(self.stats)
        if not include_timing:
            stats.pop("wall_seconds", None)
        return {
            "ell": self.ell,
            "mode": self.mode,
            "window": self.window,
            "feasible_count": len(self.all_feasible),
            "realizable": [[list(p.d), list(p.t)] for p in sorted(self.realizable)],
            "non_realizable": [[list(p.d), list(p.t)] for p in sorted(self.non_realizable)],
            "stats": stats,
        }

    def csv_rows(self) -> list[str]:
        rows = []
        for p in sorted(self.all_feasible):
            verdict = "realizable" if p in self.realizable else "non-realizable"
            rows.append(f"{','.join(map(str, p.d))};{','.join(map(str, p.t))},{verdict}")
        return rows


def census(cfg: SearchConfig) -> BivectorCensus:
    """Which feasible pairs with ``cfg.ell`` edges are realizable.

    Work is split into one task per G-side degree sequence; each task
    enumerates the realizations of that sequence up to isomorphism and,
    for every admissible face sequence, looks for one coloring of the
    doubled edges that yields an acceptable plan.  Pairs outside the
    searched shapes are settled by duality (the dual of an acceptable plan
    is acceptable) or by the Euler characteristic bound in strict mode.
    """
    start = time.perf_counter()
    ell = cfg.ell
    shapes = _search_shapes(ell, cfg)
    by_n: dict[int, list[int]] = {}
    for n, m in shapes:
        by_n.setdefault(n, []).append(m)
    tasks = []
    for n in sorted(by_n):
        ts = [t for m in sorted(by_n[n]) for t in partitions_into(2 * ell, m)]
        for d in partitions_into(2 * ell, n):
            tasks.append((d, ts, cfg.mode, cfg.node_budget))
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_census_task, tasks, chunksize=1))
    else:
        results = [_census_task(task) for task in tasks]

    found = set()
    nodes = leaves = graphs = 0
    for d, hits, k_nodes, k_leaves, k_graphs in results:
        nodes += k_nodes
        leaves += k_leaves
        graphs += k_graphs
        for t in hits:
            pair = SequencePair(d, t)
            found.add(pair)
            found.add(pair.swapped())
    feasible = frozenset(feasible_pairs(ell, cfg.window))
    realizable = frozenset(p for p in found if p in feasible)
    stats = {
        "plans_enumerated": leaves,
        "search_nodes": nodes,
        "realizations": graphs,
        "wall_seconds": round(time.perf_counter() - start, 3),
    }
    return BivectorCensus(ell, cfg.mode, cfg.window, feasible, realizable, stats)


# ---------------------------------------------------------------------------
# single pairs


@dataclass
class Verdict:
    pair: SequencePair
    realizable: bool
    plan: Optional[Plan] = None
    graph: Optional[Multigraph] = None
    partition: Optional[EulerianPartition] = None
    side: str = "d"
    realizations_tried: int = 0
    search_nodes: int = 0
    reason: str = ""

    def __bool__(self):
        return self.realizable


def _cheaper_side(pair: SequencePair) -> str:
    def cost(seq):
        return (len(seq), -max(seq))

    return "d" if cost(pair.d) <= cost(pair.t) else "t"


def is_realizable(pair: SequencePair, cfg: Optional[SearchConfig] = None) -> Verdict:
    """Decide one pair, returning a witness plan or an exhaustion record.

    The side with fewer entries (ties: larger maximum) is realized as the
    graph and the other side is matched by the coloring search; the plan is
    dualized back when the ``t`` side was realized.
    """
    mode = cfg.mode if cfg is not None else "strict"
    budget = cfg.node_budget if cfg is not None else None
    if mode == "strict" and pair.chi > 2:
        return Verdict(pair, False, reason=f"euler characteristic {pair.chi} exceeds 2")
    side = _cheaper_side(pair)
    seq, other = (pair.d, pair.t) if side == "d" else (pair.t, pair.d)
    stats = SearchStats()
    tried = 0
    for g in enumerate_realizations(seq, unique=True):
        tried += 1
        remaining = None if budget is None else budget - stats.nodes
        if remaining is not None and remaining <= 0:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        pairs = _first_coloring(g, other, mode, stats, remaining)
        if pairs is not None:
            part = EulerianPartition(g, pairs)
            plan = partition_to_plan(g, part) if mode == "strict" else _coloring_to_plan(g, pairs)
            if side == "t":
                plan = dual(plan)
            return Verdict(pair, True, plan, g, part, side, tried, stats.nodes)
    reason = "no connected realization" if tried == 0 else "exhaustive search found no partition"
    return Verdict(pair, False, side=side, realizations_tried=tried, search_nodes=stats.nodes, reason=reason)


def default_config(ell: int, **kw) -> SearchConfig:
    kw.setdefault("workers", default_workers())
    return SearchConfig(ell=ell, **kw)
