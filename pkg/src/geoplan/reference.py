"""Deliberately naive enumerators used as test oracles.

Nothing here prunes or breaks symmetry: every labeled plan of the
requested shape is built and passed to :func:`geoplan.plan.is_geographic`.
Only usable for a handful of edges.
"""
from __future__ import annotations

import itertools
from typing import Iterator

from .multigraph import Multigraph, degree_sequence
from .plan import Plan, SequencePair, is_geographic


def _edge_lists(vertex_count: int, ell: int) -> Iterator[tuple[tuple[int, int], ...]]:
    slots = [(u, v) for u in range(vertex_count) for v in range(u, vertex_count)]
    return itertools.combinations_with_replacement(slots, ell)


def _all_used(n: int, edges) -> bool:
    return len({x for e in edges for x in e}) == n


def naive_plans(ell: int, n: int, m: int) -> Iterator[Plan]:
    """All labeled plans with the given shape and no isolated vertices.

    ``g`` ranges over edge multisets; ``h`` ranges over every assignment of
    a face pair to each edge of ``g`` (edges are distinguishable there).
    """
    slots_h = [(a, b) for a in range(m) for b in range(a, m)]
    for g_edges in _edge_lists(n, ell):
        if not _all_used(n, g_edges):
            continue
        g = Multigraph(n, g_edges)
        for h_edges in itertools.product(slots_h, repeat=ell):
            if not _all_used(m, h_edges):
                continue
            yield Plan(g, Multigraph(m, h_edges))


def naive_realizable(ell: int) -> set[SequencePair]:
    """Degree pairs of all geographic plans with ``ell`` edges."""
    out = set()
    for n in range(1, ell + 2):
        for m in range(1, ell + 2):
            for p in naive_plans(ell, n, m):
                if is_geographic(p):
                    out.add(SequencePair(degree_sequence(p.g), degree_sequence(p.h)))
    return out


def naive_realizations(d) -> Iterator[Multigraph]:
    """Every edge multiset on ``len(d)`` labeled vertices with degrees ``d`` (connected or not)."""
    d = tuple(d)
    for edges in _edge_lists(len(d), sum(d) // 2):
        g = Multigraph(len(d), edges)
        if tuple(g.degrees()) == d:
            yield g
