"""Plans: two multigraphs sharing one indexed edge set.

``Plan.g`` carries the vertices and ``Plan.h`` the faces; edge ``i`` of
``g`` and edge ``i`` of ``h`` are the same edge of the plan.  A plan is
geographic when it is induced by a map on a closed surface, which holds
exactly when both graphs are connected and every vertex graph and face
graph is Eulerian.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import FormatError, UsageError
from .multigraph import (
    DegreeSequence,
    LocalGraph,
    Multigraph,
    degree_sequence,
    is_connected,
    is_eulerian,
    local_graph,
)

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Bimatrix:
    """Edge-by-vertex and edge-by-face incidence matrices over {0, 1, 2}."""

    b_g: Matrix
    b_h: Matrix

    def __post_init__(self):
        object.__setattr__(self, "b_g", tuple(tuple(int(x) for x in r) for r in self.b_g))
        object.__setattr__(self, "b_h", tuple(tuple(int(x) for x in r) for r in self.b_h))
        if len(self.b_g) != len(self.b_h):
            raise FormatError("both matrices need the same number of rows")
        for side, mat in (("G", self.b_g), ("H", self.b_h)):
            widths = {len(r) for r in mat}
            if len(widths) > 1:
                raise FormatError(f"rows of B_{side} have different lengths")
            for i, r in enumerate(mat):
                if any(x not in (0, 1, 2) for x in r):
                    raise FormatError(f"row {i + 1} of B_{side} has an entry outside 0..2", i + 1)
                if sum(r) != 2:
                    raise FormatError(f"row {i + 1} of B_{side} sums to {sum(r)}, expected 2", i + 1)

    @classmethod
    def parse(cls, text: str) -> "Bimatrix":
        """One row per line, ``20|110``.  Spaces between digits are ignored."""
        g_rows, h_rows = [], []
        for no, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.count("|") != 1:
                raise FormatError("expected exactly one '|' separator", no)
            left, right = (s.replace(" ", "").replace("\t", "") for s in line.split("|"))
            if not re.fullmatch(r"[0-2]+", left) or not re.fullmatch(r"[0-2]+", right):
                raise FormatError("rows may only contain the digits 0, 1, 2", no)
            g_rows.append(tuple(map(int, left)))
            h_rows.append(tuple(map(int, right)))
        if not g_rows:
            raise FormatError("empty bimatrix")
        for no, (rg, rh) in enumerate(zip(g_rows, h_rows), 1):
            if sum(rg) != 2 or sum(rh) != 2:
                side = "left" if sum(rg) != 2 else "right"
                raise FormatError(f"{side} row sums to {sum(rg) if side == 'left' else sum(rh)}, expected 2", no)
        return cls(tuple(g_rows), tuple(h_rows))

    @classmethod
    def parse_inline(cls, text: str) -> "Bimatrix":
        """Inline notation ``(20,11,02|110,020,011)``: rows of B_G, then rows of B_H."""
        body = text.strip().strip("()")
        if body.count("|") != 1:
            raise FormatError("inline bimatrix needs exactly one '|'")
        left, right = body.split("|")
        lrows = [r.strip() for r in left.split(",")]
        rrows = [r.strip() for r in right.split(",")]
        if len(lrows) != len(rrows):
            raise FormatError("both sides need the same number of rows")
        return cls.parse("\n".join(f"{a}|{b}" for a, b in zip(lrows, rrows)))

    def to_text(self) -> str:
        return "".join(
            "".join(map(str, rg)) + "|" + "".join(map(str, rh)) + "\n" for rg, rh in zip(self.b_g, self.b_h)
        )

    def inline(self) -> str:
        left = ",".join("".join(map(str, r)) for r in self.b_g)
        right = ",".join("".join(map(str, r)) for r in self.b_h)
        return f"({left}|{right})"


def _graph_from_rows(rows: Matrix, width: int) -> Multigraph:
    edges = []
    for r in rows:
        ends = [c for c, x in enumerate(r) for _ in range(x)]
        edges.append((ends[0], ends[1]))
    return Multigraph(width, tuple(edges))


@dataclass(frozen=True)
class Plan:
    g: Multigraph
    h: Multigraph

    def __post_init__(self):
        if self.g.edge_count != self.h.edge_count:
            raise UsageError("the two graphs of a plan must have the same number of edges")

    @property
    def n(self) -> int:
        return self.g.vertex_count

    @property
    def m(self) -> int:
        return self.h.vertex_count

    @property
    def ell(self) -> int:
        return self.g.edge_count

    def bimatrix(self) -> Bimatrix:
        return Bimatrix(self.g.incidence_rows(), self.h.incidence_rows())

    def degree_pair(self) -> "SequencePair":
        return SequencePair(degree_sequence(self.g), degree_sequence(self.h))

    def __str__(self):
        return self.bimatrix().inline()


def plan_from_bimatrix(b: Bimatrix) -> Plan:
    n = len(b.b_g[0]) if b.b_g else 0
    m = len(b.b_h[0]) if b.b_h else 0
    return Plan(_graph_from_rows(b.b_g, n), _graph_from_rows(b.b_h, m))


def parse_plan(text: str) -> Plan:
    return plan_from_bimatrix(Bimatrix.parse(text))


def inline_plan(text: str) -> Plan:
    return plan_from_bimatrix(Bimatrix.parse_inline(text))


def dual(p: Plan) -> Plan:
    return Plan(p.h, p.g)


def _local(partner: Multigraph, own: Multigraph, x: int) -> LocalGraph:
    # edges of ``own`` at x, drawn in ``partner``; loops of ``own`` doubled
    items = []
    for i, (a, b) in enumerate(own.edges):
        if a == x or b == x:
            u, v = partner.edges[i]
            items.append((i, u, v))
            if a == b:
                items.append((i, u, v))
    return local_graph((w for _, u, v in items for w in (u, v)), items)


def vertex_graph(p: Plan, v: int) -> LocalGraph:
    """H_v: edges at vertex ``v`` seen in the face graph, loops of G doubled."""
    if not 0 <= v < p.n:
        raise UsageError(f"vertex {v} out of range")
    return _local(p.h, p.g, v)


def face_graph(p: Plan, f: int) -> LocalGraph:
    """G_f: edges around face ``f`` seen in G, loops of H doubled."""
    if not 0 <= f < p.m:
        raise UsageError(f"face {f} out of range")
    return _local(p.g, p.h, f)


def vertex_face_incidence(p: Plan) -> list[list[int]]:
    """B_G^T . B_H as an n x m list of lists."""
    out = [[0] * p.m for _ in range(p.n)]
    for (a, b), (c, d) in zip(p.g.edges, p.h.edges):
        for v in (a, b):
            for f in (c, d):
                out[v][f] += 1
    return out


def is_even(p: Plan) -> bool:
    return all(x % 2 == 0 for row in vertex_face_incidence(p) for x in row)


def is_locally_eulerian(p: Plan) -> bool:
    if p.ell == 0:
        raise UsageError("plan has no edges")
    for v in range(p.n):
        hv = vertex_graph(p, v)
        if hv.graph.edge_count == 0 or not is_eulerian(hv.graph):
            return False
    for f in range(p.m):
        gf = face_graph(p, f)
        if gf.graph.edge_count == 0 or not is_eulerian(gf.graph):
            return False
    return True


def is_geographic(p: Plan) -> bool:
    """Connected and locally Eulerian."""
    return is_connected(p.g) and is_connected(p.h) and is_locally_eulerian(p)


def euler_characteristic(p: Plan) -> int:
    return p.n - p.ell + p.m


@dataclass(frozen=True, order=True)
class SurfaceClass:
    """S_p (orientable, genus p) or C_q (non-orientable, q crosscaps)."""

    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0 or (not self.orientable and self.genus < 1):
            raise UsageError("invalid surface parameters")

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @property
    def name(self) -> str:
        return f"S_{self.genus}" if self.orientable else f"C_{self.genus}"

    @property
    def common_name(self) -> str:
        common = {"S_0": "sphere", "S_1": "torus", "C_1": "projective plane", "C_2": "Klein bottle"}
        return common.get(self.name, self.name)

    @classmethod
    def from_chi(cls, chi: int, orientable: bool) -> "SurfaceClass":
        if orientable:
            if chi > 2 or chi % 2:
                raise UsageError(f"no orientable surface has Euler characteristic {chi}")
            return cls(True, (2 - chi) // 2)
        if chi > 1:
            raise UsageError(f"no non-orientable surface has Euler characteristic {chi}")
        return cls(False, 2 - chi)

    def __str__(self):
        return self.name


SPHERE = SurfaceClass(True, 0)
TORUS = SurfaceClass(True, 1)
PROJECTIVE_PLANE = SurfaceClass(False, 1)
KLEIN_BOTTLE = SurfaceClass(False, 2)


def candidate_surfaces(chi: int) -> list[SurfaceClass]:
    out = []
    if chi <= 2 and chi % 2 == 0:
        out.append(SurfaceClass(True, 1 - chi // 2))
    if chi <= 1:
        out.append(SurfaceClass(False, 2 - chi))
    return out


@dataclass(frozen=True)
class SequencePair:
    """A feasible bivector (d; t): both sequences sum to 2*ell."""

    d: DegreeSequence
    t: DegreeSequence

    def __post_init__(self):
        object.__setattr__(self, "d", DegreeSequence(self.d))
        object.__setattr__(self, "t", DegreeSequence(self.t))
        if self.d.total != self.t.total:
            raise UsageError(f"infeasible pair: sums {self.d.total} and {self.t.total} differ")

    @classmethod
    def parse(cls, text: str) -> "SequencePair":
        body = text.strip().strip("()")
        if body.count(";") != 1:
            raise FormatError("a sequence pair is written 'd;t'")
        left, right = body.split(";")
        return cls(DegreeSequence.parse(left), DegreeSequence.parse(right))

    @property
    def ell(self) -> int:
        return self.d.total // 2

    @property
    def chi(self) -> int:
        return len(self.d) - self.ell + len(self.t)

    def swapped(self) -> "SequencePair":
        return SequencePair(self.t, self.d)

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (tuple(self.d), tuple(self.t))

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        return f"({self.d};{self.t})"


def _canonical_rows(rows: Sequence[tuple[int, ...]], width: int, degrees: Sequence[int]):
    """All column orders that list degree classes in non-increasing degree."""
    classes = {}
    for c in range(width):
        classes.setdefault(degrees[c], []).append(c)
    blocks = [classes[k] for k in sorted(classes, reverse=True)]
    for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        yield [c for blk in combo for c in blk]


def canonical_form(p: Plan) -> Bimatrix:
    """Lexicographically least bimatrix over vertex, face and edge relabelings.

    Column orders are restricted to those sorting columns by non-increasing
    degree, which every isomorphism respects, so the minimum is an invariant.
    """
    bg, bh = p.g.incidence_rows(), p.h.incidence_rows()
    dg = [sum(r[c] for r in bg) for c in range(p.n)]
    dh = [sum(r[c] for r in bh) for c in range(p.m)]
    g_orders = list(_canonical_rows(bg, p.n, dg))
    h_orders = list(_canonical_rows(bh, p.m, dh))
    best = None
    for go in g_orders:
        g_part = [tuple(r[c] for c in go) for r in bg]
        for ho in h_orders:
            rows = sorted(g_part[i] + tuple(bh[i][c] for c in ho) for i in range(p.ell))
            if best is None or rows < best:
                best = rows
    return Bimatrix(tuple(r[: p.n] for r in best), tuple(r[p.n:] for r in best))


def plans_isomorphic(p: Plan, q: Plan) -> bool:
    if (p.n, p.m, p.ell) != (q.n, q.m, q.ell):
        return False
    return canonical_form(p) == canonical_form(q)
