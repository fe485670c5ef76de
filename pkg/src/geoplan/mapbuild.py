"""Word representations of maps and the polygon gluing that builds them.

A word representation is a list of polygons whose sides carry signed
letters; letter ``e`` with sign ``+1`` is a side oriented along the
clockwise traversal, ``-1`` against it.  Gluing equal letters according to
their directions produces a surface; the corners of the polygons become
its vertices.

For a geographic plan, a candidate is produced by choosing an Eulerian
circuit of every face graph, writing it around a polygon, and choosing how
the two sides of each letter are oriented.  The candidate is valid when
gluing identifies corners exactly according to the plan's vertex labels.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, FormatError, InternalInconsistency, MultipleSurfacesError, UsageError
from .plan import Plan, SurfaceClass, euler_characteristic, face_graph, is_geographic

Letter = tuple[int, int]  # (edge index, +1 or -1)


@dataclass(frozen=True)
class WordRepresentation:
    polygons: tuple[tuple[Letter, ...], ...]

    def __post_init__(self):
        polys = tuple(tuple((int(e), int(s)) for e, s in poly) for poly in self.polygons)
        if any(not poly for poly in polys):
            raise UsageError("polygons must have at least one side")
        if any(s not in (1, -1) for poly in polys for _, s in poly):
            raise UsageError("letter signs must be +1 or -1")
        object.__setattr__(self, "polygons", polys)

    @property
    def letters(self) -> list[int]:
        return sorted({e for poly in self.polygons for e, _ in poly})

    def occurrences(self) -> dict[int, list[tuple[int, int, int]]]:
        """letter -> [(polygon, side, sign), ...]"""
        occ: dict[int, list] = {}
        for p, poly in enumerate(self.polygons):
            for i, (e, s) in enumerate(poly):
                occ.setdefault(e, []).append((p, i, s))
        return occ

    def check_pairing(self) -> None:
        bad = [e for e, where in self.occurrences().items() if len(where) != 2]
        if bad:
            raise UsageError(f"letters {bad} do not occur exactly twice")

    def is_minimal(self) -> bool:
        """No proper subset of polygons is closed under letter pairing."""
        k = len(self.polygons)
        parent = list(range(k))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for where in self.occurrences().values():
            a, b = find(where[0][0]), find(where[-1][0])
            parent[a] = b
        return len({find(x) for x in range(k)}) == 1

    def to_text(self, names: bool = True) -> str:
        def name(e):
            if names and len(self.letters) <= 26:
                return "abcdefghijklmnopqrstuvwxyz"[self.letters.index(e)]
            return str(e)

        lines = []
        for poly in self.polygons:
            lines.append(" ".join(("" if s > 0 else "~") + name(e) for e, s in poly))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return ", ".join(f"({line})" for line in self.to_text().strip().split("\n"))

    @classmethod
    def parse(cls, text: str) -> "WordRepresentation":
        """One polygon per line; ``~x`` is the barred letter.  Names map to indices by first appearance."""
        index: dict[str, int] = {}
        polys = []
        for no, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            poly = []
            for tok in line.replace("(", " ").replace(")", " ").split():
                m = re.fullmatch(r"(~?)([A-Za-z_][A-Za-z0-9_]*|\d+)", tok)
                if not m:
                    raise FormatError(f"bad letter {tok!r}", no)
                key = m.group(2)
                if key not in index:
                    index[key] = int(key) if key.isdigit() else len(index)
                poly.append((index[key], -1 if m.group(1) else 1))
            polys.append(tuple(poly))
        if not polys:
            raise FormatError("no polygons given")
        if any(k.isdigit() for k in index) and not all(k.isdigit() for k in index):
            raise FormatError("mix of numeric and named letters")
        return cls(tuple(polys))


def normal_form(surface: SurfaceClass) -> WordRepresentation:
    """One-polygon words for the sphere, S_p and C_q."""
    if surface.orientable:
        if surface.genus == 0:
            return WordRepresentation((((0, 1), (0, -1)),))
        sides = []
        for i in range(surface.genus):
            a, b = 2 * i, 2 * i + 1
            sides += [(a, 1), (b, 1), (a, -1), (b, -1)]
        return WordRepresentation((tuple(sides),))
    return WordRepresentation((tuple((c, 1) for c in range(surface.genus) for _ in range(2)),))


# ---------------------------------------------------------------------------
# gluing


@dataclass(frozen=True)
class GluedSurface:
    vertex_classes: tuple[tuple[tuple[int, int], ...], ...]
    chi: int
    orientable: bool

    @property
    def surface(self) -> SurfaceClass:
        return SurfaceClass.from_chi(self.chi, self.orientable)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _ends(poly_idx: int, side: int, sign: int, length: int):
    here, nxt = (poly_idx, side), (poly_idx, (side + 1) % length)
    return (here, nxt) if sign > 0 else (nxt, here)


def orientable_by_parity(w: WordRepresentation) -> bool:
    """Flip parities propagated over polygons; a conflict means non-orientable."""
    k = len(w.polygons)
    parent = list(range(k))
    parity = [0] * k  # parity relative to parent

    def find(x):
        acc = 0
        while parent[x] != x:
            acc ^= parity[x]
            x = parent[x]
        return x, acc

    for (p, _, s1), (q, _, s2) in w.occurrences().values():
        need = 1 if s1 == s2 else 0  # flips of p and q must differ by this
        if p == q:
            if need:
                return False
            continue
        rp, ap = find(p)
        rq, aq = find(q)
        if rp == rq:
            if ap ^ aq != need:
                return False
        else:
            parent[rp] = rq
            parity[rp] = ap ^ aq ^ need
    return True


def orientable_by_brute_force(w: WordRepresentation) -> bool:
    """Try every set of polygons to reorient."""
    occ = list(w.occurrences().values())
    for flips in itertools.product((0, 1), repeat=len(w.polygons)):
        if all((s1 * (-1) ** flips[p]) != (s2 * (-1) ** flips[q]) for (p, _, s1), (q, _, s2) in occ):
            return True
    return False


def glue(w: WordRepresentation) -> GluedSurface:
    w.check_pairing()
    if not w.is_minimal():
        raise MultipleSurfacesError("the polygons glue into two or more surfaces")
    corners = [(p, i) for p, poly in enumerate(w.polygons) for i in range(len(poly))]
    uf = _UnionFind(corners)
    for (p, i, s1), (q, j, s2) in w.occurrences().values():
        t1, h1 = _ends(p, i, s1, len(w.polygons[p]))
        t2, h2 = _ends(q, j, s2, len(w.polygons[q]))
        uf.union(t1, t2)
        uf.union(h1, h2)
    classes: dict = {}
    for c in corners:
        classes.setdefault(uf.find(c), []).append(c)
    vclasses = tuple(sorted(tuple(sorted(v)) for v in classes.values()))
    ell = len(w.letters)
    chi = len(vclasses) - ell + len(w.polygons)
    return GluedSurface(vclasses, chi, orientable_by_parity(w))


# ---------------------------------------------------------------------------
# candidates for a plan


@dataclass(frozen=True)
class MapCandidate:
    plan: Plan
    word: WordRepresentation
    corner_labels: tuple[tuple[int, ...], ...]  # plan vertex at corner i (start of side i)

    def glued(self) -> GluedSurface:
        return glue(self.word)

    def boundary_count(self, v: int, f: int) -> int:
        return self.corner_labels[f].count(v)


def validate(cand: MapCandidate, glued: Optional[GluedSurface] = None) -> bool:
    """Glued corners must match the plan's vertices one to one."""
    glued = glued or cand.glued()
    if len(glued.vertex_classes) != cand.plan.n:
        return False
    seen = set()
    for cls in glued.vertex_classes:
        labels = {cand.corner_labels[p][i] for p, i in cls}
        if len(labels) != 1:
            return False
        seen |= labels
    return seen == set(range(cand.plan.n))


def _circuits(edges: Sequence[tuple[int, int, int]], budget: int) -> list[tuple[tuple[int, int, int], ...]]:
    """Closed Eulerian trails through the given (edge id, u, v) copies.

    Copies of one edge are interchangeable.  Every trail starts with the
    lowest edge id leaving its lower endpoint; rotations and reversals of
    the same circuit may still appear and are removed later.
    """
    counts: dict[int, int] = {}
    ends: dict[int, tuple[int, int]] = {}
    for e, u, v in edges:
        counts[e] = counts.get(e, 0) + 1
        ends[e] = (u, v)
    total = len(edges)
    first = min(counts)
    start = ends[first][0]
    out = []
    walk: list[tuple[int, int, int]] = []

    def rec(x):
        if len(walk) == total:
            if x == start:
                out.append(tuple(walk))
                if len(out) > budget:
                    raise BudgetExceeded(f"more than {budget} Eulerian circuits in one face graph")
            return
        for e in sorted(counts):
            if not counts[e]:
                continue
            u, v = ends[e]
            if x not in (u, v):
                continue
            y = v if x == u else u
            counts[e] -= 1
            walk.append((e, x, y))
            rec(y)
            walk.pop()
            counts[e] += 1

    counts[first] -= 1
    u, v = ends[first]
    walk.append((first, u, v))
    rec(v)
    return out


def _rotate(sides, labels, r):
    return sides[r:] + sides[:r], labels[r:] + labels[:r]


def _reverse(sides, labels):
    k = len(sides)
    return (
        tuple((e, -s) for e, s in reversed(sides)),
        tuple(labels[(k - i) % k] for i in range(k)),
    )


def _normalize_letters(polys):
    flip: dict[int, int] = {}
    out = []
    for sides, labels in polys:
        row = []
        for e, s in sides:
            if e not in flip:
                flip[e] = s
            row.append((e, s * flip[e]))
        out.append((tuple(row), labels))
    return tuple(out)


def canonical_key(word: WordRepresentation, labels: Sequence[Sequence[int]], budget: int = 200000):
    """Least form over cyclic shifts, letter reorientations and polygon reorientations."""
    per_poly = []
    for sides, lab in zip(word.polygons, labels):
        sides, lab = tuple(sides), tuple(lab)
        variants = set()
        for base in ((sides, lab), _reverse(sides, lab)):
            for r in range(len(sides)):
                variants.add(_rotate(base[0], base[1], r))
        per_poly.append(sorted(variants))
    size = 1
    for v in per_poly:
        size *= len(v)
    if size > budget:
        raise BudgetExceeded(f"{size} symmetric forms exceed the budget of {budget}")
    return min(_normalize_letters(combo) for combo in itertools.product(*per_poly))


ORIENTATIONS = ("free", "rule")


def word_candidates(p: Plan, orientation: str = "free", budget: int = 100000) -> Iterator[MapCandidate]:
    """Candidate word representations, one per class of the map-preserving transformations.

    ``orientation='free'`` lets both sides of every letter point either way
    relative to each other; ``'rule'`` orients each non-loop side from its
    lower-numbered end to its higher-numbered end, so only loops branch.
    """
    if orientation not in ORIENTATIONS:
        raise UsageError(f"orientation must be one of {ORIENTATIONS}")
    if not is_geographic(p):
        raise UsageError("plan is not geographic")
    trails = []
    for f in range(p.m):
        lg = face_graph(p, f)
        items = []
        for e_local, e in enumerate(lg.edge_ids):
            a, b = lg.graph.edges[e_local]
            items.append((e, lg.vertex_ids[a], lg.vertex_ids[b]))
        trails.append(_circuits(items, budget))
    combos = 1
    for t in trails:
        combos *= len(t)
    loops = [e for e, (u, v) in enumerate(p.g.edges) if u == v]
    branching = p.ell if orientation == "free" else len(loops)
    if combos * 2 ** branching > budget:
        raise BudgetExceeded(f"{combos * 2 ** branching} raw candidates exceed the budget of {budget}")
    seen = set()
    for choice in itertools.product(*trails):
        labels = tuple(tuple(x for _, x, _ in trail) for trail in choice)
        branch_letters = list(range(p.ell)) if orientation == "free" else loops
        for bits in itertools.product((1, -1), repeat=len(branch_letters)):
            second = dict(zip(branch_letters, bits))
            met: set[int] = set()
            polys = []
            for trail in choice:
                sides = []
                for e, x, y in trail:
                    if e in second:
                        s = 1 if e not in met else second[e]
                    else:
                        s = 1 if x < y else -1
                    met.add(e)
                    sides.append((e, s))
                polys.append(tuple(sides))
            word = WordRepresentation(tuple(polys))
            key = canonical_key(word, labels)
            if key in seen:
                continue
            seen.add(key)
            yield MapCandidate(p, word, labels)


@dataclass
class MapResult:
    candidate: MapCandidate
    glued: GluedSurface

    @property
    def surface(self) -> SurfaceClass:
        return self.glued.surface


def valid_maps(p: Plan, orientation: str = "rule", budget: int = 100000) -> Iterator[MapResult]:
    for cand in word_candidates(p, orientation, budget):
        g = cand.glued()
        if validate(cand, g):
            yield MapResult(cand, g)


def find_valid_map(p: Plan, budget: int = 100000) -> MapResult:
    """First valid candidate; every geographic plan has one."""
    for result in valid_maps(p, "rule", budget):
        return result
    raise InternalInconsistency(f"no valid word representation for geographic plan {p}")


def surfaces_of(p: Plan, budget: int = 100000) -> set[SurfaceClass]:
    found = {r.surface for r in valid_maps(p, "rule", budget)}
    if not found:
        raise InternalInconsistency(f"no valid word representation for geographic plan {p}")
    chi = euler_characteristic(p)
    if any(s.chi != chi for s in found):
        raise InternalInconsistency("a valid map disagrees with the plan's Euler characteristic")
    return found
