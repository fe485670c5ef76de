"""Parametric families of realizable and non-realizable sequence pairs.

Each family is a parameter validator, a formula for the pair ``(d; t)`` and
an enumeration order for small instances.  The realizable families also
carry an explicit witness: a graph ``H`` realizing ``t`` with a locally
connected Eulerian partition of its doubled edges whose class sizes are
``d``.  Non-realizable instances are checked by exhaustive search.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .enumerate import SearchConfig, Verdict, is_realizable, partitions_into
from .errors import BudgetExceeded, UsageError
from .multigraph import Multigraph, degree_sequence
from .partition import (
    EulerianPartition,
    is_eulerian_partition,
    is_locally_connected,
    is_t_partition,
    partition_to_plan,
)
from .plan import Plan, SequencePair, dual, is_geographic

REALIZABLE = "realizable"
NON_REALIZABLE = "non-realizable"


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: tuple[tuple[str, object], ...]
    pair: SequencePair
    expected: str
    chi: int

    def param(self, name: str):
        return dict(self.params)[name]

    @property
    def ell(self) -> int:
        return self.pair.ell

    def params_text(self) -> str:
        parts = []
        for k, v in self.params:
            parts.append(f"{k}={':'.join(map(str, v))}" if isinstance(v, tuple) else f"{k}={v}")
        return ",".join(parts)


@dataclass(frozen=True)
class Family:
    id: str
    expected: str
    formula: str
    params: tuple[str, ...]
    build: Callable[[dict], tuple[tuple[int, ...], tuple[int, ...]]]
    check: Callable[[dict], Optional[str]]
    chi: Callable[[dict], int]
    ell_of: Callable[[dict], int]
    scan: Callable[[int], Iterator[dict]]

    def instance(self, **params) -> FamilyInstance:
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        if missing or extra:
            raise UsageError(f"{self.id} takes parameters {', '.join(self.params)}")
        if "t" in params and isinstance(params["t"], int):
            params["t"] = (params["t"],)
        problem = self.check(params)
        if problem:
            raise UsageError(f"{self.id}: parameters violate {problem}")
        d, t = self.build(params)
        pair = SequencePair(d, t)
        chi = self.chi(params)
        if pair.chi != chi:
            raise AssertionError(f"{self.id}: pair {pair} has chi {pair.chi}, family states {chi}")
        ordered = tuple((p, params[p]) for p in self.params)
        return FamilyInstance(self.id, ordered, pair, self.expected, chi)


def _rep(x: int, k: int) -> tuple[int, ...]:
    return (x,) * k


def _first_failing(conds: list[tuple[bool, str]]) -> Optional[str]:
    for ok, text in conds:
        if not ok:
            return text
    return None


def _ascending_partitions(total: int, parts: int, even: bool = False) -> list[tuple[int, ...]]:
    if even:
        if total % 2:
            return []
        out = [tuple(2 * x for x in p) for p in partitions_into(total // 2, parts)]
    else:
        out = list(partitions_into(total, parts))
    return sorted(out)


# -- realizable families ----------------------------------------------------


def _scan_41(max_ell):
    for n in range(4, max_ell + 1):
        yield {"n": n}


def _scan_42(max_ell):
    for n in range(3, max_ell // 2 + 1):
        yield {"n": n}


def _scan_43(max_ell):
    found = []
    for k in range(1, max_ell + 1):
        for a in range(4, max_ell + 1, 2):
            for n in range(a, max_ell // k + 1):
                found.append((n * k, k, a, n))
    for _, k, a, n in sorted(found):
        yield {"n": n, "k": k, "a": a}


# -- non-realizable families ------------------------------------------------


def _scan_51(max_ell):
    for ell in range(2, max_ell + 1):
        for a in range(ell + 1, 2 * ell):
            yield {"a": a, "b": 2 * ell - a}


def _scan_52(max_ell):
    for n in range(2, max_ell + 1):
        yield {"n": n}


def _scan_53(max_ell):
    for a in range(2, max_ell + 1):
        for b in range(2, max_ell - a + 1):
            for t in _ascending_partitions(2 * (a + b), a, even=True):
                yield {"a": a, "b": b, "t": t}


def _scan_54(max_ell):
    for a in range(0, max_ell - 2):
        for b in range(0, a + 3):
            if b < a + 3 <= 2 * b:
                yield {"a": a, "b": b}


def _d_55(p):
    a, al, be = p["a"], p["alpha"], p["beta"]
    return tuple(sorted((2 * a + 4 - al - be, al, be), reverse=True))


def _scan_55(max_ell):
    for a in range(1, max_ell - 1):
        seen = {}
        for al in range(1, 2 * a + 4):
            for be in range(1, al + 1):
                p = {"a": a, "alpha": al, "beta": be}
                if FAMILIES["prop-5.5"].check(p) is None:
                    seen.setdefault(_d_55(p), p)
        for d in sorted(seen):
            yield seen[d]


def _scan_4parts(family_id, a_min, offset):
    def scan(max_ell):
        for a in range(a_min, max_ell - offset + 1):
            total = 2 * (a + offset)
            for d in _ascending_partitions(total, 4):
                al, be, ga, de = d
                p = {"a": a, "alpha": al, "beta": be, "gamma": ga, "delta": de}
                if FAMILIES[family_id].check(p) is None:
                    yield p

    return scan


def _scan_58(max_ell):
    for a in range(0, max_ell - 3):
        yield {"a": a}


def _scan_59(max_ell):
    for a in range(0, max_ell - 2):
        for d in _ascending_partitions(2 * a + 6, 3, even=True):
            al, be, ga = sorted(d, reverse=True)
            yield {"a": a, "alpha": al, "beta": be, "gamma": ga}


def _scan_61(max_ell):
    found = []
    for a in range(3, max_ell + 1):
        for b in range(1, max_ell // a + 1):
            found.append((a * b, a, b))
    for _, a, b in sorted(found):
        yield {"a": a, "b": b}


_SPORADIC = {1: ((3, 3, 3, 3), (7, 4, 1)), 2: ((3, 3, 3, 3), (5, 4, 3))}


def _scan_sporadic(max_ell):
    if max_ell >= 6:
        yield {"i": 1}
        yield {"i": 2}


_FAMILY_LIST = [
    Family(
        "prop-4.1", REALIZABLE, "(n,n; 5,3,2^(n-4))", ("n",),
        lambda p: ((p["n"],) * 2, (5, 3) + _rep(2, p["n"] - 4)),
        lambda p: _first_failing([(p["n"] >= 4, "n >= 4")]),
        lambda p: 0, lambda p: p["n"], _scan_41,
    ),
    Family(
        "prop-4.2", REALIZABLE, "(n,n,n,n; 7,5,2^(2n-6))", ("n",),
        lambda p: ((p["n"],) * 4, (7, 5) + _rep(2, 2 * p["n"] - 6)),
        lambda p: _first_failing([(p["n"] >= 3, "n >= 3")]),
        lambda p: 0, lambda p: 2 * p["n"], _scan_42,
    ),
    Family(
        "prop-4.3", REALIZABLE, "(n^(2k); ak+1,ak-1,2^(k(n-a)))", ("n", "k", "a"),
        lambda p: (
            _rep(p["n"], 2 * p["k"]),
            (p["a"] * p["k"] + 1, p["a"] * p["k"] - 1) + _rep(2, p["k"] * (p["n"] - p["a"])),
        ),
        lambda p: _first_failing([
            (p["k"] >= 1, "k >= 1"),
            (p["n"] >= p["a"] >= 4, "n >= a >= 4"),
            (p["a"] % 2 == 0, "a even"),
        ]),
        lambda p: 2 - (p["a"] - 2) * p["k"], lambda p: p["n"] * p["k"], _scan_43,
    ),
    Family(
        "prop-5.1", NON_REALIZABLE, "(a,b; 2^((a+b)/2))", ("a", "b"),
        lambda p: ((p["a"], p["b"]), _rep(2, (p["a"] + p["b"]) // 2)),
        lambda p: _first_failing([(p["a"] > p["b"] >= 1, "a > b >= 1"), ((p["a"] + p["b"]) % 2 == 0, "a + b even")]),
        lambda p: 2, lambda p: (p["a"] + p["b"]) // 2, _scan_51,
    ),
    Family(
        "prop-5.2", NON_REALIZABLE, "(3,2^(n-2),1; n,n)", ("n",),
        lambda p: ((3,) + _rep(2, p["n"] - 2) + (1,), (p["n"], p["n"])),
        lambda p: _first_failing([(p["n"] >= 2, "n >= 2")]),
        lambda p: 2, lambda p: p["n"], _scan_52,
    ),
    Family(
        "prop-5.3", NON_REALIZABLE, "(2a+b-1,1^(b+1); t_1..t_a)", ("a", "b", "t"),
        lambda p: ((2 * p["a"] + p["b"] - 1,) + _rep(1, p["b"] + 1), tuple(p["t"])),
        lambda p: _first_failing([
            (p["a"] >= 2 and p["b"] >= 2, "a, b >= 2"),
            (len(p["t"]) == p["a"], "t has a entries"),
            (all(x > 0 and x % 2 == 0 for x in p["t"]), "t entries positive and even"),
            (sum(p["t"]) == 2 * (p["a"] + p["b"]), "sum of t equals 2(a+b)"),
        ]),
        lambda p: 2, lambda p: p["a"] + p["b"], _scan_53,
    ),
    Family(
        "prop-5.4", NON_REALIZABLE, "(3,3,2^a; a+3,b,a+3-b)", ("a", "b"),
        lambda p: ((3, 3) + _rep(2, p["a"]), (p["a"] + 3, p["b"], p["a"] + 3 - p["b"])),
        lambda p: _first_failing([(p["a"] >= 0 and p["b"] >= 0, "a, b >= 0"), (p["b"] < p["a"] + 3 <= 2 * p["b"], "b < a+3 <= 2b")]),
        lambda p: 2, lambda p: p["a"] + 3, _scan_54,
    ),
    Family(
        "prop-5.5", NON_REALIZABLE, "(2a+4-alpha-beta,alpha,beta; 4,2^a)", ("a", "alpha", "beta"),
        lambda p: (_d_55(p), (4,) + _rep(2, p["a"])),
        lambda p: _first_failing([
            (p["a"] >= 1, "a >= 1"),
            (p["alpha"] >= p["beta"] >= 1, "alpha >= beta >= 1"),
            (p["alpha"] + p["beta"] != p["a"] + 2, "alpha + beta != a+2"),
            (2 * p["alpha"] + p["beta"] <= 2 * (p["a"] + 2), "alpha + beta/2 <= a+2"),
            (2 * p["a"] + 4 - p["alpha"] - p["beta"] >= 1, "first entry positive"),
        ]),
        lambda p: 2, lambda p: p["a"] + 2, _scan_55,
    ),
    Family(
        "prop-5.6", NON_REALIZABLE, "(alpha,beta,gamma,delta; 6,2^a)", ("a", "alpha", "beta", "gamma", "delta"),
        lambda p: ((p["alpha"], p["beta"], p["gamma"], p["delta"]), (6,) + _rep(2, p["a"])),
        lambda p: _first_failing([
            (p["a"] >= 1, "a >= 1"),
            (p["alpha"] >= p["beta"] >= p["gamma"] >= p["delta"] >= 1, "alpha >= beta >= gamma >= delta >= 1"),
            (p["alpha"] + p["beta"] + p["gamma"] + p["delta"] == 2 * p["a"] + 6, "sum equals 2a+6"),
            (p["alpha"] + p["delta"] != p["a"] + 3 or p["gamma"] + p["delta"] >= p["a"] + 3,
             "alpha+delta != a+3 or gamma+delta >= a+3"),
            (p["alpha"] != p["a"] + 3, "alpha != a+3"),
        ]),
        lambda p: 2, lambda p: p["a"] + 3, None,
    ),
    Family(
        "prop-5.7", NON_REALIZABLE, "(alpha,beta,gamma,delta; 4,4,2^a)", ("a", "alpha", "beta", "gamma", "delta"),
        lambda p: ((p["alpha"], p["beta"], p["gamma"], p["delta"]), (4, 4) + _rep(2, p["a"])),
        lambda p: _first_failing([
            (p["a"] >= 0, "a >= 0"),
            (p["alpha"] >= p["beta"] >= p["gamma"] >= p["delta"] >= 1, "alpha >= beta >= gamma >= delta >= 1"),
            (p["alpha"] + p["beta"] + p["gamma"] + p["delta"] == 2 * p["a"] + 8, "sum equals 2a+8"),
            (p["alpha"] > p["a"] + 2 or p["delta"] == 1 or p["alpha"] + p["delta"] != p["a"] + 4,
             "alpha > a+2 or delta = 1 or alpha+delta != a+4"),
            (p["alpha"] != p["a"] + 4, "alpha != a+4"),
            (p["alpha"] != p["a"] + 3 or p["gamma"] != 1, "alpha != a+3 or gamma != 1"),
        ]),
        lambda p: 2, lambda p: p["a"] + 4, None,
    ),
    Family(
        "prop-5.8", NON_REALIZABLE, "(a+3,a+3,1,1; 5,3,2^a)", ("a",),
        lambda p: ((p["a"] + 3, p["a"] + 3, 1, 1), (5, 3) + _rep(2, p["a"])),
        lambda p: _first_failing([(p["a"] >= 0, "a >= 0")]),
        lambda p: 2, lambda p: p["a"] + 4, _scan_58,
    ),
    Family(
        "prop-5.9", NON_REALIZABLE, "(alpha,beta,gamma; a+4,2,1^a)", ("a", "alpha", "beta", "gamma"),
        lambda p: ((p["alpha"], p["beta"], p["gamma"]), (p["a"] + 4, 2) + _rep(1, p["a"])),
        lambda p: _first_failing([
            (p["a"] >= 0, "a >= 0"),
            (p["alpha"] >= p["beta"] >= p["gamma"] >= 2, "alpha >= beta >= gamma >= 2"),
            (all(x % 2 == 0 for x in (p["alpha"], p["beta"], p["gamma"])), "alpha, beta, gamma even"),
            (p["alpha"] + p["beta"] + p["gamma"] == 2 * p["a"] + 6, "sum equals 2a+6"),
        ]),
        lambda p: 2, lambda p: p["a"] + 3, _scan_59,
    ),
    Family(
        "thm-6.1", NON_REALIZABLE, "(a^(2b); 2b+1,2b+1,2^(ab-2b-1))", ("a", "b"),
        lambda p: (_rep(p["a"], 2 * p["b"]), (2 * p["b"] + 1,) * 2 + _rep(2, p["a"] * p["b"] - 2 * p["b"] - 1)),
        lambda p: _first_failing([(p["a"] >= 3, "a >= 3"), (p["b"] >= 1, "b >= 1")]),
        lambda p: 1, lambda p: p["a"] * p["b"], _scan_61,
    ),
    Family(
        "sporadic", NON_REALIZABLE, "(3,3,3,3; 7,4,1) and (3,3,3,3; 5,4,3)", ("i",),
        lambda p: _SPORADIC[p["i"]],
        lambda p: _first_failing([(p["i"] in _SPORADIC, "i in {1, 2}")]),
        lambda p: 1, lambda p: 6, _scan_sporadic,
    ),
]

FAMILIES: dict[str, Family] = {f.id: f for f in _FAMILY_LIST}
FAMILIES["prop-5.6"] = Family(**{**FAMILIES["prop-5.6"].__dict__, "scan": _scan_4parts("prop-5.6", 1, 3)})
FAMILIES["prop-5.7"] = Family(**{**FAMILIES["prop-5.7"].__dict__, "scan": _scan_4parts("prop-5.7", 0, 4)})


def get_family(family_id: str) -> Family:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise UsageError(f"unknown family {family_id!r}; known: {', '.join(FAMILIES)}") from None


def make_instance(family_id: str, **params) -> FamilyInstance:
    return get_family(family_id).instance(**params)


def table_rows(family_id: str, max_ell: int) -> list[FamilyInstance]:
    """Instances with at most ``max_ell`` edges, ordered by edge count then parameters.

    Instances producing the same pair are reported once.
    """
    fam = get_family(family_id)
    rows, seen = [], set()
    for params in fam.scan(max_ell):
        if fam.ell_of(params) > max_ell:
            continue
        inst = fam.instance(**params)
        if inst.pair in seen:
            continue
        seen.add(inst.pair)
        rows.append(inst)
    rows.sort(key=lambda r: r.ell)
    return rows


# ---------------------------------------------------------------------------
# witnesses


@dataclass
class FamilyWitness:
    """A graph realizing ``t`` with a partition of its doubled edges into classes of sizes ``d``.

    ``groups`` names edges (or subdivided paths) as in the construction,
    so multiplicities can be read per named piece.
    """

    graph: Multigraph
    partition: EulerianPartition
    groups: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def multiplicity(self, group: str, color: int) -> int:
        """Copies of the named piece in class ``color``; all edges of a path agree."""
        values = {self.partition.multiplicity(e, color) for e in self.groups[group]}
        if len(values) != 1:
            raise AssertionError(f"piece {group} is not uniformly colored")
        return values.pop()

    def plan(self) -> Plan:
        """The plan with degree pair (d; t): faces are the vertices of ``graph``."""
        return dual(partition_to_plan(self.graph, self.partition))


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.pairs: list[tuple[int, int]] = []
        self.groups: dict[str, tuple[int, ...]] = {}

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, name, u, v, colors):
        self.groups[name] = (len(self.edges),)
        self.edges.append((u, v))
        self.pairs.append(colors)

    def path(self, name, u, v, inner, colors):
        """A u-v path through ``inner`` new vertices, every edge colored ``colors``."""
        stops = [u] + [self.vertex() for _ in range(inner)] + [v]
        ids = []
        for x, y in zip(stops, stops[1:]):
            ids.append(len(self.edges))
            self.edges.append((x, y))
            self.pairs.append(colors)
        self.groups[name] = tuple(ids)

    def done(self) -> FamilyWitness:
        g = Multigraph(self.n, tuple(self.edges))
        return FamilyWitness(g, EulerianPartition(g, tuple(self.pairs)), dict(self.groups))


def _witness_41(n):
    b = _Builder()
    u, v = b.vertex(), b.vertex()
    b.edge("loop", u, u, (1, 1))
    b.path("a", u, v, n - 4, (0, 1))
    b.edge("b", u, v, (0, 0))
    b.edge("c", u, v, (0, 1))
    return b.done()


def _witness_42(n):
    b = _Builder()
    u, v = b.vertex(), b.vertex()
    if n == 3:
        b.edge("loop_u1", u, u, (0, 0))
        b.edge("loop_u2", u, u, (0, 1))
        b.edge("loop_v", v, v, (2, 3))
        b.edge("a", u, v, (1, 3))
        b.edge("b", u, v, (1, 2))
        b.edge("c", u, v, (2, 3))
        return b.done()
    b.edge("loop", u, u, (3, 3))
    b.path("a", u, v, n - 2, (0, 1))
    b.path("b", u, v, n - 4, (2, 3))
    b.edge("c", u, v, (0, 2))
    b.edge("d", u, v, (1, 2))
    b.edge("e", u, v, (2, 3))
    return b.done()


def _witness_43(n, k, a):
    b = _Builder()
    u, v = b.vertex(), b.vertex()
    plain = (a - 1) * k  # e_1 .. e_{(a-1)k} stay unsubdivided
    if k == 1:
        b.edge("e1", u, u, (0, 0))
        for j in range(2, a - 1):
            b.edge(f"e{j}", u, v, (0, 1))
        b.edge(f"e{a - 1}", u, v, (1, 1))
        b.path("P1", u, v, n - a, (0, 1))
        return b.done()

    def block_colors(j):
        i = (j - 1) // (a - 1) + 1  # block index of e_j
        if i == 1:
            return {1: (0, 0), 2: (1, 1)}.get(j, (0, 1))
        return (2 * i - 2, 2 * i - 1)

    for j in range(1, plain + 1):
        b.edge(f"e{j}", u, u if j == 1 else v, block_colors(j))
    b.path("P1", u, v, n - a, (0, 2 * k - 1))
    for i in range(2, k + 1):
        b.path(f"P{i}", u, v, n - a, (2 * i - 3, 2 * i - 2))
    return b.done()


def build_witness(inst: FamilyInstance) -> FamilyWitness:
    if inst.expected != REALIZABLE:
        raise UsageError(f"{inst.family} has no witness construction")
    p = dict(inst.params)
    if inst.family == "prop-4.1":
        return _witness_41(p["n"])
    if inst.family == "prop-4.2":
        return _witness_42(p["n"])
    return _witness_43(p["n"], p["k"], p["a"])


@dataclass
class WitnessReport:
    instance: FamilyInstance
    witness: FamilyWitness
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_witness(inst: FamilyInstance) -> WitnessReport:
    """Check every claim attached to a family construction."""
    w = build_witness(inst)
    d, t = inst.pair.d, inst.pair.t
    checks = {
        "graph realizes t": tuple(degree_sequence(w.graph)) == tuple(t),
        "eulerian": is_eulerian_partition(w.partition),
        "class sizes are d": is_t_partition(w.partition, d),
        "locally connected": is_locally_connected(w.partition),
    }
    if all(checks.values()):
        plan = w.plan()
        checks["plan geographic"] = is_geographic(plan)
        checks["plan has pair (d;t)"] = plan.degree_pair() == inst.pair
        checks["euler characteristic"] = inst.pair.chi == inst.chi
    return WitnessReport(inst, w, checks)


@dataclass
class NonRealizabilityCertificate:
    instance: FamilyInstance
    verdict: Verdict

    @property
    def contradiction(self) -> bool:
        """True when a witness was found for a pair the family calls non-realizable."""
        return self.verdict.realizable

    def summary(self) -> str:
        if self.contradiction:
            return f"FAMILY-CONTRADICTION {self.instance.family} {self.instance.pair}: witness {self.verdict.plan}"
        v = self.verdict
        return (
            f"NOT-REALIZABLE {self.instance.pair}: {v.reason}; "
            f"{v.realizations_tried} realizations, {v.search_nodes} search nodes"
        )


def verify_nonrealizable(inst: FamilyInstance, ell_budget: int = 8, cfg: Optional[SearchConfig] = None) -> NonRealizabilityCertificate:
    if inst.expected != NON_REALIZABLE:
        raise UsageError(f"{inst.family} is a realizable family")
    if inst.ell > ell_budget:
        raise BudgetExceeded(f"instance has {inst.ell} edges, budget is {ell_budget}")
    cfg = cfg or SearchConfig(ell=inst.ell)
    return NonRealizabilityCertificate(inst, is_realizable(inst.pair, cfg))


def parse_params(text: str) -> dict:
    """``k=3,a=4,n=4``; tuple values use colons, as in ``t=6:2``."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not name=value")
        key, val = (s.strip() for s in item.split("=", 1))
        try:
            out[key] = tuple(int(x) for x in val.split(":")) if ":" in val else int(val)
        except ValueError:
            raise UsageError(f"parameter {key} needs an integer value") from None
    return out
