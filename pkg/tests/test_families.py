import pytest

from geoplan.errors import BudgetExceeded, UsageError
from geoplan.families import (
    FAMILIES,
    NON_REALIZABLE,
    REALIZABLE,
    build_witness,
    make_instance,
    parse_params,
    table_rows,
    verify_nonrealizable,
    verify_witness,
)
from geoplan.enumerate import is_realizable
from geoplan.plan import SequencePair, is_geographic

from worked_examples import (
    GOLDEN_TABLES,
    MULTIPLICITY_COLUMNS,
    MULTIPLICITY_ROWS,
    PROP_57_REALIZABLE_EXTRAS,
    PROP_57_WITNESSES,
    SPORADIC_NON_REALIZABLE,
)

P = SequencePair.parse

# pairs the generators produce beyond the printed tables (up to the largest printed l)
TABLE_EXTRAS = {
    "prop-5.3": {"7,1,1,1,1,1;6,6", "7,1,1,1,1,1;8,4", "7,1,1,1,1,1;10,2", "9,1,1,1;4,4,2,2", "9,1,1,1;6,2,2,2"},
    "prop-5.7": set(PROP_57_REALIZABLE_EXTRAS),
    "prop-5.9": {"10,2,2;8,2,1,1,1,1"},
}

GOLDEN_FAST = [(fid, row) for fid, rows in GOLDEN_TABLES.items() for row in rows if P(row).ell <= 7]
GOLDEN_SLOW = [(fid, row) for fid, rows in GOLDEN_TABLES.items() for row in rows if P(row).ell == 8]


@pytest.mark.parametrize("fid", sorted(GOLDEN_TABLES))
def test_tables_regenerate(fid):
    gold = {P(r) for r in GOLDEN_TABLES[fid]}
    ours = {r.pair for r in table_rows(fid, max(p.ell for p in gold))}
    assert gold <= ours
    assert ours - gold == {P(r) for r in TABLE_EXTRAS.get(fid, ())}


def test_first_table_column_order():
    rows = table_rows("prop-5.1", 5)
    assert [str(r.pair) for r in rows] == ["(" + r + ")" for r in GOLDEN_TABLES["prop-5.1"]]


@pytest.mark.parametrize("fid,row", GOLDEN_FAST)
def test_printed_entries_are_not_realizable(fid, row):
    assert not is_realizable(P(row)).realizable


@pytest.mark.slow
@pytest.mark.parametrize("fid,row", GOLDEN_SLOW)
def test_printed_entries_are_not_realizable_slow(fid, row):
    assert not is_realizable(P(row)).realizable


@pytest.mark.parametrize("row", PROP_57_REALIZABLE_EXTRAS)
def test_prop_57_conditions_admit_realizable_pairs(row):
    pair = P(row)
    a = pair.ell - 4
    inst = make_instance("prop-5.7", a=a, alpha=pair.d[0], beta=pair.d[1], gamma=pair.d[2], delta=pair.d[3])
    cert = verify_nonrealizable(inst)
    assert cert.contradiction
    assert cert.summary().startswith("FAMILY-CONTRADICTION")
    assert is_geographic(cert.verdict.plan) and cert.verdict.plan.degree_pair() == pair


@pytest.mark.parametrize("row", sorted(PROP_57_WITNESSES))
def test_prop_57_witness_plans(row):
    from geoplan.plan import inline_plan

    pair = P(row)
    plan = inline_plan(PROP_57_WITNESSES[row])
    assert is_geographic(plan) and plan.degree_pair() == pair
    a = pair.ell - 4
    make_instance("prop-5.7", a=a, alpha=pair.d[0], beta=pair.d[1], gamma=pair.d[2], delta=pair.d[3])


def test_families_agree_with_census(census_of):
    contradictions = {P(r) for r in PROP_57_REALIZABLE_EXTRAS}
    for ell in range(1, 7):
        c = census_of(ell)
        for fid in FAMILIES:
            for inst in table_rows(fid, ell):
                if inst.ell != ell:
                    continue
                if inst.expected == REALIZABLE:
                    assert inst.pair in c.realizable, (fid, inst.pair)
                elif inst.pair in contradictions:
                    assert inst.pair in c.realizable
                else:
                    assert inst.pair in c.non_realizable, (fid, inst.pair)


@pytest.mark.parametrize("row", SPORADIC_NON_REALIZABLE)
def test_sporadic_pairs(row, census_of):
    assert P(row) in census_of(6).non_realizable
    assert P(row).chi == 1


@pytest.mark.parametrize("a,b", [(3, 1), (4, 1), (5, 1), (6, 1), (3, 2)])
def test_projective_family(a, b):
    inst = make_instance("thm-6.1", a=a, b=b)
    assert inst.chi == 1 == inst.pair.chi
    cert = verify_nonrealizable(inst)
    assert not cert.contradiction
    assert cert.summary().startswith("NOT-REALIZABLE")


@pytest.mark.parametrize("n", range(4, 9))
def test_witness_two_vertices(n):
    report = verify_witness(make_instance("prop-4.1", n=n))
    assert report.ok, report.checks


@pytest.mark.parametrize("n", range(3, 7))
def test_witness_four_vertices(n):
    report = verify_witness(make_instance("prop-4.2", n=n))
    assert report.ok, report.checks


@pytest.mark.parametrize("k,a,n", [(1, 4, 4), (2, 4, 5), (3, 4, 4), (1, 6, 7), (2, 6, 6), (4, 4, 5), (3, 6, 8)])
def test_witness_regular(k, a, n):
    inst = make_instance("prop-4.3", n=n, k=k, a=a)
    assert inst.chi == 2 - (a - 2) * k
    report = verify_witness(inst)
    assert report.ok, report.checks


def test_multiplicity_table():
    w = build_witness(make_instance("prop-4.3", n=4, k=3, a=4))
    table = [[w.multiplicity(col, j) for col in MULTIPLICITY_COLUMNS] for j in range(6)]
    assert table == MULTIPLICITY_ROWS


def test_witness_plan_has_the_pair():
    inst = make_instance("prop-4.1", n=4)
    assert inst.pair == P("4,4;5,3")
    assert build_witness(inst).plan().degree_pair() == inst.pair


def test_constraint_errors_name_the_condition():
    with pytest.raises(UsageError, match="n >= 4"):
        make_instance("prop-4.1", n=3)
    with pytest.raises(UsageError, match="a even"):
        make_instance("prop-4.3", n=5, k=1, a=5)
    with pytest.raises(UsageError, match="takes parameters"):
        make_instance("prop-5.1", a=3)
    with pytest.raises(UsageError, match="unknown family"):
        make_instance("prop-9.9", a=1)


def test_expected_verdicts():
    assert {f.id for f in FAMILIES.values() if f.expected == REALIZABLE} == {"prop-4.1", "prop-4.2", "prop-4.3"}
    assert all(f.expected == NON_REALIZABLE for f in FAMILIES.values() if not f.id.startswith("prop-4"))


def test_witness_refused_for_non_realizable_family():
    with pytest.raises(UsageError):
        build_witness(make_instance("prop-5.1", a=3, b=1))
    with pytest.raises(UsageError):
        verify_nonrealizable(make_instance("prop-4.1", n=4))


def test_ell_budget():
    with pytest.raises(BudgetExceeded):
        verify_nonrealizable(make_instance("prop-5.8", a=5), ell_budget=8)


def test_parse_params():
    assert parse_params("k=3,a=4,n=4") == {"k": 3, "a": 4, "n": 4}
    assert parse_params("a=2,b=2,t=6:2") == {"a": 2, "b": 2, "t": (6, 2)}
    with pytest.raises(UsageError):
        parse_params("k3")
