import json
import subprocess
import sys

import pytest

from geoplan.cli import main
from geoplan.plan import Bimatrix

from worked_examples import GOLDEN_TABLES, LOOPS_AND_BRIDGE, ODD_INCIDENCE, TWO_LOOPS_ONE_FACE, TWO_PENTAGONS


def plan_file(tmp_path, inline, name="plan.txt"):
    path = tmp_path / name
    path.write_text(Bimatrix.parse_inline(inline).to_text())
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_sphere(tmp_path, capsys):
    code, out, _ = run(capsys, "check", plan_file(tmp_path, LOOPS_AND_BRIDGE))
    report = json.loads(out)
    assert code == 0
    assert report["geographic"] is True and report["chi"] == 2 and report["surfaces"] == ["S_0"]


def test_check_odd(tmp_path, capsys):
    code, out, _ = run(capsys, "check", plan_file(tmp_path, ODD_INCIDENCE))
    report = json.loads(out)
    assert report["geographic"] is False and report["even"] is False


def test_check_too_many_faces(tmp_path, capsys):
    code, out, _ = run(capsys, "check", plan_file(tmp_path, "(11|11)"))
    report = json.loads(out)
    assert report["geographic"] is False and report["chi"] == 3 and report["surfaces"] == []


def test_check_bad_row(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("11|2\n12|2\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "line 2" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/plan.txt")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize(
    "d,t,verdict",
    [("4,4", "5,3", "REALIZABLE"), ("3,1", "2,2", "NOT-REALIZABLE"), ("2,2", "3,1", "NOT-REALIZABLE"), ("2,2", "3", "INFEASIBLE"), ("2,2", "3,3", "INFEASIBLE")],
)
def test_realize(capsys, d, t, verdict):
    code, out, _ = run(capsys, "realize", "--d", d, "--t", t)
    report = json.loads(out)
    assert code == 0 and report["verdict"] == verdict
    if verdict == "NOT-REALIZABLE":
        assert report["stats"]["realizations_tried"] >= 1 and report["reason"]


def test_realize_emits_replayable_witness(tmp_path, capsys):
    out_dir = tmp_path / "w"
    code, out, _ = run(capsys, "realize", "--d", "4,4", "--t", "5,3", "--emit-witness", str(out_dir))
    report = json.loads(out)
    # (4,4;5,3) has Euler characteristic 0
    assert code == 0 and report["surface"] in ("S_1", "C_2")
    assert sorted(p.name for p in out_dir.iterdir()) == ["graph.txt", "map.txt", "partition.txt", "plan.txt"]
    code, out, _ = run(capsys, "check", str(out_dir / "plan.txt"))
    assert json.loads(out)["geographic"] is True
    code, out, _ = run(capsys, "glue", str(out_dir / "map.txt"))
    assert json.loads(out)["surface"] == report["surface"]


def test_realize_budget(capsys):
    code, _, err = run(capsys, "realize", "--d", "3,3,3,3", "--t", "5,4,3", "--budget", "5")
    assert code == 3


def test_search_csv(tmp_path, capsys):
    out = tmp_path / "c.csv"
    code, _, err = run(capsys, "search", "--edges", "1", "--format", "csv", "--out", str(out))
    assert code == 0
    assert out.read_text().splitlines() == [
        "1,1;1,1,non-realizable",
        "1,1;2,realizable",
        "2;1,1,realizable",
        "2;2,realizable",
    ]
    assert "census l=1" in err


def test_search_quiet_and_text(capsys):
    code, out, err = run(capsys, "search", "--edges", "2", "--format", "text", "--quiet")
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "# l=2 non-realizable (16)"
    assert "(3,1;2,2)" in lines and "(2,2;3,1)" in lines


def test_search_range_json(capsys):
    code, out, _ = run(capsys, "--quiet", "search", "--edges", "1..3", "--no-timing")
    runs = json.loads(out)["runs"]
    assert [r["ell"] for r in runs] == [1, 2, 3]
    assert [len(r["realizable"]) for r in runs] == [3, 9, 35]
    assert all("wall_seconds" not in r["stats"] for r in runs)


def test_search_bad_range(capsys):
    code, _, _ = run(capsys, "search", "--edges", "0")
    assert code == 2


def test_family_list(capsys):
    code, out, _ = run(capsys, "family", "list")
    ids = [line.split("\t")[0] for line in out.splitlines()]
    assert "thm-6.1" in ids and "prop-4.3" in ids and len(ids) == 14


def test_family_verify_projective(capsys):
    code, out, _ = run(capsys, "family", "verify", "thm-6.1", "--params", "a=3,b=1")
    assert code == 0 and out.startswith("NOT-REALIZABLE")


def test_family_verify_witness(capsys):
    code, out, _ = run(capsys, "family", "verify", "prop-4.3", "--params", "k=3,a=4,n=4", "--show")
    assert code == 0 and out.startswith("WITNESS-OK")


def test_family_verify_contradiction_warns(capsys):
    code, out, err = run(capsys, "family", "verify", "prop-5.7", "--params", "a=1,alpha=4,beta=3,gamma=2,delta=1")
    assert code == 0
    assert out.startswith("FAMILY-CONTRADICTION") and "warning" in err


def test_family_verify_bad_params(capsys):
    code, _, err = run(capsys, "family", "verify", "prop-4.1", "--params", "n=2")
    assert code == 2 and "n >= 4" in err


def test_family_table(capsys):
    code, out, _ = run(capsys, "family", "table", "prop-5.1", "--max-ell", "5", "--format", "csv")
    rows = [line.rsplit(",", 1)[0] for line in out.splitlines()]
    assert rows == GOLDEN_TABLES["prop-5.1"]


def test_map_all(tmp_path, capsys):
    code, out, _ = run(capsys, "map", "--plan", plan_file(tmp_path, TWO_LOOPS_ONE_FACE), "--all")
    report = json.loads(out)
    assert report["candidate_count"] == 8 and report["valid_count"] == 4
    assert set(report["surfaces"]) == {"S_1", "C_2"}


def test_map_single(tmp_path, capsys):
    code, out, _ = run(capsys, "map", "--plan", plan_file(tmp_path, LOOPS_AND_BRIDGE))
    assert json.loads(out)["surface"] == "S_0"


def test_map_rejects_non_geographic(tmp_path, capsys):
    code, _, _ = run(capsys, "map", "--plan", plan_file(tmp_path, ODD_INCIDENCE))
    assert code == 2


def test_glue(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text(TWO_PENTAGONS)
    code, out, _ = run(capsys, "glue", str(path))
    assert json.loads(out) == {"vertex_classes": 2, "chi": -1, "orientable": False, "surface": "C_3"}


def test_console_script_exit_code(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "geoplan.cli", "realize", "--d", "3,1", "--t", "2,2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "NOT-REALIZABLE"
