"""Command-line entry point.

Exit codes: 0 query answered, 2 bad input, 3 budget refused,
4 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from .enumerate import MODES, WINDOWS, SearchConfig, census, is_realizable
from .errors import BudgetExceeded, FormatError, GeoplanError, InternalInconsistency, UsageError
from .families import (
    FAMILIES,
    NON_REALIZABLE,
    build_witness,
    get_family,
    parse_params,
    table_rows,
    verify_nonrealizable,
    verify_witness,
)
from .mapbuild import ORIENTATIONS, WordRepresentation, find_valid_map, glue, validate, word_candidates
from .multigraph import DegreeSequence, is_connected, parse_degree_list
from .partition import default_workers
from .plan import (
    SequencePair,
    candidate_surfaces,
    euler_characteristic,
    is_even,
    is_geographic,
    is_locally_eulerian,
    parse_plan,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4


class _Ctx:
    quiet = False


def _progress(msg: str) -> None:
    if not _Ctx.quiet:
        print(msg, file=sys.stderr, flush=True)


def _atomic_write(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, so interrupted runs leave nothing behind."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _seq(p) -> str:
    return ",".join(map(str, p))


def _parse_ell_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad edge count {text!r}; use L, L1,L2 or L1..L2") from None
    if not values or min(values) < 1:
        raise UsageError("edge counts must be positive")
    return values


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    p = parse_plan(_read(args.plan))
    chi = euler_characteristic(p)
    geo = is_geographic(p)
    report = {
        "n": p.n,
        "m": p.m,
        "ell": p.ell,
        "chi": chi,
        "connected_g": is_connected(p.g),
        "connected_h": is_connected(p.h),
        "even": is_even(p),
        "locally_eulerian": is_locally_eulerian(p),
        "geographic": geo,
        "surfaces": [s.name for s in candidate_surfaces(chi)] if geo else [],
    }
    if args.format == "text":
        for k, v in report.items():
            print(f"{k}: {v}")
    else:
        print(json.dumps(report))
    return EXIT_OK


def cmd_realize(args) -> int:
    raw_d, raw_t = parse_degree_list(args.d), parse_degree_list(args.t)
    if raw_d and raw_t and sum(raw_d) != sum(raw_t):
        d, t = sorted(raw_d, reverse=True), sorted(raw_t, reverse=True)
        print(json.dumps({"d": d, "t": t, "verdict": "INFEASIBLE"}))
        return EXIT_OK
    d, t = DegreeSequence(raw_d), DegreeSequence(raw_t)
    pair = SequencePair(d, t)
    cfg = SearchConfig(ell=pair.ell, mode=args.mode, node_budget=args.budget)
    start = time.perf_counter()
    v = is_realizable(pair, cfg)
    report = {
        "d": list(d),
        "t": list(t),
        "chi": pair.chi,
        "mode": args.mode,
        "verdict": "REALIZABLE" if v.realizable else "NOT-REALIZABLE",
        "stats": {
            "realized_side": v.side,
            "realizations_tried": v.realizations_tried,
            "search_nodes": v.search_nodes,
            "wall_seconds": round(time.perf_counter() - start, 3),
        },
    }
    if not v.realizable:
        report["reason"] = v.reason
    else:
        report["plan"] = str(v.plan)
    if v.realizable and args.emit_witness:
        out = Path(args.emit_witness)
        _atomic_write(str(out / "graph.txt"), v.graph.to_text())
        _atomic_write(str(out / "partition.txt"), v.partition.to_text())
        _atomic_write(str(out / "plan.txt"), v.plan.bimatrix().to_text())
        files = {"graph": "graph.txt", "partition": "partition.txt", "plan": "plan.txt"}
        if args.mode == "strict":
            result = find_valid_map(v.plan, budget=args.map_budget)
            _atomic_write(str(out / "map.txt"), result.candidate.word.to_text())
            files["map"] = "map.txt"
            report["surface"] = result.surface.name
        report["witness"] = {k: str(out / f) for k, f in files.items()}
    print(json.dumps(report))
    return EXIT_OK


def cmd_search(args) -> int:
    ells = _parse_ell_range(args.edges)
    workers = args.workers or default_workers()
    runs = []
    for ell in ells:
        cfg = SearchConfig(ell=ell, mode=args.mode, workers=workers, window=args.window, node_budget=args.budget)
        _progress(f"census l={ell} mode={args.mode} window={args.window} workers={workers}")
        result = census(cfg)
        _progress(
            f"  {len(result.realizable)} realizable, {len(result.non_realizable)} non-realizable, "
            f"{result.stats['wall_seconds']} s"
        )
        runs.append(result)
    if args.format == "csv":
        text = "".join(row + "\n" for r in runs for row in r.csv_rows())
    elif args.format == "text":
        lines = []
        for r in runs:
            lines.append(f"# l={r.ell} non-realizable ({len(r.non_realizable)})")
            lines += [f"({_seq(p.d)};{_seq(p.t)})" for p in sorted(r.non_realizable)]
        text = "\n".join(lines) + "\n"
    else:
        payload = [r.to_json_dict(include_timing=not args.no_timing) for r in runs]
        text = json.dumps(payload[0] if len(payload) == 1 else {"runs": payload}, indent=1) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.action == "list":
        for fam in FAMILIES.values():
            print(f"{fam.id}\t{fam.expected}\t{fam.formula}\tparams: {','.join(fam.params)}")
        return EXIT_OK
    if args.action == "table":
        rows = table_rows(args.id, args.max_ell)
        if args.format == "csv":
            text = "".join(f"{_seq(r.pair.d)};{_seq(r.pair.t)},{r.expected}\n" for r in rows)
        elif args.format == "json":
            text = json.dumps([
                {"params": r.params_text(), "d": list(r.pair.d), "t": list(r.pair.t), "ell": r.ell, "chi": r.chi}
                for r in rows
            ]) + "\n"
        else:
            text = "".join(f"{r.pair}\t{r.params_text()}\n" for r in rows)
        _emit(text, args.out)
        return EXIT_OK
    # verify
    fam = get_family(args.id)
    inst = fam.instance(**parse_params(args.params or ""))
    if fam.expected == NON_REALIZABLE:
        cert = verify_nonrealizable(inst, args.ell_budget)
        print(cert.summary())
        if cert.contradiction:
            print(f"warning: {inst.family} instance {inst.params_text()} is realizable", file=sys.stderr)
        return EXIT_OK
    report = verify_witness(inst)
    status = "WITNESS-OK" if report.ok else "WITNESS-FAILED"
    print(f"{status} {inst.pair} " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in report.checks.items()))
    if args.show:
        w = build_witness(inst)
        sys.stdout.write(w.graph.to_text())
        sys.stdout.write(w.partition.to_text())
    return EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_map(args) -> int:
    p = parse_plan(_read(args.plan))
    if not is_geographic(p):
        raise UsageError("plan is not geographic")
    if not args.all:
        result = find_valid_map(p, budget=args.budget)
        print(json.dumps({"word": result.candidate.word.to_text().strip().split("\n"), "surface": result.surface.name}))
        return EXIT_OK
    rows, surfaces = [], set()
    for cand in word_candidates(p, args.orientation, args.budget):
        g = cand.glued()
        ok = validate(cand, g)
        if ok:
            surfaces.add(g.surface)
        rows.append({
            "word": str(cand.word),
            "vertices": len(g.vertex_classes),
            "chi": g.chi,
            "surface": g.surface.name if g.chi <= 2 else None,
            "valid": ok,
        })
    print(json.dumps({
        "candidates": rows,
        "candidate_count": len(rows),
        "valid_count": sum(r["valid"] for r in rows),
        "surfaces": [s.name for s in sorted(surfaces)],
    }, indent=1))
    return EXIT_OK


def cmd_glue(args) -> int:
    w = WordRepresentation.parse(_read(args.words))
    g = glue(w)
    print(json.dumps({
        "vertex_classes": len(g.vertex_classes),
        "chi": g.chi,
        "orientable": g.orientable,
        "surface": g.surface.name,
    }))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="geoplan", description="Geographic plans, realizable degree pairs and maps.")
    ap.add_argument("--quiet", action="store_true", help="suppress progress lines on stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test a bimatrix file")
    p.add_argument("plan")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", parents=[common], help="decide one degree pair")
    p.add_argument("--d", required=True, help="vertex degrees, e.g. 4,4 or 3,2^4,1")
    p.add_argument("--t", required=True, help="face degrees")
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--map-budget", type=int, default=100000)
    p.add_argument("--emit-witness", metavar="DIR", help="write graph, partition, plan and map files")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("search", parents=[common], help="census of realizable pairs")
    p.add_argument("--edges", required=True, help="L, L1,L2 or L1..L2")
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--window", choices=WINDOWS, default="complete")
    p.add_argument("--workers", type=int, default=None, help="default: $GEOPLAN_WORKERS or 1")
    p.add_argument("--budget", type=int, default=None, help="node budget per search")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--no-timing", action="store_true", help="omit wall time so output is byte-stable")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("family", parents=[common], help="parametric families")
    fsub = p.add_subparsers(dest="action", required=True)
    fl = fsub.add_parser("list", parents=[common])
    fl.set_defaults(func=cmd_family)
    fv = fsub.add_parser("verify", parents=[common])
    fv.add_argument("id")
    fv.add_argument("--params", default="", help="e.g. k=3,a=4,n=4 (tuples as t=6:2)")
    fv.add_argument("--ell-budget", type=int, default=8)
    fv.add_argument("--show", action="store_true", help="print the witness graph and partition")
    fv.set_defaults(func=cmd_family)
    ft = fsub.add_parser("table", parents=[common])
    ft.add_argument("id")
    ft.add_argument("--max-ell", type=int, default=5)
    ft.add_argument("--format", choices=["text", "csv", "json"], default="text")
    ft.add_argument("--out")
    ft.set_defaults(func=cmd_family)

    p = sub.add_parser("map", parents=[common], help="build maps for a geographic plan")
    p.add_argument("--plan", required=True)
    p.add_argument("--all", action="store_true", help="list every candidate word representation")
    p.add_argument("--orientation", choices=ORIENTATIONS, default="free")
    p.add_argument("--budget", type=int, default=100000)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("glue", parents=[common], help="glue a word representation file")
    p.add_argument("words")
    p.set_defaults(func=cmd_glue)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _Ctx.quiet = args.quiet
    try:
        return args.func(args)
    except (FormatError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GeoplanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
