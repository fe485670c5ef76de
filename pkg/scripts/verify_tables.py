"""Re-derive the printed non-realizable tables and check every entry.

    python scripts/verify_tables.py --max-ell 7

For each family the generated rows are compared with the printed ones
(tests/worked_examples.py) and every printed pair with at most
``--max-ell`` edges is decided by the exhaustive search.
"""
import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from geoplan.enumerate import is_realizable  # noqa: E402
from geoplan.families import table_rows  # noqa: E402
from geoplan.plan import SequencePair  # noqa: E402
from worked_examples import GOLDEN_TABLES  # noqa: E402


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-ell", type=int, default=7)
    args = ap.parse_args(argv)

    bad = 0
    for fid, rows in GOLDEN_TABLES.items():
        printed = [SequencePair.parse(r) for r in rows]
        top = max(p.ell for p in printed)
        generated = [r.pair for r in table_rows(fid, top)]
        missing = [str(p) for p in printed if p not in generated]
        extra = [str(p) for p in generated if p not in printed]
        print(f"{fid}: {len(printed)} printed, {len(generated)} generated up to l={top}")
        if missing:
            print(f"  printed but not generated: {', '.join(missing)}")
            bad += len(missing)
        if extra:
            print(f"  generated but not printed: {', '.join(extra)}")
        for p in printed:
            if p.ell > args.max_ell:
                print(f"  {p}: skipped (l={p.ell})")
                continue
            start = time.perf_counter()
            v = is_realizable(p)
            status = "REALIZABLE (contradiction)" if v.realizable else "not realizable"
            bad += v.realizable
            print(f"  {p}: {status} [{time.perf_counter() - start:.2f} s]")
        sys.stdout.flush()
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
