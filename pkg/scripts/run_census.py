"""Benchmark the census for a range of edge counts and save the results.

    python scripts/run_census.py --edges 1..6 --workers 1 --out-dir results/

Writes ``census_l{L}.json`` per edge count and prints a timing table.
"""
import argparse
import json
import os
import sys
import time

from geoplan.enumerate import SearchConfig, census

# published single-machine timings for comparison (seconds)
REFERENCE_SECONDS = {5: 5, 6: 291, 7: 5924}


def parse_range(text):
    if ".." in text:
        lo, hi = map(int, text.split(".."))
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",")]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--edges", default="1..6")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--mode", default="strict", choices=["strict", "necessary"])
    ap.add_argument("--window", default="complete", choices=["complete", "narrow"])
    ap.add_argument("--out-dir", default=None)
    args = ap.parse_args(argv)

    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
    print(f"{'l':>3} {'feasible':>9} {'realizable':>11} {'non-real.':>10} {'chi<=2 non-real.':>17} {'seconds':>9} {'published':>10}")
    for ell in parse_range(args.edges):
        start = time.perf_counter()
        c = census(SearchConfig(ell=ell, mode=args.mode, window=args.window, workers=args.workers))
        wall = time.perf_counter() - start
        sphere_like = sum(1 for p in c.non_realizable if p.chi <= 2)
        ref = REFERENCE_SECONDS.get(ell, "")
        print(f"{ell:>3} {len(c.all_feasible):>9} {len(c.realizable):>11} {len(c.non_realizable):>10} {sphere_like:>17} {wall:>9.2f} {ref:>10}")
        sys.stdout.flush()
        if args.out_dir:
            payload = c.to_json_dict()
            payload["stats"]["workers"] = args.workers
            with open(os.path.join(args.out_dir, f"census_l{ell}.json"), "w") as fh:
                json.dump(payload, fh, indent=1)


if __name__ == "__main__":
    main()
