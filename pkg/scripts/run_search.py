#!/usr/bin/env python3
"""Run the witness search over a prime range and save the JSON report.

    python scripts/run_search.py --hi 70000000 --mode paper
    python scripts/run_search.py --mode certified   # hi defaults to the certified limit
"""

import argparse
import time
from pathlib import Path

from ffcheck.engine import certified_limits, default_threads, search
from ffcheck.sieve import build_sieve


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--lo", type=int, default=13)
    ap.add_argument("--hi", type=int, default=None)
    ap.add_argument("--mode", choices=("paper", "full", "certified"), default="paper")
    ap.add_argument("--threads", type=int, default=default_threads())
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    hi = args.hi
    if hi is None:
        hi = certified_limits()[8] + 1 if args.mode == "certified" else 7 * 10**7
    t0 = time.perf_counter()
    table = build_sieve(hi)
    print(f"sieve to {hi:,}: {time.perf_counter() - t0:.2f}s, {table.primes.size:,} primes")
    rep = search(args.lo, hi, args.mode, table, threads=args.threads)
    print(f"{rep.mode}: {rep.primes_checked:,} primes checked, {len(rep.counterexamples)} counterexamples")
    print(f"largest minimal witness: {rep.max_min_witness}")
    print(f"omega histogram: {rep.omega_histogram}")
    out = args.out or Path(f"search_{args.mode}_{args.lo}_{hi}.json")
    out.write_text(rep.to_json(indent=2))
    print(f"report -> {out}")


if __name__ == "__main__":
    main()
