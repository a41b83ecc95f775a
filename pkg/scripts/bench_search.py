#!/usr/bin/env python3
"""Throughput of the witness scan (primes per second) for a few ranges and worker counts."""

import argparse
import time

from ffcheck.engine import default_threads, search
from ffcheck.sieve import build_sieve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--hi", type=int, default=10**7)
    args = ap.parse_args()

    t0 = time.perf_counter()
    table = build_sieve(args.hi)
    print(f"sieve to {args.hi:,}: {time.perf_counter() - t0:.2f}s")
    for threads in sorted({1, default_threads()}):
        rep = search(13, args.hi, "full", table, threads=threads)
        rate = rep.primes_checked / rep.elapsed
        print(f"threads={threads}: {rep.primes_checked:,} primes in {rep.elapsed:.2f}s ({rate:,.0f}/s)")


if __name__ == "__main__":
    main()
