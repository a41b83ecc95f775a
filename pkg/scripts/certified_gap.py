#!/usr/bin/env python3
"""Primes with omega(p+1) = 8 that the sieve inequality does not settle below the
certified limit but that a search capped at 7e7 would skip; check each one."""

from ffcheck.engine import certified_limits, witness
from ffcheck.sieve import build_sieve, primes_in

CAP = 7 * 10**7


def main():
    limit = certified_limits()[8]
    table = build_sieve(limit + 1)
    ps = primes_in(table, CAP - 1, limit)
    gap = [p for p in ps.tolist() if table.omega[p + 1] == 8]
    print(f"omega(p+1)=8 primes in [{CAP:,}, {limit:,}): {len(gap)}")
    for p in gap:
        wp, wm = witness(p, 1), witness(p, -1)
        print(f"  p={p}: a(+1)={wp.a if wp else None}, a(-1)={wm.a if wm else None}")


if __name__ == "__main__":
    main()
