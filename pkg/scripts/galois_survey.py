#!/usr/bin/env python3
"""Cycle-type histograms for the table polynomials over F_p and a few extensions F_{p^k}."""

import argparse

from ffcheck.galois import sample_evidence
from ffcheck.polyring import TABLE_FAMILY, parse_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for p, (text, disc, group) in TABLE_FAMILY.items():
        f = parse_poly(text, p)
        for q in (p, p * p):
            rep = sample_evidence(f, q, args.samples, args.seed)
            types = ", ".join(f"{{{','.join(map(str, k))}}}x{v}" for k, v in sorted(rep.histogram.items()))
            print(f"q={q:<4} {group:<5} disc={rep.disc:<8} {rep.verdict:<20} coherent={rep.coherent}  {types}")


if __name__ == "__main__":
    main()
