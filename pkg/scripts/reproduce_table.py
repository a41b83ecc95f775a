#!/usr/bin/env python3
"""Print the worst-case bound table, then the threshold and large-omega checks."""

import argparse
import json

from ffcheck.bounds import bounds_table, check_large_omega_lemma, table_text, verify_thresholds
from ffcheck.engine import certified_limits


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()

    print(table_text(bounds_table(args.n_max)))
    print(json.dumps(verify_thresholds().to_dict(), indent=2))
    print(json.dumps(check_large_omega_lemma().to_dict(), indent=2))
    print("first x with sqrt(x)/(log x + 1) > best_R(n):")
    for n, x in certified_limits().items():
        print(f"  n={n}: {x:,}")


if __name__ == "__main__":
    main()
