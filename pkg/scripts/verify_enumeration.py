#!/usr/bin/env python3
"""Enumerate every caterpillar up to a given order, construct, and verify.

Prints one summary row per order and a final verdict. Exit 1 on any failure.
"""

import argparse
import sys
import time
from collections import defaultdict

from antimagic.construction import construct
from antimagic.generators import enumerate_caterpillars
from antimagic.verification import check_claims, check_weight_classes, verify_antimagic


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--seeds", type=int, default=3, help="seeds tried per instance")
    args = parser.parse_args()

    per_order = defaultdict(lambda: [0, 0])  # order -> [instances, failures]
    start = time.perf_counter()
    for c in enumerate_caterpillars(args.max_n):
        row = per_order[c.tree.n]
        row[0] += 1
        for seed in range(args.seeds):
            ol, trace = construct(c, seed=seed)
            ok = (
                verify_antimagic(ol)
                and not check_weight_classes(ol, trace).violations
                and all(p for _, p in check_claims(c, ol, trace))
            )
            if not ok:
                row[1] += 1
                print(f"FAIL {c.leaf_counts} seed={seed}")
    elapsed = time.perf_counter() - start

    print(f"{'order':>6} {'instances':>10} {'failures':>9}")
    for n in sorted(per_order):
        inst, fails = per_order[n]
        print(f"{n:>6} {inst:>10} {fails:>9}")
    total_fails = sum(f for _, f in per_order.values())
    total = sum(i for i, _ in per_order.values())
    print(f"checked {total} instances x {args.seeds} seeds in {elapsed:.1f}s")
    print("all antimagic" if total_fails == 0 else f"{total_fails} FAILURES")
    return 0 if total_fails == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
