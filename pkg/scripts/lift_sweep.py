#!/usr/bin/env python3
"""Sweep the lifting machinery over a prime range and report what holds.

For every odd prime p up to --max-prime and every k >= 2 with
p**(k+1) <= --modulus-bound, checks that every lift of every primitive root
of p**k generates mod p**(k+1), and that the root counts obey
p * phi(phi(p**k)) = phi(phi(p**(k+1))).  Optionally compares whole root
sets against the brute-force scan with --oracle.
"""

import argparse
import time

from primroots import (
    brute_primitive_roots,
    euler_phi,
    is_prime,
    is_primitive_root,
    lift_power,
    primitive_roots,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-prime", type=int, default=50)
    ap.add_argument("--modulus-bound", type=int, default=10**6)
    ap.add_argument(
        "--oracle",
        action="store_true",
        help="also scan each p**(k+1) directly (slow for large bounds)",
    )
    args = ap.parse_args()

    t0 = time.time()
    lifts = 0
    failures = 0
    for p in range(3, args.max_prime + 1):
        if not is_prime(p):
            continue
        k = 2
        while p ** (k + 1) <= args.modulus_bound:
            target = p ** (k + 1)
            base = primitive_roots(p**k).roots
            produced = []
            for g in base:
                for x in lift_power(g, p, k):
                    lifts += 1
                    produced.append(x)
                    if not is_primitive_root(x, target):
                        failures += 1
                        print(f"FAIL: {g} + t*{p}**{k} gave non-generator {x}")
            counting = p * euler_phi(euler_phi(p**k)) == euler_phi(euler_phi(target))
            distinct = len(set(produced)) == len(produced)
            complete = len(produced) == euler_phi(euler_phi(target))
            if not (counting and distinct and complete):
                failures += 1
                print(f"FAIL: bookkeeping broke at p={p}, k={k}")
            if args.oracle:
                if tuple(sorted(produced)) != brute_primitive_roots(target).roots:
                    failures += 1
                    print(f"FAIL: oracle disagrees at p={p}, k={k}")
            k += 1
    dt = time.time() - t0
    print(f"{lifts} lifts checked, {failures} failures, {dt:.1f}s")


if __name__ == "__main__":
    main()
