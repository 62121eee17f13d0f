#!/usr/bin/env python3
"""Walk the classic small cases end to end: 9, 25, 27, 81, and 162.

Shows each construction step (exceptional shift, exception-free lifts, the
parity rule) and cross-checks every set against the brute-force scan.
"""

from primroots import (
    brute_primitive_roots,
    exceptional_t,
    lift_power,
    lift_prime_to_square,
    primitive_roots,
    to_twice_prime_power,
)


def check(n, roots):
    scanned = brute_primitive_roots(n).roots
    tag = "ok" if tuple(sorted(roots)) == scanned else "MISMATCH"
    print(f"  scan of {n} agrees: {tag}")


def main():
    print("== primitive roots of 9 = 3**2 ==")
    print(f"  3 has the single primitive root 2; exceptional t = {exceptional_t(2, 3)}")
    roots9 = lift_prime_to_square(2, 3)
    print(f"  2 + 3t for the other t: {roots9}")
    check(9, roots9)

    print("== primitive roots of 25 = 5**2 ==")
    for g in (2, 3):
        print(f"  from g = {g}: skip t = {exceptional_t(g, 5)}, keep {lift_prime_to_square(g, 5)}")
    roots25 = sorted(lift_prime_to_square(2, 5) + lift_prime_to_square(3, 5))
    check(25, roots25)

    print("== primitive roots of 27 and 81: no exceptions past the square ==")
    roots27 = sorted(x for g in roots9 for x in lift_power(g, 3, 2))
    print(f"  27: {roots27}")
    check(27, roots27)
    roots81 = sorted(x for g in roots27 for x in lift_power(g, 3, 3))
    print(f"  81: {roots81}")
    check(81, roots81)

    print("== primitive roots of 162 = 2 * 3**4: the parity rule ==")
    roots162 = sorted(to_twice_prime_power(g, 3, 4) for g in roots81)
    print(f"  162: {roots162}")
    check(162, roots162)

    print("== the one-call version ==")
    for n in (9, 25, 27, 81, 162):
        print(f"  primitive_roots({n}) -> {list(primitive_roots(n).roots)}")


if __name__ == "__main__":
    main()
