"""Brute-force reference implementations, independent of the fast paths.

Orders here are found by plain successive multiplication (a, a**2, a**3, ...)
and nothing touches the construction pipeline or the divide-out order
routine, so agreement between oracle and construction is meaningful evidence.
Deliberately naive; the ceiling argument is the only concession to safety.
"""

from __future__ import annotations

from math import gcd

from .construct import PrimitiveRootSet
from .errors import CeilingExceededError, DomainError
from .hensel import Polynomial, eval_mod

DEFAULT_CEILING = 10 ** 6


def brute_primitive_roots(n: int, ceiling: int = DEFAULT_CEILING) -> PrimitiveRootSet:
    """Scan 1..n for residues whose order, found naively, equals phi(n).

    phi(n) is itself obtained by counting coprime residues during the scan.
    Refuses n above the ceiling so a stray huge modulus cannot hang a session.
    """
    if n < 1:
        raise DomainError(f"modulus must be >= 1, got {n}")
    if n > ceiling:
        raise CeilingExceededError(n, ceiling)
    if n == 1:
        # Mod 1 every power is congruent to 1, so 1 generates trivially.
        return PrimitiveRootSet(1, (1,))
    coprime = [a for a in range(1, n + 1) if gcd(a, n) == 1]
    phi = len(coprime)
    roots = []
    for a in coprime:
        x = a
        m = 1
        while x != 1:
            x = x * a % n
            m += 1
        if m == phi:
            roots.append(a)
    return PrimitiveRootSet(n, tuple(roots))


def brute_congruence_solutions(
    f: Polynomial, m: int, ceiling: int = DEFAULT_CEILING
) -> list[int]:
    """All x in [0, m) with f(x) = 0 mod m, by direct scan."""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if m > ceiling:
        raise CeilingExceededError(m, ceiling)
    return [x for x in range(m) if eval_mod(f, x, m) == 0]
