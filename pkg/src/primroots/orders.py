"""Multiplicative orders and the classification of moduli with primitive roots."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .modarith import euler_phi, factorize, gcd, is_prime, pow_mod


@dataclass(frozen=True)
class ModulusClass:
    """Which family a modulus falls into.

    Only 1, 2, 4, p**k and 2*p**k (p an odd prime, k >= 1) possess primitive
    roots; every other modulus classifies as "no_primitive_roots".  The p and
    k fields are set exactly for the two prime-power kinds.
    """

    kind: str
    p: int | None = None
    k: int | None = None

    def has_primitive_roots(self) -> bool:
        return self.kind != "no_primitive_roots"

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.p is not None:
            doc["p"] = str(self.p)
            doc["k"] = self.k
        return doc


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n, by integer Newton iteration."""
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _as_odd_prime_power(m: int) -> tuple[int, int] | None:
    """(p, k) with m = p**k for an odd prime p, or None.

    Exponents are recovered by exact integer root extraction, never through
    floating-point logarithms.
    """
    for k in range(1, m.bit_length() + 1):
        r = _iroot(m, k)
        if r < 3:
            return None
        if r ** k == m and is_prime(r):
            return r, k
    return None


def classify_modulus(n: int) -> ModulusClass:
    """Classify n >= 1 by whether and why it has primitive roots."""
    if n < 1:
        raise DomainError(f"classification needs n >= 1, got {n}")
    if n == 1:
        return ModulusClass("one")
    if n == 2:
        return ModulusClass("two")
    if n == 4:
        return ModulusClass("four")
    if n % 2:
        pk = _as_odd_prime_power(n)
        if pk:
            return ModulusClass("odd_prime_power", *pk)
    elif n % 4:
        pk = _as_odd_prime_power(n // 2)
        if pk:
            return ModulusClass("twice_odd_prime_power", *pk)
    return ModulusClass("no_primitive_roots")


def order(a: int, n: int) -> int:
    """The least m >= 1 with a**m = 1 mod n, for a coprime to n.

    Starts from phi(n), which the order must divide, and divides out each
    prime of phi(n) for as long as the power still comes to 1.  This never
    scans exponents one by one.
    """
    if n < 1:
        raise DomainError(f"order needs a modulus >= 1, got {n}")
    if n == 1:
        return 1
    a %= n
    g = gcd(a, n)
    if g != 1:
        raise DomainError(f"order undefined: gcd({a}, {n}) = {g} != 1")
    t = euler_phi(n)
    for q, _ in factorize(t):
        while t % q == 0 and pow_mod(a, t // q, n) == 1:
            t //= q
    return t


def is_primitive_root(a: int, n: int) -> bool:
    """True when a generates the units mod n, i.e. its order is phi(n).

    Non-coprime a yields False rather than an error, so the predicate can
    filter whole residue ranges.
    """
    if n < 1:
        raise DomainError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return True
    a %= n
    if gcd(a, n) != 1:
        return False
    phi = euler_phi(n)
    return all(pow_mod(a, phi // q, n) != 1 for q, _ in factorize(phi))


def count_primitive_roots(n: int) -> int:
    """phi(phi(n)), the number of primitive roots of n when it has any."""
    cls = classify_modulus(n)
    if not cls.has_primitive_roots():
        raise DomainError(
            f"{n} has no primitive roots (classified as {cls.kind!r})"
        )
    return euler_phi(euler_phi(n))
