"""Polynomial congruences mod prime powers and the three-way solution lift.

A solution x0 of f(x) = 0 mod p**k lifts to the next level p**(k+1) in
exactly one of three ways, decided by f'(x0) mod p:

  * f'(x0) nonzero mod p: one solution x1 = x0 + t*p**k lies above x0, with
    t = -(f(x0)/p**k) * f'(x0)**-1 mod p;
  * f'(x0) zero mod p and f(x0) = 0 mod p**(k+1): all p choices of t work;
  * f'(x0) zero mod p otherwise: nothing above x0 solves the congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError, NotASolutionError
from .modarith import is_prime, mod_inverse


@dataclass(frozen=True)
class Polynomial:
    """Integer-coefficient polynomial; coeffs[i] multiplies x**i.

    Trailing zero coefficients are trimmed on construction, so the zero
    polynomial is the one with no coefficients at all and degree() of a
    nonzero polynomial is len(coeffs) - 1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse a comma-separated coefficient list, constant term first.

        "1,0,1" is x**2 + 1 and "-3,0,1" is x**2 - 3.
        """
        parts = [part.strip() for part in text.split(",")]
        if not parts or any(not part for part in parts):
            raise ValueError(f"bad polynomial {text!r}")
        return cls(tuple(int(part) for part in parts))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial gets -1."""
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        """Exact integer value f(x), no reduction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class UniqueLift:
    """The base solution lifts to exactly one solution, x1 = x0 + t*p**k."""

    t: int
    x1: int


@dataclass(frozen=True)
class MultipleLift:
    """The base solution lifts to p distinct solutions, one per t in [0, p)."""

    solutions: tuple[int, ...]


@dataclass(frozen=True)
class NoLift:
    """No solution at the next level lies above the base solution."""


LiftOutcome = Union[UniqueLift, MultipleLift, NoLift]


def eval_mod(f: Polynomial, x: int, m: int) -> int:
    """f(x) mod m in [0, m), by Horner evaluation reducing at every step."""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % m
    return acc


def derivative(f: Polynomial) -> Polynomial:
    """Formal derivative, in canonical trimmed form."""
    return Polynomial(tuple(i * c for i, c in enumerate(f.coeffs))[1:])


def lift_solution(f: Polynomial, x0: int, p: int, k: int) -> LiftOutcome:
    """Lift a solution of f(x) = 0 mod p**k to level p**(k+1).

    x0 must be a canonical solution in [0, p**k).  The quotient f(x0)/p**k
    in the unique case is taken over the integers, where it is exact, before
    any reduction mod p.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError(f"level k must be >= 1, got {k}")
    pk = p ** k
    if not 0 <= x0 < pk:
        raise NotASolutionError(f"x0 = {x0} is not a canonical residue mod {p}**{k}")
    if eval_mod(f, x0, pk) != 0:
        raise NotASolutionError(f"{x0} does not solve f(x) = 0 mod {p}**{k}")
    slope = eval_mod(derivative(f), x0, p)
    if slope != 0:
        t = -(f(x0) // pk) * mod_inverse(slope, p) % p
        return UniqueLift(t=t, x1=x0 + t * pk)
    if eval_mod(f, x0, pk * p) == 0:
        return MultipleLift(tuple(x0 + t * pk for t in range(p)))
    return NoLift()


def solve_prime_power(f: Polynomial, p: int, k: int) -> list[int]:
    """All x in [0, p**k) with f(x) = 0 mod p**k, ascending.

    Level one is found by scanning [0, p); each further level comes from
    lifting every solution of the level below, so every answer lies above a
    chain of lower-level solutions.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError(f"exponent k must be >= 1, got {k}")
    sols = [x for x in range(p) if eval_mod(f, x, p) == 0]
    for level in range(1, k):
        lifted: list[int] = []
        for x0 in sols:
            out = lift_solution(f, x0, p, level)
            if isinstance(out, UniqueLift):
                lifted.append(out.x1)
            elif isinstance(out, MultipleLift):
                lifted.extend(out.solutions)
        sols = lifted
    return sorted(set(sols))
