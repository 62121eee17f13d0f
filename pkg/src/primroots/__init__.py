"""Construct the primitive roots of every modulus that has them.

Rather than searching, the library lifts: the primitive roots of an odd
prime p yield those of p**2 (all but one shift g + t*p works, and the bad t
has a closed formula), those of p**k yield those of p**(k+1) with no
exceptions once k >= 2, and the parity rule carries p**k to 2*p**k.  The
underlying machinery, polynomial congruence solving via the three-case
solution lift, is exposed as well, alongside deliberately naive brute-force
oracles for cross-checking everything at desk scale.

>>> from primroots import primitive_roots
>>> primitive_roots(27).roots
(2, 5, 11, 14, 20, 23)
"""

from .construct import (
    DEFAULT_ROOT_LIMIT,
    PrimitiveRootSet,
    exceptional_t,
    from_generator,
    iter_primitive_roots,
    lift_power,
    lift_prime_to_square,
    primitive_roots,
    smallest_primitive_root,
    to_twice_prime_power,
)
from .errors import (
    CeilingExceededError,
    DomainError,
    NotASolutionError,
    NotInvertibleError,
    RootSetTooLargeError,
)
from .hensel import (
    LiftOutcome,
    MultipleLift,
    NoLift,
    Polynomial,
    UniqueLift,
    derivative,
    eval_mod,
    lift_solution,
    solve_prime_power,
)
from .modarith import euler_phi, factorize, gcd, is_prime, mod_inverse, pow_mod
from .oracle import (
    DEFAULT_CEILING,
    brute_congruence_solutions,
    brute_primitive_roots,
)
from .orders import (
    ModulusClass,
    classify_modulus,
    count_primitive_roots,
    is_primitive_root,
    order,
)

__version__ = "0.1.0"

__all__ = [
    "CeilingExceededError",
    "DEFAULT_CEILING",
    "DEFAULT_ROOT_LIMIT",
    "DomainError",
    "LiftOutcome",
    "ModulusClass",
    "MultipleLift",
    "NoLift",
    "NotASolutionError",
    "NotInvertibleError",
    "Polynomial",
    "PrimitiveRootSet",
    "RootSetTooLargeError",
    "UniqueLift",
    "brute_congruence_solutions",
    "brute_primitive_roots",
    "classify_modulus",
    "count_primitive_roots",
    "derivative",
    "euler_phi",
    "eval_mod",
    "exceptional_t",
    "factorize",
    "from_generator",
    "gcd",
    "is_prime",
    "is_primitive_root",
    "iter_primitive_roots",
    "lift_power",
    "lift_prime_to_square",
    "lift_solution",
    "mod_inverse",
    "order",
    "pow_mod",
    "primitive_roots",
    "smallest_primitive_root",
    "solve_prime_power",
    "to_twice_prime_power",
]
