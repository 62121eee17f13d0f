"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NotInvertibleError(DomainError):
    """A modular inverse was requested for a residue that is not a unit."""

    def __init__(self, a: int, modulus: int, common: int):
        super().__init__(
            f"{a} is not invertible mod {modulus}: gcd({a}, {modulus}) = {common}"
        )
        self.a = a
        self.modulus = modulus
        self.gcd = common


class NotASolutionError(DomainError):
    """A claimed base solution does not actually satisfy the congruence."""


class CeilingExceededError(DomainError):
    """A brute-force scan was refused because the modulus exceeds the ceiling."""

    def __init__(self, value: int, ceiling: int):
        super().__init__(
            f"refusing brute-force scan of {value}: exceeds ceiling {ceiling}"
        )
        self.value = value
        self.ceiling = ceiling


class RootSetTooLargeError(DomainError):
    """Materializing a primitive-root set would exceed the configured limit."""

    def __init__(self, modulus: int, count: int, limit: int):
        super().__init__(
            f"{modulus} has {count} primitive roots, more than the limit {limit}; "
            f"use the streaming interface instead"
        )
        self.modulus = modulus
        self.count = count
        self.limit = limit
