"""Exception types shared across the package."""


class InvalidArgs(ValueError):
    """Arguments outside the legal domain of an operation."""


class NotDivisible(ArithmeticError):
    """Polynomial long division left a nonzero remainder."""


class NotFinite(ValueError):
    """A Dynkin (sub)diagram does not describe a finite root system."""


class TooLarge(RuntimeError):
    """A group enumeration would exceed the configured element guard."""


class CharacterizationMismatch(RuntimeError):
    """Two characterizations of the same weight set disagree."""
