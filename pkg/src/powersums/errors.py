"""Exception types shared across the package.

Every hypothesis violation raises a subclass of :class:`PowersumsError`
so the CLI can map the whole family to exit code 2 with the offending
hypothesis in the message.
"""


class PowersumsError(Exception):
    """Base class for all package-specific errors."""


class NotPrimePower(PowersumsError):
    def __init__(self, value: int, message: str | None = None):
        self.value = value
        super().__init__(message or f"{value} is not a prime power")


class NotPrime(PowersumsError):
    def __init__(self, value: int, message: str | None = None):
        self.value = value
        super().__init__(message or f"{value} is not prime")


class ParamViolation(PowersumsError):
    """A parameter is outside its documented validity window."""


class RangeViolation(ParamViolation):
    """An exponent range exceeds the validity window of a closed form."""


class NotPrimitive(PowersumsError):
    """The given element does not generate the multiplicative group."""


class SearchExhausted(PowersumsError):
    """A deterministic enumeration ended without finding a candidate."""
