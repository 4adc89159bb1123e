"""Exception types shared across the package."""


class PadicError(ArithmeticError):
    """Base class for p-adic arithmetic and analysis failures."""


class PrimeError(ValueError):
    """Raised when a modulus is not an admissible prime."""


class PrecisionExhausted(PadicError):
    """Cancellation consumed every known digit of a result."""


class AmbiguousZero(PadicError):
    """The value is zero to its precision, so its valuation is unknown."""


class DivisionByZero(PadicError, ZeroDivisionError):
    pass


class DivergentInput(PadicError, ValueError):
    """Argument lies outside the convergence disk of a series."""


class DivergentRadius(DivergentInput):
    """Radius is not strictly inside the disk of convergence."""


class NoConvergence(PadicError):
    """Newton iteration stalled; unreachable for valid inputs."""


class InvalidWitness(ValueError):
    """Christol-Robba witness parameters violate alpha > 2*nu."""


class ParseError(ValueError):
    pass
