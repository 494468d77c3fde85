"""Exception types shared across the library."""


class PadicSylvesterError(Exception):
    """Base class for all library errors."""


class NotPrime(PadicSylvesterError, ValueError):
    """Raised when a prime base fails the primality check."""


class ZeroInput(PadicSylvesterError, ValueError):
    """Raised when an operation requires a nonzero value."""


class DivByZero(PadicSylvesterError, ZeroDivisionError):
    """Raised on exact division by zero."""


class NotInRing(PadicSylvesterError, ValueError):
    """Raised when a rational is not an element of Z[1/p]."""


class NotAResidue(PadicSylvesterError, ValueError):
    """Raised when no square root exists modulo p."""


class EvenPrime(PadicSylvesterError, ValueError):
    """Raised when a square-root lift is requested for p = 2."""


class EmbeddingMismatch(PadicSylvesterError, ValueError):
    """Raised when quadratic elements with different embedding data are combined."""


class NonPositiveDivisor(PadicSylvesterError, ValueError):
    """Raised when a division algorithm receives a divisor that is not positive."""


class BudgetExceeded(PadicSylvesterError, ValueError):
    """Raised when the brute-force division oracle would enumerate too many candidates."""


class HypothesisViolated(PadicSylvesterError, ValueError):
    """Raised when a correspondence check is called outside its hypothesis."""


class KTooSmall(PadicSylvesterError, ValueError):
    """Raised when k fails the bound k > -ord_p(value) required by a greedy expansion."""


class PreconditionViolated(PadicSylvesterError, ValueError):
    """Raised when expansion inputs fail a documented precondition."""


class PrecisionExhausted(PadicSylvesterError, ArithmeticError):
    """Raised when p-adic digit extraction hits the working-precision cap."""
