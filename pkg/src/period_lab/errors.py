"""Exception types shared across the package.

Built-in exceptions are used where Python already has the right one:
ZeroDivisionError for inverting zero or dividing by the zero polynomial,
IndexError for bad component indices, and OverflowError when a result
would leave the 64-bit range the library guarantees.
"""


class CompositeCharacteristic(ValueError):
    """A field characteristic was not prime."""


class ReducibleModulus(ValueError):
    """A supplied extension modulus is not irreducible."""


class DegreeMismatch(ValueError):
    """A polynomial has the wrong degree for its role."""


class MixedContexts(ValueError):
    """Operands belong to different fields or rings."""


class ZeroElement(ValueError):
    """The multiplicative order of zero is undefined."""


class ConstantPolynomial(ValueError):
    """A constant polynomial where degree >= 1 is required."""


class ZeroPolynomial(ValueError):
    """The zero polynomial where a nonzero one is required."""


class ReduciblePolynomial(ValueError):
    """A reducible polynomial where an irreducible one is required."""


class ZeroConstantTerm(ValueError):
    """A polynomial divisible by x where a unit constant term is required."""


class NonUnitCoefficient(ValueError):
    """The lowest recurrence coefficient must be a unit."""


class LengthMismatch(ValueError):
    """A state vector does not match the recurrence degree."""


class InsufficientPrefix(ValueError):
    """Too few sequence terms for the requested degree bound."""


class NotPrimePower(ValueError):
    """An integer that should be a prime power is not one."""


class DegreeOutOfRange(ValueError):
    """No closed form is available for this degree."""


class OutOfRange(ValueError):
    """An integer argument is outside the supported range."""


class ParseError(ValueError):
    """Malformed text input (field spec, polynomial, or element)."""


class LimitExceeded(RuntimeError):
    """A brute-force search passed its provable bound; indicates a bug."""


class CapExceeded(RuntimeError):
    """A state walk passed the total state count; indicates a bug."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured work budget."""
