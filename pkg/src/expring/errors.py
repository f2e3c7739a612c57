"""Exception types shared across the package."""


class ExpRingError(Exception):
    """Base class for all errors raised by this package."""


class MixedFields(ExpRingError):
    """Arithmetic between elements of different coefficient fields."""


class RingMismatch(ExpRingError):
    """Arithmetic between polynomials from different rings."""


class ReservedVariable(ExpRingError):
    """Attempt to declare a reserved name (x or y) as a ring variable."""


class ParseError(ExpRingError):
    """Expression does not conform to the grammar.

    Carries the 0-based character position of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(ParseError):
    """Identifier in an expression is not a declared ring variable."""

    def __init__(self, name, position):
        ParseError.__init__(self, f"unknown variable {name!r}", position)
        self.name = name


class ZeroElement(ExpRingError):
    """Operation undefined for the zero polynomial."""


class InvariantElement(ExpRingError):
    """Element is invariant where a non-invariant one is required."""


class NotInvariant(ExpRingError):
    """Element is required to be invariant but is not."""


class NotASlice(ExpRingError):
    """Element is not a slice (leading sigma-coefficient is not 1)."""


class NoNonInvariantInWindow(ExpRingError):
    """Every element of the searched degree window is invariant."""


class DegreeNotDivisible(ExpRingError):
    """Slice degree fails to divide an element degree.

    Cannot happen for validated maps; indicates an invalid map or a bug.
    """


class FactorizationMismatch(ExpRingError):
    """Supplied factors do not multiply to the leading coefficient."""


class NotInvariantFactor(ExpRingError):
    """A supplied factor is not invariant."""


class HypothesisViolation(ExpRingError):
    """Denominator reduction blocked: a coefficient is not divisible.

    ``coeff_index`` is the index of the blocking coefficient and
    ``factor_index`` the 1-based index of the first factor that fails
    to divide it.
    """

    def __init__(self, coeff_index, factor_index):
        super().__init__(
            f"coefficient {coeff_index} is not divisible by factor {factor_index}"
        )
        self.coeff_index = coeff_index
        self.factor_index = factor_index
