"""Exact coefficient fields: the rationals Q and prime fields F_p.

Rational values are stored as ``fractions.Fraction`` (always in lowest
terms with positive denominator); prime-field values as integers in
``[0, p)``.  All arithmetic is exact; there is no floating point
anywhere in this package.
"""

from fractions import Fraction

from .errors import MixedFields

RATIONALS = "Q"
PRIME_FIELD = "Fp"

_PRIME_LIMIT = 2**64


def _is_prime(n):
    # deterministic trial division; instance primes are desk-scale
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The coefficient field of a polynomial ring: Q or F_p (p prime)."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind == RATIONALS:
            if p is not None:
                raise ValueError("rationals take no modulus")
        elif kind == PRIME_FIELD:
            if not isinstance(p, int) or not 2 <= p < _PRIME_LIMIT:
                raise ValueError(f"modulus must be an integer in [2, 2^64): {p!r}")
            if not _is_prime(p):
                raise ValueError(f"modulus {p} is not prime")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p):
        return cls(PRIME_FIELD, p)

    @classmethod
    def from_text(cls, text):
        """Parse the CLI field syntax: ``Q`` or ``Fp:<prime>``."""
        if text == "Q":
            return cls.rationals()
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls.prime_field(p)
        raise ValueError(f"bad field spec {text!r}")

    def characteristic(self):
        return 0 if self.kind == RATIONALS else self.p

    def __call__(self, value):
        """Promote an int, Fraction, or FieldElem to an element of this field."""
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise MixedFields(f"cannot reinterpret {value} in {self}")
            return value
        if self.kind == RATIONALS:
            return FieldElem(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            value = value.numerator * pow(value.denominator, -1, self.p)
        return FieldElem(self, value % self.p)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Q" if self.kind == RATIONALS else f"Fp:{self.p}"


class FieldElem:
    """Immutable element of a FieldSpec, always in canonical form."""

    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        self.spec = spec
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise MixedFields(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.spec(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.spec(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.spec(self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __neg__(self):
        return self.spec(-self.value)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.spec.kind == RATIONALS:
            return self.spec(1 / self.value)
        return self.spec(pow(self.value, self.spec.p - 2, self.spec.p))

    def is_zero(self):
        return self.value == 0

    def is_one(self):
        return self.value == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec(other)
        return (
            isinstance(other, FieldElem)
            and self.spec == other.spec
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value} in {self.spec}"
