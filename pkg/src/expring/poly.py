"""Sparse multivariate polynomials with exact field coefficients.

A polynomial in A = K[v_1, ..., v_r] is stored as a dict mapping
exponent vectors (tuples of length r) to nonzero FieldElem
coefficients.  The canonical term order is graded lexicographic over
the declared variable order: higher total degree first, ties broken
lexicographically with earlier variables weighing more.  The printer,
equality of printed output, and all deterministic bases rely on it.

Two auxiliary shapes live here as well:

* ``SigmaImage`` -- a polynomial in the distinguished variable x with
  MPoly coefficients, i.e. an element of A[x].  Images of ring elements
  under an exponential map take this shape; coefficient i is the i-th
  higher-derivation coefficient of the element.
* ``BiPoly`` -- an element of A[x, y], used to check the iterativity
  identity and additivity of polynomials.

The names ``x`` and ``y`` are reserved and can never be declared as
ring variables.
"""

import math
import re

from .errors import ReservedVariable, RingMismatch
from .field import FieldElem

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

RESERVED_NAMES = ("x", "y")


def grlex_key(exps):
    """Sort key realizing graded lexicographic order (ascending)."""
    return (sum(exps), exps)


class PolyRing:
    """A polynomial ring K[v_1, ..., v_r] with an ordered variable list."""

    __slots__ = ("spec", "vars", "_index")

    def __init__(self, spec, variables):
        variables = tuple(variables)
        for name in variables:
            if name in RESERVED_NAMES:
                raise ReservedVariable(f"{name!r} is reserved")
            if not _IDENT.match(name):
                raise ValueError(f"bad variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.spec = spec
        self.vars = variables
        self._index = {name: j for j, name in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.vars)

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, value):
        c = self.spec(value)
        if c.is_zero():
            return self.zero()
        return MPoly(self, {(0,) * self.nvars: c})

    def var(self, name):
        j = self._index.get(name)
        if j is None:
            raise KeyError(f"no variable {name!r} in {self!r}")
        exps = tuple(1 if i == j else 0 for i in range(self.nvars))
        return MPoly(self, {exps: self.spec(1)})

    def monomial(self, coeff, exps):
        c = self.spec(coeff)
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        if c.is_zero():
            return self.zero()
        return MPoly(self, {exps: c})

    def monomials_up_to(self, max_degree):
        """All monomials of total degree <= max_degree, grlex ascending."""
        out = []

        def rec(prefix, remaining, budget):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for e in range(budget + 1):
                rec(prefix + [e], remaining - 1, budget - e)

        rec([], self.nvars, max_degree)
        exps_list = sorted(out, key=grlex_key)
        return [MPoly(self, {e: self.spec(1)}) for e in exps_list]

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.spec == other.spec
            and self.vars == other.vars
        )

    def __hash__(self):
        return hash((self.spec, self.vars))

    def __repr__(self):
        return f"{self.spec}[{', '.join(self.vars)}]"


class MPoly:
    """Immutable sparse polynomial; never stores zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, FieldElem)):
            return self.ring.const(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def is_one(self):
        zero_exp = (0,) * self.ring.nvars
        return set(self.terms) == {zero_exp} and self.terms[zero_exp].is_one()

    def is_unit(self):
        # units of K[v_1..v_r] are the nonzero constants
        return not self.is_zero() and self.is_constant()

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.spec.zero())

    def total_degree(self):
        if self.is_zero():
            return -1
        return max(sum(e) for e in self.terms)

    def leading_exponents(self):
        """Exponent vector of the grlex-largest term."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_exponents()]

    def monic(self):
        """Scale by a unit so the grlex-leading coefficient is 1."""
        if self.is_zero():
            return self
        return self * self.leading_coefficient().inverse()

    def coefficient_vector(self, exps_list):
        """Coefficients against an explicit monomial-exponent list."""
        zero = self.ring.spec.zero()
        return [self.terms.get(e, zero) for e in exps_list]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            terms[e] = c if s is None else s + c
        return MPoly(self.ring, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FieldElem) or isinstance(other, int):
            c = self.ring.spec(other)
            return MPoly(self.ring, {e: a * c for e, a in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = terms.get(e)
                terms[e] = prod if s is None else s + prod
        return MPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, divisor):
        """Return q with self = divisor * q, or None if no such q exists.

        Long division by the single divisor under grlex; a surviving
        nonzero remainder certifies non-divisibility.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient = {}
        rem = self
        lead_e = divisor.leading_exponents()
        lead_c = divisor.leading_coefficient()
        while not rem.is_zero():
            e = rem.leading_exponents()
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if any(d < 0 for d in diff):
                return None
            c = rem.terms[e] / lead_c
            quotient[diff] = c
            rem = rem - MPoly(self.ring, {diff: c}) * divisor
        return MPoly(self.ring, quotient)

    def divides(self, other):
        if self.is_zero():
            return other.is_zero()
        return other.exact_div(self) is not None

    def evaluate(self, point):
        """Evaluate at a dict mapping every variable name to a FieldElem."""
        spec = self.ring.spec
        vals = [spec(point[name]) for name in self.ring.vars]
        total = spec.zero()
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                for _ in range(k):
                    term = term * v
            total = total + term
        return total

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = self.ring.const(other)
        return (
            isinstance(other, MPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset((e, c.value) for e, c in self.terms.items())))

    def sorted_terms(self):
        """Terms in canonical (descending grlex) order."""
        return sorted(self.terms.items(), key=lambda ec: grlex_key(ec[0]), reverse=True)

    def __str__(self):
        if self.is_zero():
            return "0"
        rational = self.ring.spec.characteristic() == 0
        parts = []
        for e, c in self.sorted_terms():
            value = c.value
            negative = rational and value < 0
            mag = -value if negative else value
            factors = []
            if mag != 1 or not any(e):
                factors.append(str(mag))
            for name, k in zip(self.ring.vars, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


class SigmaImage:
    """Element of A[x]: coefficient list [a_0, a_1, ..., a_m] of MPoly.

    Trailing zero coefficients are trimmed, so ``a_m`` is nonzero
    whenever the degree m is positive; a constant image is just [a_0]
    (possibly the zero polynomial, for the image of 0).
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.ring != ring:
                raise RingMismatch("image coefficient from a different ring")
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            coeffs = [ring.zero()]
        self.ring = ring
        self.coeffs = coeffs

    @classmethod
    def constant(cls, value):
        return cls(value.ring, [value])

    def degree(self):
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1]

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def at_zero(self):
        """Evaluation at x = 0, i.e. the constant coefficient."""
        return self.coeffs[0]

    def is_constant(self):
        return len(self.coeffs) == 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return SigmaImage(
            self.ring,
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return SigmaImage(
            self.ring,
            [self.coefficient(i) - other.coefficient(i) for i in range(n)],
        )

    def __neg__(self):
        return SigmaImage(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return SigmaImage(self.ring, [c * other for c in self.coeffs])
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return SigmaImage(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SigmaImage(self.ring, [self.ring.one()])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, SigmaImage)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero() and self.degree() > 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if c.is_one() else f"({c})*{xs}"
                parts.append(body)
        return " + ".join(parts)

    def __repr__(self):
        return f"<image {self}>"


class BiPoly:
    """Element of A[x, y]: dict from (x-exp, y-exp) to nonzero MPoly."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def from_x_poly(cls, img):
        return cls(img.ring, {(i, 0): c for i, c in enumerate(img.coeffs)})

    @classmethod
    def from_y_poly(cls, img):
        return cls(img.ring, {(0, i): c for i, c in enumerate(img.coeffs)})

    def times_y_power(self, k):
        return BiPoly(self.ring, {(i, j + k): c for (i, j), c in self.terms.items()})

    def __add__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            s = terms.get(k)
            terms[k] = v if s is None else s + v
        return BiPoly(self.ring, terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            s = terms.get(k)
            terms[k] = -v if s is None else s - v
        return BiPoly(self.ring, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda ij: (sum(ij), ij), reverse=True):
            c = self.terms[(i, j)]
            factors = []
            if not c.is_one() or (i == 0 and j == 0):
                cs = str(c)
                factors.append(f"({cs})" if (" + " in cs or " - " in cs) else cs)
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<bipoly {self}>"


def substitute_x_plus_y(img):
    """Expand sum_i a_i (x+y)^i in A[x, y].

    Binomial coefficients are taken into the coefficient field, so they
    reduce modulo the characteristic automatically.
    """
    ring = img.ring
    spec = ring.spec
    terms = {}
    for i, a in enumerate(img.coeffs):
        if a.is_zero():
            continue
        for j in range(i + 1):
            c = a * spec(math.comb(i, j))
            if c.is_zero():
                continue
            key = (j, i - j)
            s = terms.get(key)
            terms[key] = c if s is None else s + c
    return BiPoly(ring, terms)
