"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant, unary minus only at expression head):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nonneg-int)?
    base   := integer | integer '/' integer | identifier | '(' expr ')'

Identifiers match [A-Za-z][A-Za-z0-9_]*.  The same parser serves plain
ring elements and images in A[x]: it evaluates the expression tree in
whatever algebra the atom table provides, so ``x`` is just one more
atom when images are being read.  Printing is the job of
``MPoly.__str__``; print-then-parse is the identity.
"""

from fractions import Fraction

from .errors import ParseError, UnknownVariable
from .poly import SigmaImage

# exponents stay within a machine word; desk-scale degrees are tiny anyway
MAX_EXPONENT = 2**63 - 1


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("eof", None, n))
    return tokens


class _Parser:
    def __init__(self, text, atoms, const):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.atoms = atoms
        self.const = const

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected trailing {tok[1]!r}", tok[2])
        return value

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        value = self.base()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            if tok[1] > MAX_EXPONENT:
                raise ParseError("exponent too large", tok[2])
            value = value ** tok[1]
        return value

    def base(self):
        tok = self.advance()
        kind, val, pos = tok
        if kind == "int":
            if self.peek()[0] == "/":
                self.advance()
                dtok = self.expect("int")
                if dtok[1] == 0:
                    raise ParseError("zero denominator", dtok[2])
                return self.make_const(Fraction(val, dtok[1]), pos)
            return self.make_const(val, pos)
        if kind == "ident":
            atom = self.atoms.get(val)
            if atom is None:
                raise UnknownVariable(val, pos)
            return atom
        if kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {val!r}", pos)

    def make_const(self, value, pos):
        try:
            return self.const(value)
        except ZeroDivisionError:
            raise ParseError(
                f"constant {value} has no meaning in this field", pos
            ) from None


def parse_poly(text, ring):
    """Parse an expression over the ring variables into an MPoly."""
    atoms = {name: ring.var(name) for name in ring.vars}
    return _Parser(text, atoms, ring.const).parse()


def parse_sigma_image(text, ring):
    """Parse an expression over the ring variables plus x into A[x]."""
    atoms = {name: SigmaImage.constant(ring.var(name)) for name in ring.vars}
    atoms["x"] = SigmaImage(ring, [ring.zero(), ring.one()])
    const = lambda v: SigmaImage.constant(ring.const(v))
    return _Parser(text, atoms, const).parse()
