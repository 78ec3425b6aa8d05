"""Exact coefficient arithmetic for the diagram algebras.

Three rings are used throughout:

* ``Z[delta]`` -- integer polynomials in the loop parameter, class
  :class:`DeltaPoly`.  The second parameter delta' of the two-parameter
  partial Brauer product is carried by the same type.
* ``Z[q, q^-1]`` -- integer Laurent polynomials in the quantum parameter,
  class :class:`LaurentPoly`.
* ``Q`` -- exact rationals, via :class:`fractions.Fraction`.

Polynomial values are immutable and hashable.  Zero coefficients are never
stored, so equality is structural; a constant polynomial compares (and
hashes) equal to the plain integer or Fraction it represents.  Arithmetic
between different polynomial rings raises ``TypeError``; ints and Fractions
promote into either ring.  Coefficients are normally ints, but exact
Fractions are accepted (needed for the tensor-space action at non-integer
values of the form parameter alpha).
"""

from __future__ import annotations

import re
from fractions import Fraction

_NUM = (int, Fraction)


class IntPoly:
    """Sparse univariate polynomial with exact coefficients.

    Subclasses fix the variable name and whether negative exponents are
    allowed.  Instances are immutable; do not mutate the coefficient dict.
    """

    VAR = "x"
    ALLOW_NEG = False
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(e, int):
                    raise TypeError("exponents must be ints, got %r" % (e,))
                if e < 0 and not self.ALLOW_NEG:
                    raise ValueError(
                        "negative exponent %d not allowed in %s" % (e, type(self).__name__))
                if not isinstance(c, _NUM):
                    raise TypeError("coefficients must be int or Fraction, got %r" % (c,))
                if c:
                    clean[e] = c
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("%s is immutable" % type(self).__name__)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def gen(cls):
        """The variable itself."""
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, _NUM):
            return type(self)({0: other})
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return type(self)(out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return type(self)({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return not self.coeffs or set(self.coeffs) == {0}

    def constant_value(self):
        assert self.is_constant()
        return self.coeffs.get(0, 0)

    def __eq__(self, other):
        if isinstance(other, _NUM):
            return self.is_constant() and self.coeffs.get(0, 0) == other
        if type(other) is type(self):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_constant():
                h = hash(self.coeffs.get(0, 0))
            else:
                h = hash((self.VAR, tuple(sorted(self.coeffs.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    # -- evaluation and display --------------------------------------------

    def evaluate(self, x0):
        """Exact value at the rational point ``x0``."""
        x0 = Fraction(x0)
        if x0 == 0 and any(e < 0 for e in self.coeffs):
            raise ValueError("cannot evaluate a negative power at 0")
        return sum((Fraction(c) * x0 ** e for e, c in self.coeffs.items()), Fraction(0))

    def min_exponent(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exponent(self):
        return max(self.coeffs) if self.coeffs else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                var = self.VAR if e == 1 else "%s^%d" % (self.VAR, e)
                body = var if mag == 1 else "%s*%s" % (mag, var)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, str(self))

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``; accepts any signed monomial list."""
        coeffs = {}
        for sign, coef, var, exp in _tokenize(text, cls.VAR):
            c = coef if coef is not None else 1
            if sign == "-":
                c = -c
            e = 0
            if var:
                e = exp if exp is not None else 1
            coeffs[e] = coeffs.get(e, 0) + c
        return cls(coeffs)


class DeltaPoly(IntPoly):
    """Integer polynomial in the loop parameter delta."""

    VAR = "delta"
    ALLOW_NEG = False
    __slots__ = ()


class LaurentPoly(IntPoly):
    """Integer Laurent polynomial in the quantum parameter q."""

    VAR = "q"
    ALLOW_NEG = True
    __slots__ = ()


class XPoly(IntPoly):
    """Plain integer polynomial in an auxiliary variable x (Jones recursion)."""

    VAR = "x"
    ALLOW_NEG = False
    __slots__ = ()


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?\s*\*?\s*)?"
    r"(?:(?P<var>[A-Za-z]+)(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*")


def _tokenize(text, var):
    pos, n = 0, len(text)
    out = []
    while pos < n:
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError("cannot parse %r at position %d" % (text, pos))
        sign, num, den, v, exp = (m.group("sign"), m.group("num"),
                                  m.group("den"), m.group("var"), m.group("exp"))
        if num is None and v is None:
            raise ValueError("cannot parse %r at position %d" % (text, pos))
        if v is not None and v != var:
            raise ValueError("unexpected variable %r (expected %r)" % (v, var))
        coef = None
        if num is not None:
            coef = Fraction(int(num), int(den)) if den else int(num)
            if isinstance(coef, Fraction) and coef.denominator == 1:
                coef = int(coef)
        out.append((sign or "+", coef, v, int(exp) if exp is not None else None))
        pos = m.end()
    return out


# -- specialization maps -----------------------------------------------------

def substitute_delta(p, sign):
    """Replace delta by 1 +- (q + q^-1), exactly.

    ``sign`` is "+" or "-".  A ring homomorphism Z[delta] -> Z[q, q^-1].
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if isinstance(p, _NUM):
        return LaurentPoly({0: p})
    if not isinstance(p, DeltaPoly):
        raise TypeError("substitute_delta expects a DeltaPoly")
    s = 1 if sign == "+" else -1
    base = LaurentPoly({0: 1, 1: s, -1: s})
    if not p.coeffs:
        return LaurentPoly.zero()
    # Horner, highest exponent first
    result = LaurentPoly.zero()
    for e in range(max(p.coeffs), -1, -1):
        result = result * base + p.coeffs.get(e, 0)
    return result


def evaluate_q(p, q0):
    """Exact value of a Laurent polynomial at a nonzero rational q0."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("q = 0 is not allowed (q^-1 undefined)")
    if isinstance(p, _NUM):
        return Fraction(p)
    if not isinstance(p, LaurentPoly):
        raise TypeError("evaluate_q expects a LaurentPoly")
    return p.evaluate(q0)


def evaluate_delta(p, d0):
    """Exact value of a delta-polynomial at a rational point."""
    if isinstance(p, _NUM):
        return Fraction(p)
    if not isinstance(p, DeltaPoly):
        raise TypeError("evaluate_delta expects a DeltaPoly")
    return p.evaluate(Fraction(d0))


def scalar_to_str(c):
    """Textual form of any scalar (int, Fraction, or polynomial)."""
    return str(c)


def parse_scalar(text):
    """Parse the textual form back; the ring is inferred from the variable."""
    t = text.strip()
    if "delta" in t:
        return DeltaPoly.parse(t)
    if "q" in t:
        return LaurentPoly.parse(t)
    if "x" in t:
        return XPoly.parse(t)
    if "/" in t:
        return Fraction(t)
    return int(t)
