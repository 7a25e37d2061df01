"""Exact arithmetic: half-integers and the constant field Q[ln2, sqrt(pi), 1/sqrt(pi)].

Every identity side in the engine evaluates to a ``SymConst``: a finite
Q-linear combination of monomials ln2^a * sqrt(pi)^b with a >= 0.  Equality of
canonical forms is the engine's only notion of equality.  Rational
coefficients are ``fractions.Fraction`` (arbitrary precision, always reduced).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

from .errors import DivisionByZero, DslSyntaxError, EvalTypeError

Rational = Fraction


@total_ordering
class HalfInt:
    """An exact half-integer n/2, stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, twice):
        if not isinstance(twice, int):
            raise EvalTypeError(f"HalfInt stores twice the value as int, got {twice!r}")
        self.twice = twice

    @classmethod
    def from_value(cls, value):
        """Build from an int, Fraction or HalfInt whose denominator divides 2."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise EvalTypeError(f"{value} is not a half-integer")
            return cls(int(value * 2))
        raise EvalTypeError(f"cannot interpret {value!r} as a half-integer")

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    @property
    def is_negative_integer(self):
        return self.is_integer and self.twice < 0

    @property
    def is_nonneg_integer(self):
        return self.is_integer and self.twice >= 0

    def as_int(self):
        if not self.is_integer:
            raise EvalTypeError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self):
        return Fraction(self.twice, 2)

    def floor(self):
        return self.twice // 2

    def _coerce(self, other):
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int):
            return HalfInt(2 * other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt(other.twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self):
        return hash(self.as_fraction())

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, HalfInt):
        return value.as_fraction()
    raise EvalTypeError(f"cannot interpret {value!r} as a rational")


class SymConst:
    """Element of Q[ln2, sqrt(pi)^(+-1)] in canonical form.

    ``terms`` maps (ln2 exponent, sqrt(pi) exponent) to a nonzero Fraction.
    Instances are immutable; all operations return new values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0:
                    raise EvalTypeError("negative ln2 exponent is outside the constant field")
                c = _as_fraction(c)
                if c != 0:
                    clean[(a, b)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymConst is immutable")

    def __reduce__(self):
        return (SymConst, (self.terms,))

    @classmethod
    def rational(cls, value):
        return cls({(0, 0): _as_fraction(value)})

    @classmethod
    def monomial(cls, coeff, ln2_exp=0, sqrtpi_exp=0):
        return cls({(ln2_exp, sqrtpi_exp): _as_fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return SymConst(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return SymConst({key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return SymConst(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise EvalTypeError("SymConst exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        out = SymConst.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self):
        """Multiplicative inverse; defined only for single monomials."""
        if not self.terms:
            raise DivisionByZero("division by exact zero")
        if len(self.terms) != 1:
            raise EvalTypeError(f"cannot invert non-monomial constant {self}")
        ((a, b), c), = self.terms.items()
        if a != 0:
            raise EvalTypeError("1/ln2 is outside the constant field")
        return SymConst({(0, -b): 1 / c})

    def __eq__(self, other):
        other = _coerce_sym(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- predicates and conversions ---------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_rational(self):
        return all(key == (0, 0) for key in self.terms)

    def as_rational(self):
        if self.is_zero:
            return Fraction(0)
        if not self.is_rational:
            raise EvalTypeError(f"{self} is not rational")
        return self.terms[(0, 0)]

    def as_halfint(self):
        return HalfInt.from_value(self.as_rational())

    def as_int(self):
        q = self.as_rational()
        if q.denominator != 1:
            raise EvalTypeError(f"{self} is not an integer")
        return q.numerator

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"SymConst({self.render()!r})"

    def render(self):
        """Canonical text form: rationals as p/q, L = ln2, P = sqrt(pi)."""
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            mono = []
            if a == 1:
                mono.append("L")
            elif a > 1:
                mono.append(f"L^{a}")
            if b == 1:
                mono.append("P")
            elif b != 0:
                mono.append(f"P^{b}")
            body = "*".join([_render_fraction(abs(c))] + mono) if not mono or abs(c) != 1 \
                else "*".join(mono)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text):
        """Inverse of :meth:`render`."""
        terms = {}
        for sign, body in _split_signed_terms(text):
            coeff = Fraction(1)
            a = b = 0
            for factor in body.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"L(?:\^(-?\d+))?", factor)
                if m:
                    a += int(m.group(1)) if m.group(1) else 1
                    continue
                m = re.fullmatch(r"P(?:\^(-?\d+))?", factor)
                if m:
                    b += int(m.group(1)) if m.group(1) else 1
                    continue
                m = re.fullmatch(r"(\d+)(?:/(\d+))?", factor)
                if m:
                    coeff *= Fraction(int(m.group(1)), int(m.group(2) or 1))
                    continue
                raise DslSyntaxError(f"bad constant factor {factor!r}", text.find(factor))
            key = (a, b)
            terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        return cls(terms)

    def to_float(self, precision_digits=30):
        """High-precision mpmath value; only the derivative cross-check uses this."""
        import mpmath

        if precision_digits < 10:
            raise EvalTypeError("precision_digits must be at least 10")
        with mpmath.workdps(precision_digits + 10):
            ln2 = mpmath.ln(2)
            sqrtpi = mpmath.sqrt(mpmath.pi)
            total = mpmath.mpf(0)
            for (a, b), c in self.terms.items():
                total += mpmath.mpf(c.numerator) / c.denominator * ln2 ** a * sqrtpi ** b
            return +total


def _coerce_sym(value):
    if isinstance(value, SymConst):
        return value
    if isinstance(value, (int, Fraction)):
        return SymConst.rational(value)
    if isinstance(value, HalfInt):
        return SymConst.rational(value.as_fraction())
    return NotImplemented


def _render_fraction(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _split_signed_terms(text):
    text = text.strip()
    if text == "0":
        return []
    out = []
    for piece in re.split(r"\s+(?=[+-]\s)", text):
        piece = piece.strip()
        sign = 1
        if piece.startswith("+"):
            piece = piece[1:].strip()
        elif piece.startswith("-"):
            sign = -1
            piece = piece[1:].strip()
        out.append((sign, piece))
    return out


ZERO = SymConst.rational(0)
ONE = SymConst.rational(1)
LN2 = SymConst.monomial(1, ln2_exp=1)
SQRT_PI = SymConst.monomial(1, sqrtpi_exp=1)
