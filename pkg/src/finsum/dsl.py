"""The tiny expression language in which identity coefficients and closed
forms are written.

Grammar (whitespace-insensitive)::

    expr   := term (("+"|"-") term)*
    term   := unary (("*"|"/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" unary)?
    atom   := INT | VAR | "(" expr ")" | call
    call   := IDENT "(" expr ("," expr)* ")"

``sum(index, lo, hi, body)`` is the surface form of a bounded sum.  A rational
literal like 5/2 parses as a division of integers; the two spellings evaluate
identically.  ``t`` is accepted as a variable so the same ASTs serve the
polynomial sides; the scalar evaluator rejects it unless bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (ArityError, DivisionByZero, DslSyntaxError, EvalTypeError,
                     PoleError, UnboundVariable)
from .field import HalfInt, SymConst
from . import special

VAR_NAMES = ("n", "k", "j", "r", "s", "u", "v", "t")

# function name -> arity
FUNCTIONS = {
    "binom": 2,
    "rbinom": 2,
    "H": 1,
    "Hm": 2,
    "O": 1,
    "Om": 2,
    "kron": 2,
    "fact": 1,
    "sign": 1,
    "floor": 1,
    "U": 1,
    # named-sequence registry for the partial-sum identity family
    "a_recip": 1,
    "a_recipsq": 1,
    "a_one": 1,
    "a_altrecip": 1,
}


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: object


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


@dataclass(frozen=True)
class BoundedSum:
    index: str
    lower: object
    upper: object
    body: object


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^,]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("ident", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, off = self.peek()
        if kind != "op" or val != op:
            raise DslSyntaxError("parse error", off, expected=(repr(op),))
        return self.next()

    def parse(self):
        expr = self.expr()
        kind, _, off = self.peek()
        if kind != "end":
            raise DslSyntaxError("trailing input", off, expected=("end of input",))
        return expr

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                node = Add(node, rhs) if val == "+" else Sub(node, rhs)
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.unary()
                node = Mul(node, rhs) if val == "*" else Div(node, rhs)
            else:
                return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            return Pow(base, self.unary())
        return base

    def atom(self):
        kind, val, off = self.next()
        if kind == "int":
            return Lit(Fraction(val))
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "ident":
            nxt_kind, nxt_val, _ = self.peek()
            if nxt_kind == "op" and nxt_val == "(":
                return self.call(val, off)
            if val in VAR_NAMES:
                return Var(val)
            raise DslSyntaxError(f"unknown variable {val!r}", off, expected=VAR_NAMES)
        raise DslSyntaxError("parse error", off, expected=("INT", "VAR", "'('", "call"))

    def call(self, name, off):
        self.expect_op("(")
        args = [self.expr()]
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == ",":
                self.next()
                args.append(self.expr())
            else:
                break
        self.expect_op(")")
        if name == "sum":
            if len(args) != 4:
                raise ArityError(f"sum takes 4 arguments, got {len(args)}")
            index = args[0]
            if not isinstance(index, Var):
                raise DslSyntaxError("sum index must be a variable", off)
            return BoundedSum(index.name, args[1], args[2], args[3])
        if name not in FUNCTIONS:
            raise DslSyntaxError(f"unknown function {name!r}", off, expected=sorted(FUNCTIONS))
        if len(args) != FUNCTIONS[name]:
            raise ArityError(f"{name} takes {FUNCTIONS[name]} argument(s), got {len(args)}")
        return Call(name, tuple(args))


def parse(text):
    """Parse a DSL expression into an AST."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# rendering

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Pow: 4}


def render(expr):
    """Canonical pretty-printer; parse(render(e)) == e for parser-produced ASTs."""
    return _render(expr, 0)


def _render(e, parent_prec):
    if isinstance(e, Lit):
        if e.value.denominator == 1:
            s = str(e.value.numerator)
            return s if e.value >= 0 else f"({s})"
        return _wrap(f"{e.value.numerator}/{e.value.denominator}", 2, parent_prec)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return _wrap(f"-{_render(e.operand, 3)}", 3, parent_prec)
    if isinstance(e, Add):
        return _wrap(f"{_render(e.left, 1)} + {_render(e.right, 2)}", 1, parent_prec)
    if isinstance(e, Sub):
        return _wrap(f"{_render(e.left, 1)} - {_render(e.right, 2)}", 1, parent_prec)
    if isinstance(e, Mul):
        return _wrap(f"{_render(e.left, 2)}*{_render(e.right, 3)}", 2, parent_prec)
    if isinstance(e, Div):
        return _wrap(f"{_render(e.left, 2)}/{_render(e.right, 3)}", 2, parent_prec)
    if isinstance(e, Pow):
        return _wrap(f"{_render(e.base, 5)}^{_render(e.exponent, 4)}", 4, parent_prec)
    if isinstance(e, Call):
        return f"{e.fn}({', '.join(_render(a, 0) for a in e.args)})"
    if isinstance(e, BoundedSum):
        return f"sum({e.index}, {_render(e.lower, 0)}, {_render(e.upper, 0)}, {_render(e.body, 0)})"
    raise EvalTypeError(f"not an AST node: {e!r}")


def _wrap(s, prec, parent_prec):
    return f"({s})" if prec < parent_prec else s


# ---------------------------------------------------------------------------
# free variables

def free_vars(expr):
    if isinstance(expr, (Lit,)):
        return set()
    if isinstance(expr, Var):
        return {expr.name}
    if isinstance(expr, Neg):
        return free_vars(expr.operand)
    if isinstance(expr, (Add, Sub, Mul, Div)):
        return free_vars(expr.left) | free_vars(expr.right)
    if isinstance(expr, Pow):
        return free_vars(expr.base) | free_vars(expr.exponent)
    if isinstance(expr, Call):
        out = set()
        for a in expr.args:
            out |= free_vars(a)
        return out
    if isinstance(expr, BoundedSum):
        out = free_vars(expr.lower) | free_vars(expr.upper)
        out |= free_vars(expr.body) - {expr.index}
        return out
    raise EvalTypeError(f"not an AST node: {expr!r}")


def substitute(expr, name, replacement):
    """Replace every free occurrence of variable ``name`` by an AST."""
    if isinstance(expr, Lit):
        return expr
    if isinstance(expr, Var):
        return replacement if expr.name == name else expr
    if isinstance(expr, Neg):
        return Neg(substitute(expr.operand, name, replacement))
    if isinstance(expr, (Add, Sub, Mul, Div)):
        return type(expr)(substitute(expr.left, name, replacement),
                          substitute(expr.right, name, replacement))
    if isinstance(expr, Pow):
        return Pow(substitute(expr.base, name, replacement),
                   substitute(expr.exponent, name, replacement))
    if isinstance(expr, Call):
        return Call(expr.fn, tuple(substitute(a, name, replacement) for a in expr.args))
    if isinstance(expr, BoundedSum):
        lower = substitute(expr.lower, name, replacement)
        upper = substitute(expr.upper, name, replacement)
        body = expr.body if expr.index == name else substitute(expr.body, name, replacement)
        return BoundedSum(expr.index, lower, upper, body)
    raise EvalTypeError(f"not an AST node: {expr!r}")


# ---------------------------------------------------------------------------
# scalar evaluation

def eval_scalar(expr, bindings):
    """Exact value of a scalar expression under half-integer bindings."""
    if isinstance(expr, Lit):
        return SymConst.rational(expr.value)
    if isinstance(expr, Var):
        try:
            return SymConst.rational(bindings[expr.name].as_fraction())
        except KeyError:
            raise UnboundVariable(f"variable {expr.name!r} is unbound") from None
    if isinstance(expr, Neg):
        return -eval_scalar(expr.operand, bindings)
    if isinstance(expr, Add):
        return eval_scalar(expr.left, bindings) + eval_scalar(expr.right, bindings)
    if isinstance(expr, Sub):
        return eval_scalar(expr.left, bindings) - eval_scalar(expr.right, bindings)
    if isinstance(expr, Mul):
        return eval_scalar(expr.left, bindings) * eval_scalar(expr.right, bindings)
    if isinstance(expr, Div):
        denom = eval_scalar(expr.right, bindings)
        if denom.is_zero:
            raise DivisionByZero(f"division by zero in {render(expr)}")
        return eval_scalar(expr.left, bindings) / denom
    if isinstance(expr, Pow):
        exp = _int_arg(expr.exponent, bindings, "exponent")
        base = eval_scalar(expr.base, bindings)
        if exp < 0 and base.is_zero:
            raise DivisionByZero(f"zero base with negative exponent in {render(expr)}")
        return base ** exp
    if isinstance(expr, Call):
        return _eval_call(expr, bindings)
    if isinstance(expr, BoundedSum):
        lo = _int_arg(expr.lower, bindings, "sum lower bound")
        hi = _int_arg(expr.upper, bindings, "sum upper bound")
        total = SymConst.rational(0)
        inner = dict(bindings)
        for i in range(lo, hi + 1):
            inner[expr.index] = HalfInt(2 * i)
            total = total + eval_scalar(expr.body, inner)
        return total
    raise EvalTypeError(f"not an AST node: {expr!r}")


def _int_arg(expr, bindings, what):
    value = eval_scalar(expr, bindings)
    try:
        return value.as_int()
    except EvalTypeError:
        raise EvalTypeError(f"{what} must be an integer, got {value}") from None


def _half_arg(expr, bindings):
    return eval_scalar(expr, bindings).as_halfint()


def _eval_call(expr, bindings):
    fn = expr.fn
    if fn == "binom":
        b = special.gen_binom(_half_arg(expr.args[0], bindings), _half_arg(expr.args[1], bindings))
        if b.infinite:
            raise PoleError(f"{render(expr)} is infinite")
        return b.value
    if fn == "rbinom":
        return special.recip_binom(_half_arg(expr.args[0], bindings), _half_arg(expr.args[1], bindings))
    if fn == "H":
        return special.harmonic(_half_arg(expr.args[0], bindings))
    if fn == "Hm":
        return SymConst.rational(special.harmonic_m(_int_arg(expr.args[0], bindings, "Hm order-n"),
                                                    _int_arg(expr.args[1], bindings, "Hm order-m")))
    if fn == "O":
        return SymConst.rational(special.odd_harmonic_m(_int_arg(expr.args[0], bindings, "O argument"), 1))
    if fn == "Om":
        return SymConst.rational(special.odd_harmonic_m(_int_arg(expr.args[0], bindings, "Om argument"),
                                                        _int_arg(expr.args[1], bindings, "Om order")))
    if fn == "kron":
        a = _half_arg(expr.args[0], bindings)
        b = _half_arg(expr.args[1], bindings)
        return SymConst.rational(1 if a == b else 0)
    if fn == "fact":
        return SymConst.rational(special.factorial(_int_arg(expr.args[0], bindings, "factorial argument")))
    if fn == "sign":
        return SymConst.rational((-1) ** _int_arg(expr.args[0], bindings, "sign argument"))
    if fn == "floor":
        return SymConst.rational(_half_arg(expr.args[0], bindings).floor())
    if fn == "a_recip":
        j = _int_arg(expr.args[0], bindings, "sequence index")
        if j == 0:
            raise DivisionByZero("a_recip(0)")
        return SymConst.rational(Fraction(1, j))
    if fn == "a_recipsq":
        j = _int_arg(expr.args[0], bindings, "sequence index")
        if j == 0:
            raise DivisionByZero("a_recipsq(0)")
        return SymConst.rational(Fraction(1, j * j))
    if fn == "a_one":
        _half_arg(expr.args[0], bindings)
        return SymConst.rational(1)
    if fn == "a_altrecip":
        j = _int_arg(expr.args[0], bindings, "sequence index")
        if j == 0:
            raise DivisionByZero("a_altrecip(0)")
        return SymConst.rational(Fraction((-1) ** (j + 1), j))
    if fn == "U":
        raise EvalTypeError("U(...) is only meaningful in polynomial context")
    raise EvalTypeError(f"unknown function {fn!r}")
