"""Identity data model and the on-disk (JSON) document format.

An identity has two sides; each side is either

* ``StandardSide``: a list of terms coeff(k,n) * t^a * (1+-t)^b with affine
  exponents a, b in (k, n),
* ``PolySide``: a single DSL expression containing the indeterminate t, or
* ``ClosedSide``: t-free summands plus an optional standalone expression.

Both sides must be closed, or both t-bearing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from . import dsl
from .errors import EvalTypeError, FormatError, ShapeError
from .field import HalfInt

STATUSES = ("verified", "check", "disputed", "erratum_claimed")


@dataclass(frozen=True)
class AffineForm:
    """Integer-affine exponent coef_k*k + coef_n*n + constant."""

    coef_k: int = 0
    coef_n: int = 0
    constant: int = 0

    def value(self, k, n):
        return self.coef_k * k + self.coef_n * n + self.constant

    def to_expr(self):
        node = dsl.Lit(__import__("fractions").Fraction(self.constant))
        for coef, name in ((self.coef_k, "k"), (self.coef_n, "n")):
            if coef == 0:
                continue
            mono = dsl.Var(name) if coef == 1 else dsl.Mul(dsl.Lit(__import__("fractions").Fraction(coef)), dsl.Var(name))
            node = dsl.Add(node, mono) if not _is_zero_lit(node) else mono
        return node

    @property
    def is_zero(self):
        return self.coef_k == 0 and self.coef_n == 0 and self.constant == 0


def _is_zero_lit(node):
    return isinstance(node, dsl.Lit) and node.value == 0


@dataclass(frozen=True)
class StdTerm:
    """One standard-form summand: coeff * t^t_exp * base^base_exp, k = lower..upper."""

    coeff: object            # SeqExpr over {k, n}
    t_exp: AffineForm
    base: str                # "1-t" or "1+t"
    base_exp: AffineForm
    lower: object            # SeqExpr over {n}
    upper: object            # SeqExpr over {n}


@dataclass(frozen=True)
class StandardSide:
    terms: tuple


@dataclass(frozen=True)
class PolySide:
    expr: object


@dataclass(frozen=True)
class ClosedSummand:
    coeff: object            # SeqExpr over {k, n, r, s, u, v}
    lower: object
    upper: object


@dataclass(frozen=True)
class ClosedSide:
    summands: tuple = ()
    extra: object = None     # optional standalone SeqExpr (may contain sum(...))


@dataclass(frozen=True)
class Identity:
    name: str
    paper_ref: str
    status: str
    lhs: object
    rhs: object
    param_constraints: tuple = ()
    notes: str = ""

    @property
    def is_closed(self):
        return isinstance(self.lhs, ClosedSide)

    @property
    def is_standard(self):
        return isinstance(self.lhs, StandardSide) and isinstance(self.rhs, StandardSide)


def admissible(r, s):
    """Parameter constraint of the transform lemmas:
    r, s not negative integers, s != 0, r - s not a negative integer."""
    r = HalfInt.from_value(r)
    s = HalfInt.from_value(s)
    if r.is_negative_integer or s.is_negative_integer:
        return False
    if s.twice == 0:
        return False
    diff = r - s
    return not diff.is_negative_integer


# ---------------------------------------------------------------------------
# document format

def load_identity(document):
    """Parse an identity document (dict or JSON text) into an Identity."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise FormatError("identity document must be a JSON object")
    try:
        name = document["name"]
        lhs_doc = document["lhs"]
        rhs_doc = document["rhs"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from exc
    status = document.get("status", "verified")
    if status not in STATUSES:
        raise FormatError(f"unknown status {status!r}")
    lhs = _load_side(lhs_doc, name)
    rhs = _load_side(rhs_doc, name)
    if isinstance(lhs, ClosedSide) != isinstance(rhs, ClosedSide):
        raise ShapeError(f"{name}: one side is closed, the other t-bearing")
    return Identity(
        name=name,
        paper_ref=document.get("paper_ref", ""),
        status=status,
        lhs=lhs,
        rhs=rhs,
        param_constraints=tuple(document.get("params", ())),
        notes=document.get("notes", ""),
    )


def _mentions_cheb(expr):
    """True when the expression calls U(...), which is a polynomial in t."""
    if isinstance(expr, (dsl.Lit, dsl.Var)):
        return False
    if isinstance(expr, dsl.Neg):
        return _mentions_cheb(expr.operand)
    if isinstance(expr, (dsl.Add, dsl.Sub, dsl.Mul, dsl.Div)):
        return _mentions_cheb(expr.left) or _mentions_cheb(expr.right)
    if isinstance(expr, dsl.Pow):
        return _mentions_cheb(expr.base) or _mentions_cheb(expr.exponent)
    if isinstance(expr, dsl.Call):
        return expr.fn == "U" or any(_mentions_cheb(a) for a in expr.args)
    if isinstance(expr, dsl.BoundedSum):
        return (_mentions_cheb(expr.lower) or _mentions_cheb(expr.upper)
                or _mentions_cheb(expr.body))
    return False


def _load_side(doc, name):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FormatError(f"{name}: side must be an object with a 'kind'")
    kind = doc["kind"]
    if kind == "standard":
        terms = tuple(_load_term(t, name) for t in doc.get("terms", ()))
        return StandardSide(terms)
    if kind == "poly":
        expr = dsl.parse(doc["expr"])
        if "t" not in dsl.free_vars(expr) and not _mentions_cheb(expr):
            raise FormatError(f"{name}: poly side contains no t")
        return PolySide(expr)
    if kind == "closed":
        summands = tuple(
            ClosedSummand(dsl.parse(s["coeff"]), dsl.parse(str(s["lower"])), dsl.parse(str(s["upper"])))
            for s in doc.get("sums", ())
        )
        extra = dsl.parse(doc["expr"]) if "expr" in doc else None
        if not summands and extra is None:
            raise FormatError(f"{name}: empty closed side")
        for e in [s.coeff for s in summands] + ([extra] if extra is not None else []):
            if "t" in dsl.free_vars(e):
                raise FormatError(f"{name}: closed side contains t")
        return ClosedSide(summands, extra)
    raise FormatError(f"{name}: unknown side kind {kind!r}")


def _load_term(doc, name):
    try:
        coeff = dsl.parse(doc["coeff"])
        t_exp = _load_affine(doc.get("t_exp", [0, 0, 0]), name)
        base = doc.get("base", "1-t")
        base_exp = _load_affine(doc.get("base_exp", [0, 0, 0]), name)
        lower = dsl.parse(str(doc.get("lower", "0")))
        upper = dsl.parse(str(doc.get("upper", "0")))
    except KeyError as exc:
        raise FormatError(f"{name}: standard term missing {exc}") from exc
    if base not in ("1-t", "1+t"):
        raise FormatError(f"{name}: bad base {base!r}")
    bad = dsl.free_vars(coeff) - {"k", "n"}
    if bad:
        raise FormatError(f"{name}: standard coeff has stray variables {sorted(bad)}")
    return StdTerm(coeff, t_exp, base, base_exp, lower, upper)


def _load_affine(val, name):
    if isinstance(val, int):
        return AffineForm(constant=val)
    if (isinstance(val, (list, tuple)) and len(val) == 3
            and all(isinstance(x, int) for x in val)):
        return AffineForm(*val)
    raise FormatError(f"{name}: exponent {val!r} is not an integer affine form [ck, cn, c]")


def save_identity(identity):
    """Inverse of load_identity (canonical dict form)."""
    return {
        "name": identity.name,
        "paper_ref": identity.paper_ref,
        "status": identity.status,
        "lhs": _save_side(identity.lhs),
        "rhs": _save_side(identity.rhs),
        "params": list(identity.param_constraints),
        "notes": identity.notes,
    }


def _save_side(side):
    if isinstance(side, StandardSide):
        return {"kind": "standard", "terms": [
            {
                "coeff": dsl.render(t.coeff),
                "t_exp": [t.t_exp.coef_k, t.t_exp.coef_n, t.t_exp.constant],
                "base": t.base,
                "base_exp": [t.base_exp.coef_k, t.base_exp.coef_n, t.base_exp.constant],
                "lower": dsl.render(t.lower),
                "upper": dsl.render(t.upper),
            }
            for t in side.terms
        ]}
    if isinstance(side, PolySide):
        return {"kind": "poly", "expr": dsl.render(side.expr)}
    if isinstance(side, ClosedSide):
        doc = {"kind": "closed"}
        if side.summands:
            doc["sums"] = [
                {"coeff": dsl.render(s.coeff), "lower": dsl.render(s.lower), "upper": dsl.render(s.upper)}
                for s in side.summands
            ]
        if side.extra is not None:
            doc["expr"] = dsl.render(side.extra)
        return doc
    raise EvalTypeError(f"not a side: {side!r}")


def substitute_neg_t(identity):
    """Apply t -> -t: flips (1+t) <-> (1-t) and sign-twists t^a coefficients."""
    if not identity.is_standard:
        raise ShapeError(f"{identity.name}: substitute_neg_t needs standard sides")

    def flip(side):
        out = []
        for term in side.terms:
            coeff = term.coeff
            if not term.t_exp.is_zero:
                coeff = dsl.Mul(dsl.Call("sign", (term.t_exp.to_expr(),)), coeff)
            base = term.base
            if not term.base_exp.is_zero:
                base = "1+t" if base == "1-t" else "1-t"
            out.append(replace(term, coeff=coeff, base=base))
        return StandardSide(tuple(out))

    return replace(identity, lhs=flip(identity.lhs), rhs=flip(identity.rhs))
