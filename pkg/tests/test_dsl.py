"""Parser, renderer, and scalar evaluator of the expression language."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finsum import dsl
from finsum.errors import (ArityError, DivisionByZero, DslSyntaxError,
                           EvalTypeError, PoleError, UnboundVariable)
from finsum.field import HalfInt, SymConst


def ev(text, **binds):
    return dsl.eval_scalar(dsl.parse(text),
                           {k: HalfInt.from_value(Fraction(str(v)))
                            for k, v in binds.items()})


def rat(text, **binds):
    return ev(text, **binds).as_rational()


class TestParsing:
    @pytest.mark.parametrize("text", [
        "1",
        "n",
        "-n",
        "n + k",
        "n - k - 1",
        "n*k/(k + 1)",
        "2^(n - 2*k)",
        "binom(n, k)*H(k)",
        "sign(k - 1)*rbinom(k + r, s)",
        "sum(j, 1, k, 1/j)",
        "sum(k, 0, floor(n/2), binom(n, 2*k))",
        "kron(n, k)*(H(k) + 1) - 1",
        "-(H(n) - 2*H(k - 1) + H(n - k))/k",
        "fact(k + r - 1)/fact(k)/(k + 2)",
        "Hm(k, 2)*Om(k, 1)*a_recip(j)",
    ])
    def test_render_round_trip(self, text):
        ast = dsl.parse(text)
        assert dsl.parse(dsl.render(ast)) == ast

    def test_precedence(self):
        assert dsl.parse("1 + 2*3") == dsl.Add(
            dsl.Lit(Fraction(1)),
            dsl.Mul(dsl.Lit(Fraction(2)), dsl.Lit(Fraction(3))))
        # ^ binds tighter than unary minus on the left
        assert rat("-2^2") == -4
        assert rat("(-2)^2") == 4
        assert rat("2^3^1") == 8

    def test_rational_literal_is_division(self):
        assert dsl.parse("5/2") == dsl.Div(dsl.Lit(Fraction(5)), dsl.Lit(Fraction(2)))
        assert rat("5/2") == Fraction(5, 2)

    def test_syntax_errors_carry_offsets(self):
        with pytest.raises(DslSyntaxError) as exc:
            dsl.parse("1 + $")
        assert exc.value.offset == 4
        with pytest.raises(DslSyntaxError):
            dsl.parse("binom(n, k")
        with pytest.raises(DslSyntaxError):
            dsl.parse("1 + ")
        with pytest.raises(DslSyntaxError):
            dsl.parse("x + 1")
        with pytest.raises(DslSyntaxError):
            dsl.parse("nosuch(1)")

    def test_arity_errors(self):
        with pytest.raises(ArityError):
            dsl.parse("binom(n)")
        with pytest.raises(ArityError):
            dsl.parse("H(n, 2)")
        with pytest.raises(ArityError):
            dsl.parse("sum(k, 0, n)")
        with pytest.raises(DslSyntaxError):
            dsl.parse("sum(2, 0, n, k)")

    def test_free_vars(self):
        assert dsl.free_vars(dsl.parse("binom(n, k)*H(j)")) == {"n", "k", "j"}
        assert dsl.free_vars(dsl.parse("sum(j, 1, k, 1/j)")) == {"k"}
        assert dsl.free_vars(dsl.parse("sum(j, j, k, 1/j)")) == {"j", "k"}

    def test_substitute(self):
        ast = dsl.substitute(dsl.parse("binom(n, k) + k"), "k",
                             dsl.parse("2*k"))
        assert ast == dsl.parse("binom(n, 2*k) + 2*k")
        # bound index is untouched
        ast = dsl.substitute(dsl.parse("sum(j, 1, k, j)"), "j", dsl.parse("n"))
        assert ast == dsl.parse("sum(j, 1, k, j)")


class TestScalarEval:
    def test_spec_examples(self):
        assert ev("sum(k,1,n,binom(n,k)*H(k)/k)", n=3).render() != ""
        assert ev("H(5/2)").render() == "46/15 - 2*L"
        assert rat("sum(k,0,n,sign(k)*binom(n,k)/(k+1))", n=4) == Fraction(1, 5)

    def test_half_integer_flow(self):
        assert rat("rbinom(k + r, s)", k=2, r="1/2", s="1/2") != 0
        assert ev("binom(n, k)", n="5/2", k=2).as_rational() == Fraction(15, 8)

    def test_calls(self):
        assert rat("kron(n, k)", n=3, k=3) == 1
        assert rat("kron(n, k)", n=3, k=2) == 0
        assert rat("sign(k)", k=3) == -1
        assert rat("sign(k - 1)", k=3) == 1
        assert rat("floor(n/2)", n=5) == 2
        assert rat("fact(n)", n=5) == 120
        assert rat("Hm(n, 2)", n=3) == Fraction(49, 36)
        assert rat("O(n)", n=3) == Fraction(23, 15)
        assert rat("Om(n, 2)", n=2) == Fraction(10, 9)
        assert rat("a_recip(j)", j=4) == Fraction(1, 4)
        assert rat("a_recipsq(j)", j=4) == Fraction(1, 16)
        assert rat("a_one(j)", j=9) == 1
        assert rat("a_altrecip(j)", j=4) == Fraction(-1, 4)

    def test_registry_poles(self):
        for fn in ("a_recip", "a_recipsq", "a_altrecip"):
            with pytest.raises(DivisionByZero):
                ev(f"{fn}(j)", j=0)

    def test_empty_sum_is_zero(self):
        assert rat("sum(k, 1, n, 1/k)", n=0) == 0
        assert rat("sum(k, 0, n - 1, H(k))", n=0) == 0

    def test_pow_requires_integer_exponent(self):
        assert rat("2^(n - 2*k)", n=5, k=1) == 8
        assert rat("4^k", k=0) == 1
        with pytest.raises(EvalTypeError):
            ev("2^r", r="1/2")
        with pytest.raises(DivisionByZero):
            ev("(n - 3)^(0 - 1)", n=3)

    def test_eval_errors(self):
        with pytest.raises(UnboundVariable):
            ev("n + k", n=1)
        with pytest.raises(DivisionByZero):
            ev("1/(n - 2)", n=2)
        with pytest.raises(PoleError):
            ev("H(n)", n=-3)
        with pytest.raises(PoleError):
            ev("binom(n, k)", n=-1, k="1/2")
        with pytest.raises(EvalTypeError):
            ev("U(n)", n=2)

    def test_rbinom_limit_is_zero(self):
        assert ev("rbinom(n, k)", n=-1, k="1/2").is_zero

    def test_sign_needs_integer(self):
        with pytest.raises(EvalTypeError):
            ev("sign(r)", r="1/2")


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=6))
def test_nested_sum_matches_direct(n, m):
    # sum_{k=0..n} sum_{j=1..k} 1/j^m computed two ways
    got = rat("sum(k, 0, n, sum(j, 1, k, 1/j^" + str(m) + "))", n=n)
    want = sum((Fraction(1, j ** m) for k in range(n + 1) for j in range(1, k + 1)),
               Fraction(0))
    assert got == want
