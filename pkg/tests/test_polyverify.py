"""Dense polynomial arithmetic and exact polynomial-identity verification,
anchored by integral oracles over [0, 1]."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finsum import dsl, polyverify
from finsum.errors import (DivisionByZero, EvalTypeError, NegativeExponent)
from finsum.field import HalfInt, SymConst
from finsum.model import load_identity
from finsum.polyverify import (DensePoly, binomial_power, cheb_u_sqrt_poly,
                               eval_poly, expand_side, integrate_unit,
                               verify_poly)

R = SymConst.rational


def poly(*values):
    return DensePoly(R(v) for v in values)


small_polys = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=8),
    max_size=5).map(lambda cs: poly(*cs))


class TestDensePoly:
    def test_trims_trailing_zeros(self):
        assert poly(1, 2, 0, 0) == poly(1, 2)
        assert poly(0).is_zero
        assert poly().degree == -1

    def test_constant_and_variable(self):
        assert DensePoly.constant(3) == poly(3)
        assert DensePoly.variable() == poly(0, 1)

    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert p * (q + r) == p * q + p * r
        assert p - p == DensePoly()
        assert -p == DensePoly() - p

    @given(small_polys, st.integers(min_value=0, max_value=4))
    def test_pow_matches_repeated_product(self, p, n):
        by_hand = DensePoly.constant(1)
        for _ in range(n):
            by_hand = by_hand * p
        assert p ** n == by_hand

    def test_pow_rejects_negative(self):
        with pytest.raises(NegativeExponent):
            poly(1, 1) ** -1

    @given(small_polys, st.fractions(min_value=-4, max_value=4,
                                     max_denominator=6))
    def test_evaluation_is_ring_hom(self, p, t):
        q = poly(1, -2, 3)
        assert (p * q)(t) == p(t) * q(t)
        assert (p + q)(t) == p(t) + q(t)

    def test_scale(self):
        assert poly(1, 2).scale(R(3)) == poly(3, 6)


class TestBinomialPower:
    @pytest.mark.parametrize("m", range(0, 9))
    def test_matches_direct_expansion(self, m):
        for base, sign in (("1-t", -1), ("1+t", 1)):
            direct = (poly(1) + poly(0, sign)) ** m
            assert binomial_power(base, m) == direct

    def test_rejects_negative_exponent(self):
        with pytest.raises(NegativeExponent):
            binomial_power("1-t", -2)


class TestEvalPoly:
    def ep(self, text, **binds):
        return eval_poly(dsl.parse(text),
                         {k: HalfInt.from_value(Fraction(str(v)))
                          for k, v in binds.items()})

    def test_basic_structure(self):
        assert self.ep("t^2 - 2*t + 1") == poly(1, -2, 1)
        assert self.ep("(1 - t)^n", n=2) == poly(1, -2, 1)
        assert self.ep("sum(k, 0, n, t^k)", n=3) == poly(1, 1, 1, 1)

    def test_scalar_subtrees_use_exact_constants(self):
        p = self.ep("H(5/2)*t")
        assert p.coefficient(1).render() == "46/15 - 2*L"

    def test_chebyshev_call(self):
        assert self.ep("U(2)") == poly(-1, 0, 4)
        assert self.ep("sign(n)*U(2*n)", n=1) == poly(1, 0, -4)

    def test_division_rules(self):
        assert self.ep("(4*t)/2") == poly(0, 2)
        with pytest.raises(EvalTypeError):
            self.ep("1/(1 + t)")
        with pytest.raises(DivisionByZero):
            self.ep("t/(n - 1)", n=1)

    def test_negative_power_of_scalar_only(self):
        assert self.ep("t*2^(0 - 1)") == poly(0, Fraction(1, 2))
        with pytest.raises(NegativeExponent):
            self.ep("(1 + t)^(0 - 1)")


class TestExpandSide:
    def test_standard_matches_poly(self):
        doc = {
            "name": "binomial-theorem-local",
            "lhs": {"kind": "standard", "terms": [
                {"coeff": "binom(n, k)", "t_exp": [1, 0, 0],
                 "base": "1-t", "base_exp": [-1, 1, 0],
                 "lower": "0", "upper": "n"}]},
            "rhs": {"kind": "poly", "expr": "(1 - t + t)^n + 0*t"},
        }
        ident = load_identity(doc)
        for n in range(0, 9):
            report = verify_poly(ident, n)
            assert report.equal, report.first_difference
            assert report.first_difference is None

    def test_zero_coefficients_are_skipped(self):
        doc = {
            "name": "kron-only",
            "lhs": {"kind": "standard", "terms": [
                {"coeff": "kron(k, 2)", "t_exp": [1, 0, 0],
                 "lower": "0", "upper": "n"}]},
            "rhs": {"kind": "poly", "expr": "t^2"},
        }
        assert verify_poly(load_identity(doc), 5).equal

    def test_negative_t_exponent_rejected(self):
        doc = {
            "name": "bad-exp",
            "lhs": {"kind": "standard", "terms": [
                {"coeff": "1", "t_exp": [1, 0, -1],
                 "lower": "0", "upper": "0"}]},
            "rhs": {"kind": "poly", "expr": "t"},
        }
        with pytest.raises(NegativeExponent):
            verify_poly(load_identity(doc), 0)

    def test_first_difference_reports_lowest_power(self):
        doc = {
            "name": "off-by-t",
            "lhs": {"kind": "poly", "expr": "1 + 2*t"},
            "rhs": {"kind": "poly", "expr": "1 + 3*t"},
        }
        report = verify_poly(load_identity(doc), 0)
        assert not report.equal
        idx, lc, rc = report.first_difference
        assert idx == 1 and lc == R(2) and rc == R(3)


class TestIntegralOracles:
    @pytest.mark.parametrize("u", range(0, 9))
    def test_beta_integral_oracle(self, u):
        # integral over [0,1] of t^u (1-t)^v equals
        # 1 / (binom(u+v+1, u+1) * (u+1)) for nonnegative integers u, v
        for v in range(0, 9):
            p = DensePoly([R(0)] * u + [R(1)]) * binomial_power("1-t", v)
            got = integrate_unit(p).as_rational()
            from math import comb
            assert got == Fraction(1, comb(u + v + 1, u + 1) * (u + 1))

    @pytest.mark.parametrize("n", range(0, 11))
    def test_chebyshev_even_moment(self, n):
        u2n = eval_poly(dsl.parse("U(2*n)"), {"n": HalfInt.from_value(n)})
        assert integrate_unit(u2n).as_rational() == Fraction(1, 2 * n + 1)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_chebyshev_t2_moment(self, n):
        u2n = eval_poly(dsl.parse("t^2*U(2*n)"), {"n": HalfInt.from_value(n)})
        want = Fraction(4 * n * n + 4 * n - 1,
                        (2 * n - 1) * (2 * n + 1) * (2 * n + 3))
        assert integrate_unit(u2n).as_rational() == want

    @pytest.mark.parametrize("n", range(2, 11))
    def test_chebyshev_t3_moment(self, n):
        u2n = eval_poly(dsl.parse("t^3*U(2*n)"), {"n": HalfInt.from_value(n)})
        want = Fraction((2 * n + 1) * (2 * n * (n + 1) - 3) + 3 * (-1) ** n,
                        2 * 4 * (n - 1) * n * (n + 1) * (n + 2))
        assert integrate_unit(u2n).as_rational() == want

    @pytest.mark.parametrize("n", range(1, 11))
    def test_sqrt_compression_moment(self, n):
        # integral over [0,1] of U_{2n}(sqrt(t)) dt
        got = integrate_unit(cheb_u_sqrt_poly(n)).as_rational()
        assert got == Fraction(2 * n - (-1) ** n + 1, 2 * n * (n + 1))

    def test_sqrt_compression_example(self):
        assert cheb_u_sqrt_poly(2) == poly(1, -12, 16)
        assert integrate_unit(cheb_u_sqrt_poly(2)).as_rational() == Fraction(1, 3)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_sqrt_compression_matches_substitution(self, n):
        # evaluating at t = q^2 must reproduce U_{2n}(q)
        from finsum import special
        u = special.chebyshev_u(2 * n)
        p = cheb_u_sqrt_poly(n)
        for q in (Fraction(1, 2), Fraction(2), Fraction(-3, 2)):
            assert p(q * q).as_rational() == u(q)


def test_expand_side_rejects_closed():
    ident = load_identity({
        "name": "closed-demo",
        "lhs": {"kind": "closed", "expr": "H(n)"},
        "rhs": {"kind": "closed", "expr": "H(n)"},
    })
    with pytest.raises(EvalTypeError):
        expand_side(ident.lhs, 3)
