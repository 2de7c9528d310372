"""Tests for truncated power series over the exact coefficient rings."""

import random
from fractions import Fraction

import pytest

from runyon.exactalg import MultiPoly, RatFunc
from runyon.series import (
    BadRootHint,
    NonzeroInnerConstant,
    NotInvertibleConstantTerm,
    PoleAtOrigin,
    SeriesFraction,
    TruncSeries,
    ValuationMismatch,
    VariableMismatch,
    horner_eval,
    lagrange_coeff,
    poly_ring,
    rational_ring,
    ratfunc_ring,
    series_compose,
    series_inverse,
    series_pow,
    series_revert,
    series_sqrt,
    solve_functional,
)

X = MultiPoly.variable("x")
ALPHA = MultiPoly.variable("alpha")
BETA = MultiPoly.variable("beta")
W = MultiPoly.variable("w")


def q_series(coeffs, var="t", order=None):
    return TruncSeries(rational_ring, var, [Fraction(c) for c in coeffs], order=order)


def random_q_series(rng, order, unit_constant=False, valuation_one=False):
    coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order + 1)]
    if unit_constant:
        coeffs[0] = Fraction(rng.choice([1, -1, 2, 3]), rng.randint(1, 3))
    if valuation_one:
        coeffs[0] = Fraction(0)
        coeffs[1] = Fraction(rng.choice([1, -1, 2]), rng.randint(1, 3))
    return TruncSeries(rational_ring, "t", coeffs)


class TestConstruction:
    def test_pads_with_zeros_up_to_order(self):
        s = q_series([1, 2], order=4)
        assert s.order == 4
        assert s.coeffs == (Fraction(1), Fraction(2), 0, 0, 0)

    def test_truncates_down_to_order(self):
        s = q_series([1, 2, 3, 4], order=1)
        assert s.coeffs == (Fraction(1), Fraction(2))

    def test_empty_without_order_rejected(self):
        with pytest.raises(ValueError):
            TruncSeries(rational_ring, "t", [])

    def test_identity_and_one(self):
        t = TruncSeries.identity(rational_ring, "t", 3)
        assert t.coeffs == (0, 1, 0, 0)
        assert TruncSeries.one(rational_ring, "t", 2).coeffs == (1, 0, 0)
        with pytest.raises(ValueError):
            TruncSeries.identity(rational_ring, "t", 0)

    def test_coefficient_bounds(self):
        s = q_series([5, 6])
        assert s.coefficient(1) == 6
        with pytest.raises(IndexError):
            s.coefficient(2)
        with pytest.raises(IndexError):
            s.coefficient(-1)

    def test_poly_ring_coercion(self):
        s = TruncSeries(poly_ring, "t", [1, ALPHA], order=2)
        assert s.coefficient(0) == MultiPoly.one()
        assert s.coefficient(1) == ALPHA
        assert s.coefficient(2).is_zero


class TestArithmetic:
    def test_add_truncates_to_common_order(self):
        a = q_series([1, 1, 1, 1])
        b = q_series([2, 3], order=1)
        assert (a + b).order == 1
        assert (a + b).coeffs == (3, 4)

    def test_product_is_cauchy(self):
        a = q_series([1, 1], order=4)  # 1 + t
        b = q_series([1, -1], order=4)  # 1 - t
        assert (a * b).coeffs == (1, 0, -1, 0, 0)

    def test_scalar_multiplication_both_sides(self):
        s = q_series([1, 2, 3])
        assert (s * 2).coeffs == (2, 4, 6)
        assert (Fraction(1, 2) * s).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))

    def test_variable_mismatch(self):
        with pytest.raises(VariableMismatch):
            q_series([1], var="t") + q_series([1], var="u")

    def test_ring_mismatch(self):
        a = q_series([1, 2])
        b = TruncSeries(poly_ring, "t", [1, 2])
        with pytest.raises(VariableMismatch):
            a * b

    def test_equality_up_to_common_order(self):
        assert q_series([1, 2, 3]) == q_series([1, 2], order=1)
        assert q_series([1, 2]) != q_series([1, 3])
        assert q_series([1], var="t") != q_series([1], var="u")

    def test_negation(self):
        assert (-q_series([1, -2])).coeffs == (-1, 2)

    def test_pow_matches_repeated_multiplication(self):
        s = q_series([1, 1, 1], order=5)
        assert series_pow(s, 3) == s * s * s
        assert series_pow(s, 0) == TruncSeries.one(rational_ring, "t", 5)
        with pytest.raises(ValueError):
            series_pow(s, -1)


class TestStructure:
    def test_truncate_only_shrinks(self):
        s = q_series([1, 2, 3])
        assert s.truncate(1).coeffs == (1, 2)
        with pytest.raises(ValueError):
            s.truncate(5)

    def test_renamed(self):
        s = q_series([1, 2]).renamed("T")
        assert s.variable == "T"
        assert s.coeffs == (1, 2)

    def test_shift_up_preserves_order(self):
        s = q_series([1, 2, 3])
        up = s.shift_up(1)
        assert up.order == 2
        assert up.coeffs == (0, 1, 2)

    def test_shift_down_requires_vanishing_head(self):
        s = q_series([0, 0, 7, 9])
        assert s.shift_down(2).coeffs == (7, 9)
        with pytest.raises(ValuationMismatch):
            q_series([1, 2]).shift_down(1)
        with pytest.raises(ValuationMismatch):
            q_series([0, 1]).shift_down(3)

    def test_valuation(self):
        assert q_series([0, 0, 5]).valuation() == 2
        assert q_series([0, 0, 0]).valuation() is None

    def test_derivative(self):
        s = q_series([7, 1, 1, 1])  # 7 + t + t^2 + t^3
        assert s.derivative().coeffs == (1, 2, 3)
        assert q_series([7]).derivative().coeffs == (0,)

    def test_json_shape(self):
        data = q_series([1, Fraction(1, 2)]).to_json()
        assert data == {"variable": "t", "order": 1, "coeffs": ["1", "1/2"]}
        poly_data = TruncSeries(poly_ring, "t", [ALPHA]).to_json()
        assert poly_data["coeffs"][0][0]["exponents"] == {"alpha": 1}


class TestInverse:
    def test_geometric_series(self):
        s = q_series([1, -1], order=5)  # 1 - t
        assert series_inverse(s).coeffs == (1, 1, 1, 1, 1, 1)

    def test_requires_unit_constant(self):
        with pytest.raises(NotInvertibleConstantTerm):
            series_inverse(q_series([0, 1]))
        with pytest.raises(NotInvertibleConstantTerm):
            series_inverse(TruncSeries(poly_ring, "t", [ALPHA, 1]))

    def test_inverse_round_trip_seeded(self):
        rng = random.Random(11)
        one = TruncSeries.one(rational_ring, "t", 12)
        for _ in range(50):
            s = random_q_series(rng, 12, unit_constant=True)
            assert s * series_inverse(s) == one

    def test_ratfunc_coefficients(self):
        s = TruncSeries(ratfunc_ring, "t", [RatFunc(ALPHA), 1], order=3)
        inv = series_inverse(s)
        assert (s * inv).coefficient(0) == RatFunc.one()
        assert (s * inv).coefficient(3) == RatFunc.zero()


class TestSqrt:
    def test_known_expansion(self):
        # (1 - 4t)^(1/2) begins 1 - 2t - 2t^2 - 4t^3
        s = q_series([1, -4], order=3)
        assert series_sqrt(s, 1).coeffs == (1, -2, -2, -4)

    def test_negative_branch(self):
        s = q_series([1, -4], order=2)
        assert series_sqrt(s, -1).coeffs == (-1, 2, 2)

    def test_bad_hint(self):
        with pytest.raises(BadRootHint):
            series_sqrt(q_series([4, 1]), 1)

    def test_square_back_seeded(self):
        rng = random.Random(23)
        for _ in range(50):
            r = random_q_series(rng, 10, unit_constant=True)
            s = r * r
            root = series_sqrt(s, r.coefficient(0))
            assert root * root == s

    def test_poly_ring_nonunit_root_hint(self):
        # the constant root alpha - beta is not a unit of the polynomial
        # ring, so the recursion must divide exactly instead of inverting
        ab = ALPHA - BETA
        r = TruncSeries(poly_ring, "t", [ab, BETA, ALPHA * BETA], order=4)
        s = r * r
        root = series_sqrt(s, ab)
        assert root == r
        assert root * root == s


class TestComposeRevert:
    def test_compose_is_substitution(self):
        outer = q_series([1, 1, 1], order=4)  # 1 + u + u^2
        inner = q_series([0, 1, 1], order=4)  # t + t^2
        got = series_compose(outer, inner)
        # 1 + (t + t^2) + (t + t^2)^2 = 1 + t + 2t^2 + 2t^3 + t^4
        assert got.coeffs == (1, 1, 2, 2, 1)

    def test_compose_requires_zero_inner_constant(self):
        with pytest.raises(NonzeroInnerConstant):
            series_compose(q_series([1, 1]), q_series([1, 1]))

    def test_compose_result_uses_inner_variable(self):
        outer = q_series([0, 1], var="u", order=3)
        inner = q_series([0, 2], var="t", order=3)
        assert series_compose(outer, inner).variable == "t"

    def test_revert_known(self):
        # the inverse of t - t^2 has Catalan coefficients
        s = q_series([0, 1, -1], order=4)
        assert series_revert(s).coeffs == (0, 1, 1, 2, 5)

    def test_revert_requires_valuation_one(self):
        with pytest.raises(ValuationMismatch):
            series_revert(q_series([1, 1]))
        with pytest.raises(ValuationMismatch):
            series_revert(TruncSeries(poly_ring, "t", [0, ALPHA, 1]))

    def test_revert_round_trip_seeded(self):
        rng = random.Random(37)
        ident = TruncSeries.identity(rational_ring, "t", 10)
        for _ in range(50):
            s = random_q_series(rng, 10, valuation_one=True)
            r = series_revert(s)
            assert series_compose(s, r) == ident
            assert series_compose(r, s) == ident


class TestSeriesFraction:
    def test_expand_geometric(self):
        f = SeriesFraction((1,), (1, -1))
        assert f.expand(rational_ring, "t", 4).coeffs == (1, 1, 1, 1, 1)

    def test_expand_pole(self):
        with pytest.raises(PoleAtOrigin):
            SeriesFraction((1,), (0, 1)).expand(rational_ring, "t", 3)

    def test_at_series(self):
        f = SeriesFraction((1,), (1, -1))  # 1/(1 - y)
        y = q_series([0, 1], order=3)  # y = t
        assert f.at_series(y).coeffs == (1, 1, 1, 1)

    def test_at_series_pole(self):
        f = SeriesFraction((1,), (0, 1))  # 1/y
        with pytest.raises(PoleAtOrigin):
            f.at_series(q_series([0, 1]))

    def test_horner_eval_empty(self):
        assert horner_eval((), q_series([0, 1])).coeffs == (0, 0)


class TestFunctionalEquation:
    def test_catalan_fixed_point(self):
        # y = t/(1 - y) generates shifted Catalan numbers
        phi = SeriesFraction((1,), (1, -1))
        y = solve_functional(phi, rational_ring, "t", 5)
        assert y.coeffs == (0, 1, 1, 2, 5, 14)

    def test_pole_at_origin(self):
        with pytest.raises(PoleAtOrigin):
            solve_functional(SeriesFraction((1,), (0, 1)), rational_ring, "t", 3)

    def test_lagrange_catalan(self):
        F = SeriesFraction((1,), (1, -1))
        phi = SeriesFraction((1,), (1, -1))
        assert lagrange_coeff(F, phi, 3, rational_ring) == Fraction(5)

    def test_lagrange_matches_fixed_point_seeded(self):
        rng = random.Random(51)
        for _ in range(20):
            num = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
            den = (Fraction(rng.choice([1, -1, 2])),) + tuple(
                Fraction(rng.randint(-3, 3)) for _ in range(2)
            )
            phi = SeriesFraction(num, den)
            F = SeriesFraction((1,), (1, -1))
            y = solve_functional(phi, rational_ring, "t", 8)
            target = SeriesFraction((1,), (1, -1)).at_series(y)
            for n in range(1, 9):
                assert lagrange_coeff(F, phi, n, rational_ring) == target.coefficient(n)

    def test_lagrange_polynomial_coefficients(self):
        # F = 1/(1 - y), phi = (beta + (alpha - beta) w y)/(1 - w y)
        F = SeriesFraction((1,), (1, -1))
        phi = SeriesFraction((BETA, (ALPHA - BETA) * W), (1, -W))
        got = lagrange_coeff(F, phi, 2, poly_ring)
        assert got == BETA * BETA + ALPHA * BETA * W

    def test_lagrange_needs_positive_n(self):
        F = SeriesFraction((1,), (1, -1))
        with pytest.raises(ValueError):
            lagrange_coeff(F, F, 0, rational_ring)
