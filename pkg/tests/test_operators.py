"""Operator representations, the Rota-Baxter residual and canonicalization."""

import random
from fractions import Fraction

import pytest

from rbx import linalg
from rbx.operators import (
    AnalyticOp,
    Inconsistent,
    NoRationalBasePoint,
    NotMultiplierType,
    TruncOp,
    TruncationTooSmall,
    ZeroMultiplier,
    derived_multiplier,
    first_rb_failure,
    is_rb_upto,
    odd_halving_example,
    operator_to_point,
    rb_residual,
)
from rbx.poly import Poly


def random_poly(rng, max_deg, span=4):
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(deg)]
    lead = 0
    while lead == 0:
        lead = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    return Poly(tuple(coeffs) + (lead,))


def random_rat(rng, span=5):
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


class TestApply:
    def test_plain_integration_of_monomials(self):
        op = AnalyticOp(0, Poly.one())
        for n in range(5):
            assert op.apply(Poly.monomial(n)) == Poly.monomial(n + 1, Fraction(1, n + 1))

    def test_zero_argument(self):
        assert AnalyticOp(3, Poly((1, 2))).apply(Poly.zero()) == Poly.zero()

    def test_multiplier_then_integration(self):
        assert AnalyticOp(2, Poly.x()).apply(Poly.one()) == Poly((-2, 0, Fraction(1, 2)))

    def test_images_vanish_at_base_point(self):
        rng = random.Random(5)
        for _ in range(10):
            op = AnalyticOp(random_rat(rng), random_poly(rng, 4))
            f = random_poly(rng, 4)
            assert op.apply(f)(op.a) == 0

    def test_zero_multiplier_rejected(self):
        with pytest.raises(ZeroMultiplier):
            AnalyticOp(0, Poly.zero())


class TestTruncation:
    def test_first_two_images(self):
        trunc = AnalyticOp(0, Poly.one()).truncate(1)
        assert trunc.images == (Poly.x(), Poly.monomial(2, Fraction(1, 2)))

    def test_single_image(self):
        assert AnalyticOp(1, Poly.one()).truncate(0).images == (Poly((-1, 1)),)

    def test_apply_beyond_truncation(self):
        trunc = AnalyticOp(0, Poly.one()).truncate(2)
        with pytest.raises(TruncationTooSmall):
            trunc.apply(Poly.monomial(3))

    def test_composition_with_extra_multiplier(self):
        # applying (a, r) to r2*f agrees with applying (a, r*r2) to f
        rng = random.Random(11)
        for _ in range(10):
            a = random_rat(rng)
            r1, r2 = random_poly(rng, 3), random_poly(rng, 3)
            f = random_poly(rng, 3)
            assert AnalyticOp(a, r1).apply(r2 * f) == AnalyticOp(a, r1 * r2).apply(f)


class TestResidual:
    def test_analytic_operators_satisfy_identity(self):
        trunc = AnalyticOp(Fraction(1, 2), Poly((1, 2))).truncate(12)
        assert is_rb_upto(trunc, 0, 5)

    def test_odd_halving_is_weight_zero(self):
        assert is_rb_upto(odd_halving_example(12), 0, 5)

    def test_identity_operator_fails_at_origin(self):
        ident = TruncOp(tuple(Poly.monomial(n) for n in range(6)))
        assert rb_residual(ident, 0, 0, 0) == Poly.constant(-1)
        assert first_rb_failure(ident, 0, 2) == (0, 0)

    def test_zero_operator_passes(self):
        zero = TruncOp(tuple(Poly.zero() for _ in range(6)))
        assert is_rb_upto(zero, 0, 2)

    def test_nonzero_weight_breaks_plain_integration(self):
        trunc = AnalyticOp(0, Poly.one()).truncate(8)
        assert not is_rb_upto(trunc, 1, 2)

    def test_truncation_guard(self):
        trunc = AnalyticOp(0, Poly.one()).truncate(3)
        with pytest.raises(TruncationTooSmall):
            rb_residual(trunc, 0, 2, 2)


class TestOddHalving:
    def test_quoted_images(self):
        trunc = odd_halving_example(4)
        assert trunc.images[0] == Poly.zero()
        assert trunc.images[1] == Poly.monomial(2, Fraction(1, 2))
        assert trunc.images[3] == Poly.monomial(4, Fraction(1, 4))

    def test_not_multiplier_type(self):
        with pytest.raises(NotMultiplierType):
            derived_multiplier(odd_halving_example(4))


class TestDerivedMultiplier:
    def test_linear_multiplier(self):
        assert derived_multiplier(AnalyticOp(2, Poly.x()).truncate(4)) == Poly.x()

    def test_constant_multiplier(self):
        assert derived_multiplier(AnalyticOp(0, Poly.one()).truncate(3)) == Poly.one()

    def test_zero_operator(self):
        zero = TruncOp(tuple(Poly.zero() for _ in range(4)))
        with pytest.raises(ZeroMultiplier):
            derived_multiplier(zero)

    def test_needs_two_images(self):
        with pytest.raises(TruncationTooSmall):
            derived_multiplier(TruncOp((Poly.x(),)))


class TestCanonicalization:
    def test_root_filtering(self):
        # images[0] = x^2/2 - 2 has roots +-2; only +2 kills x^3/3 - 8/3
        point = operator_to_point(AnalyticOp(2, Poly.x()).truncate(4))
        assert point == AnalyticOp(2, Poly.x())

    def test_round_trip_linear(self):
        op = AnalyticOp(0, Poly((1, 1)))
        assert operator_to_point(op.truncate(3)) == op

    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(20):
            op = AnalyticOp(random_rat(rng), random_poly(rng, 5))
            assert operator_to_point(op.truncate(op.r.degree + 2)) == op

    def test_irrational_base_point(self):
        # multiplier-type rows (r = x) whose first image x^2/2 - 1 vanishes
        # only at the irrational points +-sqrt(2)
        images = (
            Poly.monomial(2, Fraction(1, 2)) - Poly.one(),
            Poly.monomial(3, Fraction(1, 3)),
            Poly.monomial(4, Fraction(1, 4)),
        )
        with pytest.raises(NoRationalBasePoint):
            operator_to_point(TruncOp(images))

    def test_inconsistent_high_image(self):
        op = AnalyticOp(1, Poly.one())
        images = list(op.truncate(3).images)
        images[3] = images[3] + Poly.constant(5)
        with pytest.raises(Inconsistent):
            operator_to_point(TruncOp(tuple(images)))

    def test_json_round_trip(self):
        op = AnalyticOp(Fraction(-5, 2), Poly((1, 0, Fraction(2, 3))))
        assert AnalyticOp.from_json(op.to_json()) == op
        trunc = op.truncate(4)
        assert TruncOp.from_json(trunc.to_json()) == trunc


class TestEvaluationBasis:
    def test_reciprocal_sum_determinants_nonzero(self):
        for k in range(11):
            mat = [[Fraction(1, i + j + 1) for i in range(k + 1)] for j in range(k + 1)]
            assert linalg.det(mat) != 0
