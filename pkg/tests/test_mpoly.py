"""Sparse multivariate arithmetic, substitution and univariate specialisation."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rbx.mpoly import DegreeCapExceeded, MPoly, UnassignedVariable, set_degree_cap
from rbx.poly import Poly

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def mpolys(draw, max_vars=3, max_exp=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        nvars = draw(st.integers(0, max_vars))
        key = tuple(
            (v, draw(st.integers(1, max_exp)))
            for v in sorted(draw(st.sets(st.integers(0, max_vars), max_size=nvars)))
        )
        terms[key] = draw(rationals)
    return MPoly(terms)


c0 = MPoly.variable(0)
c1 = MPoly.variable(1)
c2 = MPoly.variable(2)


class TestRingOps:
    def test_add_cancellation(self):
        assert (c0 + (-c0)).is_zero()

    def test_mul_monomials(self):
        assert c0 * c1 == MPoly({((0, 1), (1, 1)): 1})

    def test_scale(self):
        p = MPoly.variable(0, 2) + c1
        assert p * 2 == MPoly({((0, 2),): 2, ((1, 1),): 2})

    def test_zero_coefficients_dropped(self):
        assert MPoly({((0, 1),): 0}).is_zero()

    @given(mpolys(), mpolys(), mpolys())
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p


class TestSubstitution:
    def test_eliminating_substitution(self):
        # c1 := -c0^2/2 into c0^2 + 2*c1
        target = MPoly.variable(0, 2) + c1 * 2
        repl = MPoly.variable(0, 2) * Fraction(-1, 2)
        assert target.subst(1, repl).is_zero()

    def test_absent_variable_unchanged(self):
        p = MPoly.variable(0, 2) + c2
        assert p.subst(1, MPoly.constant(5)) == p

    def test_substitute_zero(self):
        p = MPoly.variable(1, 2) + c0
        assert p.subst(1, MPoly.zero()) == c0

    @given(mpolys(), st.integers(0, 3))
    def test_substituting_variable_by_itself(self, p, var):
        assert p.subst(var, MPoly.variable(var)) == p

    def test_degree_cap(self):
        set_degree_cap(8)
        try:
            with pytest.raises(DegreeCapExceeded):
                MPoly.variable(0, 5) * MPoly.variable(0, 5)
        finally:
            set_degree_cap(64)


class TestUnivariateSpecialisation:
    def test_single_variable(self):
        assert c0.eval_univariate({0: Poly((0, -1))}) == Poly((0, -1))

    def test_curve_identity(self):
        # 9*c1^2 + 8*c0^3 with c0 -> -a^2/2, c1 -> -a^3/3 expands to a^6 - a^6
        p = MPoly.variable(1, 2) * 9 + MPoly.variable(0, 3) * 8
        assign = {
            0: Poly.monomial(2, Fraction(-1, 2)),
            1: Poly.monomial(3, Fraction(-1, 3)),
        }
        assert p.eval_univariate(assign).is_zero()

    def test_constant(self):
        assert MPoly.constant(1).eval_univariate({}) == Poly.one()

    def test_unassigned_variable(self):
        with pytest.raises(UnassignedVariable):
            (c0 + c1).eval_univariate({0: Poly.one()})

    @given(mpolys(), mpolys())
    def test_specialisation_is_a_homomorphism(self, p, q):
        assign = {v: Poly((v, 1)) for v in p.variables() | q.variables()}
        assert (p + q).eval_univariate(assign) == p.eval_univariate(
            assign
        ) + q.eval_univariate(assign)
        assert (p * q).eval_univariate(assign) == p.eval_univariate(
            assign
        ) * q.eval_univariate(assign)


class TestTextForm:
    def test_graded_lex_order(self):
        p = MPoly.variable(0, 2) + c1 * 2
        assert p.to_text() == "c0^2 + 2*c1"

    def test_negative_leading_coefficient(self):
        assert (MPoly.variable(0, 2) * Fraction(-1, 2)).to_text() == "-1/2*c0^2"

    def test_zero(self):
        assert MPoly.zero().to_text() == "0"

    def test_mixed_terms(self):
        p = c0 * c1 + MPoly.constant(3) - MPoly.variable(2)
        assert p.to_text() == "c0*c1 - c2 + 3"
