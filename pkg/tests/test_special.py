"""Trinomial factors, term multiplicity, and the exact counting bound."""

import pytest

from lucasaps.core import Kind, degeneracy_order, new_params
from lucasaps.special import (
    TrinomialShape,
    TrinomialSpec,
    companion_candidates_complex,
    from_subtraction_convention,
    mult_independence_check,
    multiplicity,
    multiplicity_with_initials,
    quad_factors,
    sunit_constant,
    unit_equation_solution_bound,
)


class TestQuadFactors:
    def test_known_factorizations(self):
        assert quad_factors(TrinomialSpec(TrinomialShape.MINUS_TWO_CONSTANT, 3, 1)) == [(1, 2)]
        assert quad_factors(TrinomialSpec(TrinomialShape.MINUS_TWO_CONSTANT, 3, 2)) == [(2, 2)]
        factors = quad_factors(TrinomialSpec(TrinomialShape.MINUS_TWO_CONSTANT, 4, 2))
        assert (0, 2) in factors

    def test_exponent_constraints(self):
        with pytest.raises(ValueError):
            TrinomialSpec(TrinomialShape.UNIT_CONSTANT, 2, 2)
        with pytest.raises(ValueError):
            quad_factors(TrinomialSpec(TrinomialShape.UNIT_CONSTANT, 80, 3))

    def test_exhaustive_negative_discriminant_scan(self):
        # among all X^a + X^b - 2 with a <= 24, the only quadratic factor
        # with negative discriminant surviving pair validation is X^2+X+2
        survivors = set()
        for a in range(2, 25):
            for b in range(1, a):
                spec = TrinomialSpec(TrinomialShape.MINUS_TWO_CONSTANT, a, b)
                for p, q in quad_factors(spec):
                    if p * p - 4 * q >= 0:
                        continue
                    if -p == 0 or -q == 0 or degeneracy_order(-p, -q) is not None:
                        continue
                    survivors.add((p, q))
        assert survivors == {(1, 2)}

    def test_root_modulus_bound_empirically(self):
        # every root of the three shapes has modulus at most 2, which is
        # what confines the (p, q) search box
        import numpy as np

        for shape in TrinomialShape:
            for a in range(2, 25, 3):
                for b in range(1, a, 2):
                    spec = TrinomialSpec(shape, a, b)
                    roots = np.roots(list(reversed(spec.coefficients())))
                    assert max(abs(r) for r in roots) <= 2.0 + 1e-9


class TestComplexCandidates:
    def test_exactly_one_pair(self):
        assert [(p.A, p.B) for p in companion_candidates_complex()] == [(-1, -2)]

    def test_rejection_reasons(self):
        # X^2+2X+2 maps to (-2, -2), degenerate of order 4
        assert degeneracy_order(-2, -2) == 4
        # X^2+2 maps to (0, -2), a zero coefficient
        assert 0 * -2 == 0


class TestMultiplicity:
    def test_subtraction_convention_exceptional_sets(self):
        A, B = from_subtraction_convention(1, 2)
        assert (A, B) == (1, -2)
        rep = multiplicity_with_initials(A, B, 1, 1, 20)
        assert rep.indices_of_abs(1) == (0, 1, 2, 4, 12)
        rep2 = multiplicity_with_initials(A, B, 1, -1, 20)
        assert rep2.indices_of_abs(1) == (0, 1, 3, 11)

    def test_jacobsthal_window(self):
        rep = multiplicity(new_params(1, 2), Kind.FIRST, 50)
        assert rep.max_multiplicity == 2
        assert rep.value_to_indices[1] == (1, 2)

    def test_at_most_three_on_grid_except_known_counterexample(self):
        # The bound 3 fails at exactly one spot: (-1, -2) first kind attains
        # the value -1 at the four indices 2, 3, 5, 13.  That sequence is
        # the (1, 2)/(1, -1)-initial subtraction-convention sequence in
        # disguise, and the alternating-sign twist that relates them merges
        # the +1 and -1 solution classes of its 4-element exceptional set
        # {0, 1, 3, 11} into a single value.  Everywhere else the bound
        # holds on the whole grid.
        for A in range(-10, 11):
            for B in range(-10, 11):
                if not A or not B or degeneracy_order(A, B) is not None:
                    continue
                params = new_params(A, B)
                for kind in Kind:
                    rep = multiplicity(params, kind, 300)
                    if (A, B, kind) == (-1, -2, Kind.FIRST):
                        assert rep.max_multiplicity == 4
                        assert rep.value_to_indices[-1] == (2, 3, 5, 13)
                    else:
                        assert rep.max_multiplicity <= 3, (A, B, kind)


class TestIndependence:
    def test_examples(self):
        assert mult_independence_check(new_params(-1, -2))
        assert mult_independence_check(new_params(1, 1))

    def test_all_small_pairs(self):
        for A in range(-6, 7):
            for B in range(-6, 7):
                if not A or not B or degeneracy_order(A, B) is not None:
                    continue
                assert mult_independence_check(new_params(A, B), bound=8), (A, B)


class TestSUnitConstant:
    def test_exact_value(self):
        bound = sunit_constant()
        assert bound.value == 2**7776 + 3 * 2**2336 + 18 * 2**999 + 39

    def test_component_bounds(self):
        assert unit_equation_solution_bound(5, 2) == 2**7776
        assert unit_equation_solution_bound(3, 2) == 2**2336
        assert unit_equation_solution_bound(2, 2) == 2**999
        # dominant term uses b = max(5+1, 2) = 6
        assert 35 * 6**3 + 6 * 6**2 == 7776

    def test_decimal_rendering(self):
        bound = sunit_constant()
        assert bound.digit_count == 2341
        assert bound.exponent10 == 2340
        assert bound.leading_digits == bound.decimal_string()[:3]
        assert bound.value < 645 * 10**2338  # stated 6.45e2340 ceiling
