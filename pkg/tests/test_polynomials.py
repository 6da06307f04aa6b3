from fractions import Fraction

import pytest

from hyperfib.polynomials import (
    AffinePoint,
    BiPoly,
    Line,
    LineContainedInDivisor,
    UniPoly,
    contact_order,
    discriminant_in_x,
    factor_over_rationals,
    multiplicity_at,
    rational_roots,
    resultant_in_x,
    square_free_decompose,
    sylvester_resultant_in_x,
    unipoly_gcd,
)

X = BiPoly.x()
T = BiPoly.t()


def up(*coeffs):
    """UniPoly from high-to-low coefficients, matching how one writes them."""
    return UniPoly(reversed(coeffs))


class TestUniPoly:
    def test_degree_and_zero_sentinel(self):
        assert UniPoly.zero().degree == -1
        assert UniPoly.const(5).degree == 0
        assert up(1, 0, 0).degree == 2

    def test_trailing_zeros_stripped(self):
        assert UniPoly((1, 2, 0, 0)) == UniPoly((1, 2))

    def test_arithmetic_roundtrip(self):
        p = up(1, -3, 2)  # x^2 - 3x + 2 = (x-1)(x-2)
        q = UniPoly.from_roots([1, 2])
        assert p == q
        assert (p * up(1, 1)).divmod(up(1, 1)) == (p, UniPoly.zero())

    def test_shift(self):
        p = up(1, 0, 0)  # x^2
        assert p.shift(1) == up(1, 2, 1)  # (x+1)^2

    def test_root_multiplicity(self):
        p = UniPoly.from_roots([2, 2, 2, 5])
        assert p.root_multiplicity(2) == 3
        assert p.root_multiplicity(5) == 1
        assert p.root_multiplicity(0) == 0

    def test_gcd(self):
        a = UniPoly.from_roots([1, 2, 3])
        b = UniPoly.from_roots([2, 3, 4])
        assert unipoly_gcd(a, b) == UniPoly.from_roots([2, 3])


class TestBiPoly:
    def test_construction_and_eval(self):
        h = X**2 - T**3
        assert h.eval(2, 1) == 3
        assert h.deg_x == 2 and h.deg_t == 3

    def test_restrictions(self):
        h = (X - 1) * (X + T)
        assert h.restrict_t(0) == up(1, -1, 0)  # x(x-1)
        assert h.restrict_x(2) == up(1, 2)  # (2-1)(2+t) = t + 2
        assert h.restrict_x(1) == UniPoly.zero()

    def test_shift_recentering(self):
        h = (X - 3) ** 2 + T**2
        assert h.shift(3, 0) == X**2 + T**2

    def test_order_at_origin(self):
        assert (X**2 - T**3).order_at_origin() == 2
        assert ((X + T) ** 4).order_at_origin() == 4
        assert (BiPoly.const(1) + X).order_at_origin() == 0

    def test_flip_x(self):
        h = X**3 + T  # degree 3, flip into degree-4 frame
        flipped = h.flip_x(4)
        assert flipped == X + T * X**4

    def test_blowup_charts(self):
        h = X**2 - T**3  # cusp at origin, order 2
        m = h.order_at_origin()
        chart_s = h.blowup_chart_s(m)  # t = x*v: 1 - x*v^3 in vars (x, v)
        assert chart_s == BiPoly.const(1) - X * T**3
        chart_t = h.blowup_chart_t(m)  # x = w*t: w^2 - t in vars (w, t)
        assert chart_t == X**2 - T

    def test_canonical_term_order(self):
        h = X**2 + X * T + T**2
        keys = [k for k, _ in h.sorted_terms()]
        assert keys == [(2, 0), (1, 1), (0, 2)]

    def test_format_deterministic(self):
        h = -(X**2) + 3 * T - BiPoly.const(1)
        assert h.format() == "-1 - x^2 + 3*t"


class TestMultiplicityAndContact:
    def test_cusp_origin(self):
        assert multiplicity_at(X**2 - T**3, AffinePoint.of(0, 0)) == 2

    def test_order_three_cluster(self):
        # triple point of (x-4)^3 + t^6 at (4, 0)
        h = (X - 4) ** 3 + T**6
        assert multiplicity_at(h, AffinePoint.of(4, 0)) == 3

    def test_smooth_point(self):
        assert multiplicity_at(X + T, AffinePoint.of(0, 0)) == 1

    def test_nonvanishing(self):
        assert multiplicity_at(X + T, AffinePoint.of(1, 1)) == 0

    def test_contact_tangency(self):
        h = (X - 5) ** 2 + T
        assert contact_order(h, AffinePoint.of(5, 0), Line.fiber(0)) == 2

    def test_contact_transverse(self):
        assert contact_order(X + T, AffinePoint.of(0, 0), Line.fiber(0)) == 1

    def test_contact_on_exceptional_axis(self):
        # chart-t strict transform of the cusp: w^2 - t; exceptional axis t = 0
        strict = X**2 - T
        assert contact_order(strict, AffinePoint.of(0, 0), Line.fiber(0)) == 2

    def test_line_in_divisor(self):
        h = T * (X + 1)
        with pytest.raises(LineContainedInDivisor):
            contact_order(h, AffinePoint.of(-1, 0), Line.fiber(0))

    def test_multiplicity_bounded_by_total_degree(self):
        h = (X + T) ** 2 * (X - T)
        m = multiplicity_at(h, AffinePoint.of(0, 0))
        assert m == 3 <= h.deg_x + h.deg_t


class TestSquareFree:
    def test_spec_cases(self):
        u = (up(1, 0, -1)) ** 2 * up(1, -2)  # (x^2-1)^2 (x-2)
        dec = square_free_decompose(u)
        assert dec == [(up(1, -2), 1), (up(1, 0, -1), 2)]

    def test_mixed_multiplicities(self):
        u = UniPoly.from_roots([0, 1, 1, 1])
        assert square_free_decompose(u) == [(up(1, 0), 1), (up(1, -1), 3)]

    def test_constant(self):
        assert square_free_decompose(UniPoly.const(5)) == []

    def test_reexpansion(self):
        u = UniPoly.from_roots([0, 0, 2, 2, 2, -1]).scale(Fraction(3, 7))
        prod = UniPoly.const(1)
        for f, m in square_free_decompose(u):
            prod = prod * f**m
        assert prod == u.monic()


class TestRationalRoots:
    def test_cubic(self):
        assert rational_roots(UniPoly.from_roots([-1, 0, 1])) == {-1, 0, 1}

    def test_fractional_root(self):
        assert rational_roots(up(2, -3)) == {Fraction(3, 2)}

    def test_no_roots(self):
        assert rational_roots(up(1, 0, 1)) == set()

    def test_high_multiplicity(self):
        assert rational_roots(UniPoly.from_roots([5, 5, 5])) == {5}


class TestFactorization:
    def test_splits_completely(self):
        factors = factor_over_rationals(up(1, 0, -1, 0))  # x^3 - x
        assert factors == [
            (up(1, -1), 1),
            (up(1, 0), 1),
            (up(1, 1), 1),
        ]

    def test_irreducible_quadratic(self):
        assert factor_over_rationals(up(1, 0, 1)) == [(up(1, 0, 1), 1)]

    def test_cubic_split(self):
        assert factor_over_rationals(up(1, 0, 0, 1)) == [
            (up(1, 1), 1),
            (up(1, -1, 1), 1),
        ]

    def test_product_reconstruction(self):
        u = (up(1, 0, 1) * up(1, 1) ** 2 * up(2, -3)).scale(Fraction(1, 4))
        prod = UniPoly.const(u.lc)
        for f, m in factor_over_rationals(u):
            prod = prod * f**m
        assert prod == u

    def test_quartic_pair_of_quadratics(self):
        u = up(1, 0, 1) * up(1, 0, 2)  # needs real factorization, not just roots
        assert factor_over_rationals(u) == [(up(1, 0, 1), 1), (up(1, 0, 2), 1)]

    @pytest.mark.parametrize("deg", [2, 3, 4, 5, 6])
    def test_irreducibility_by_brute_force(self, deg):
        # x^deg - 2 is irreducible (Eisenstein); brute-force check degree <= 6:
        # an irreducible factor of degree <= deg/2 would show up in the list.
        u = up(1, *([0] * (deg - 1)), -2)
        factors = factor_over_rationals(u)
        assert factors == [(u, 1)]


class TestResultant:
    def small_cases(self):
        return [
            (X**2 - T, 2 * X),
            (X**2 - T, X - T),
            (X**3 + T, X**2 - T**2),
            ((X - 1) * (X + T), X**2 + T),
            (X**2 + X * T + 1, 3 * X + T**2),
            (X + T, X - T),
            (X**2 - 1, X**2 - 1 + T),
        ]

    def test_matches_sylvester_oracle(self):
        for f, g in self.small_cases():
            assert resultant_in_x(f, g) == sylvester_resultant_in_x(f, g), (f, g)

    def test_swap_antisymmetry(self):
        f, g = X**3 + T, X**2 - T**2
        sign = (-1) ** (f.deg_x * g.deg_x)
        assert resultant_in_x(f, g) == resultant_in_x(g, f).scale(sign)

    def test_common_factor_gives_zero(self):
        f = (X - T) * (X + 1)
        g = (X - T) * (X + 2)
        assert resultant_in_x(f, g).is_zero

    def test_constant_second_argument(self):
        f = X**2 + T
        assert resultant_in_x(f, BiPoly.const(3)) == UniPoly.const(9)


class TestDiscriminant:
    def test_double_root_locus(self):
        d = discriminant_in_x(X**2 - T)
        assert d.degree == 1
        assert rational_roots(d) == {0}

    def test_no_singular_fibers(self):
        d = discriminant_in_x(X**2 - 1)
        assert d.degree == 0 and not d.is_zero

    def test_zero_iff_square_factor(self):
        assert discriminant_in_x((X - T) ** 2 * (X + 1)).is_zero
        assert not discriminant_in_x((X - T) * (X + 1)).is_zero

    def test_constant_in_x_rejected(self):
        with pytest.raises(ValueError):
            discriminant_in_x(BiPoly.const(1) + T)

    def test_worked_example_has_root_at_zero(self):
        h = (
            (X + T)
            * ((X - 1) ** 2 + T)
            * ((X - 2) ** 2 + T**2)
            * ((X - 3 + T) ** 2 + T**3)
            * ((X - 3 - T) ** 2 + T**3)
            * ((X - 4) ** 3 + T**6)
        )
        d = discriminant_in_x(h)
        assert not d.is_zero
        assert d.eval(0) == 0
