"""Cone series, residues, restriction and shifted-cone identities,
convolution special values."""

from fractions import Fraction

import pytest

from motzeta import (ConeFan, ExactSequence, L, ONE, char_restrict_check,
                     chi_value, convolution_f1, l_series_direction,
                     residue_check, shifted_cone_check)
from motzeta.conezeta import (ConeFanError, HypothesisViolation,
                              InexactSequence, NonPositiveDirection)
from motzeta.verify import p2_convolution_instance, shipped_cone_instances


@pytest.fixture(scope="module")
def cones():
    quadrant, subdivided, half_line = shipped_cone_instances()
    return {"quadrant": quadrant, "subdivided": subdivided,
            "half": half_line}


class TestConeFanValidation:
    def test_rejects_imprimitive_ray(self):
        with pytest.raises(ConeFanError):
            ConeFan(2, [[2, 0]], [[0]])

    def test_rejects_non_unimodular(self):
        with pytest.raises(ConeFanError):
            ConeFan(2, [[1, 0], [1, 2]], [[0, 1]])

    def test_rejects_overlapping_interiors(self):
        with pytest.raises(ConeFanError):
            ConeFan(2, [[1, 0], [0, 1], [1, 1]], [[0, 1], [0, 2]])

    def test_lower_dimensional_cone_allowed(self):
        cf = ConeFan(3, [[1, 1, 1]], [[0]])
        assert cf.dim == 1
        assert cf.contains((2, 2, 2))
        assert not cf.contains((1, 0, 0))


class TestLSeries:
    def test_half_line(self, cones):
        series = l_series_direction(cones["half"], (1,))
        assert series.expand(6) == [1] * 7

    def test_quadrant_counts_by_level(self, cones):
        series = l_series_direction(cones["quadrant"], (1, 1))
        assert series.expand(6) == [k + 1 for k in range(7)]

    def test_subdivided_summands(self, cones):
        series = l_series_direction(cones["subdivided"], (1, 1))
        assert sorted(series.summands) == [(), (1,), (1, 2), (2,), (2, 3),
                                           (3,)]

    @pytest.mark.parametrize("name,lam", [("quadrant", (1, 1)),
                                          ("subdivided", (1, 1)),
                                          ("subdivided", (2, 1)),
                                          ("half", (2,))])
    def test_expansion_matches_enumeration(self, cones, name, lam):
        cf = cones[name]
        series = l_series_direction(cf, lam).expand(40)
        brute = [0] * 41
        for _point, level in cf.lattice_points_by_level(lam, 40):
            brute[level] += 1
        assert series == brute

    def test_nonpositive_direction_rejected(self, cones):
        with pytest.raises(NonPositiveDirection):
            l_series_direction(cones["quadrant"], (1, 0))


class TestChiAndResidue:
    def test_quadrant_chi(self, cones):
        assert chi_value(cones["quadrant"], (1, 1)) == 1

    def test_subdivided_chi(self, cones):
        assert chi_value(cones["subdivided"], (1, 1)) == Fraction(2, 3)

    def test_half_line_chi(self, cones):
        assert chi_value(cones["half"], (3,)) == Fraction(1, 3)

    def test_quadrant_residue(self, cones):
        data = residue_check(cones["quadrant"], (1, 1))
        assert (data.a, data.special_value) == (1, 1)

    def test_subdivided_residue(self, cones):
        data = residue_check(cones["subdivided"], (1, 1))
        assert data.a == 6
        assert data.special_value == 24
        assert data.a ** data.rank * data.chi == 24

    def test_half_line_residue(self, cones):
        data = residue_check(cones["half"], (1,))
        assert (data.a, data.special_value) == (1, 1)

    def test_integrality_guard(self):
        from motzeta.conezeta import ResidueData
        with pytest.raises(AssertionError):
            ResidueData(2, Fraction(1, 3), 1)


class TestCharRestriction:
    def test_trivial_quotient(self):
        # Full sub-lattice: the quotient is zero and nothing is filtered.
        seq = ExactSequence(i_cols=[(1, 0), (0, 1)], j_rows=[])
        orthant = ConeFan(2, [[1, 0], [0, 1]], [[0, 1]])
        assert char_restrict_check(seq, orthant, (1, 1), 9)

    def test_zero_sublattice(self):
        # Trivial sub-lattice: only the origin survives.
        seq = ExactSequence(i_cols=[], j_rows=[(1, 0), (0, 1)])
        orthant = ConeFan(2, [[1, 0], [0, 1]], [[0, 1]])
        assert char_restrict_check(seq, orthant, (1, 1), 9)

    def test_projective_plane_diagonal(self):
        seq, _cf = p2_convolution_instance()
        octant = ConeFan(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 2]])
        assert char_restrict_check(seq, octant, (1, 1, 1), 9)
        # Directly: the surviving points are the diagonal ones (k, k, k).
        image = seq.image_sublattice()
        diag = [p for p, lvl in octant.lattice_points_by_level((1, 1, 1), 9)
                if image.contains(p)]
        assert sorted(diag) == [(k, k, k) for k in range(4)]

    def test_inexact_sequence_rejected(self):
        with pytest.raises(InexactSequence):
            ExactSequence(i_cols=[(2, 0)], j_rows=[(0, 1)])
        with pytest.raises(InexactSequence):
            ExactSequence(i_cols=[(1, 1)], j_rows=[(1, 1)])


class TestShiftedCone:
    def test_zero_shift_reduces_to_plain_series(self, cones):
        assert shifted_cone_check(cones["quadrant"], (0, 0), 12)
        assert shifted_cone_check(cones["subdivided"], (0, 0), 12)

    def test_rank_one_shift(self, cones):
        assert shifted_cone_check(cones["half"], (2,), 20)

    def test_rank_two_subdivided(self, cones):
        assert shifted_cone_check(cones["subdivided"], (1, 1), 15)
        assert shifted_cone_check(cones["subdivided"], (2, 3), 15)

    def test_shift_must_lie_in_basis_cone(self, cones):
        with pytest.raises(ValueError):
            shifted_cone_check(cones["quadrant"], (-1, 0), 10)


class TestConvolution:
    def test_zero_weight(self):
        seq, cf = p2_convolution_instance()
        result = convolution_f1({}, seq, cf, (1, 1, 1), 12)
        assert result.series.terms == {}
        assert result.value_series_route == {}
        assert result.value_volume_route == {}
        assert result.routes_agree()

    def test_unit_weight_gives_diagonal_series(self):
        seq, cf = p2_convolution_instance()
        result = convolution_f1({(0, 0, 0): ONE}, seq, cf, (1, 1, 1), 12)
        # The sub-lattice cone is the diagonal ray: one point per level 3k.
        from motzeta import ZERO
        for level in range(13):
            coeff = result.series.coefficient((level,))
            assert coeff == (ONE if level % 3 == 0 else ZERO)
        assert result.value_series_route == {0: Fraction(1)}
        assert result.routes_agree()

    def test_shifted_weight_two_routes(self):
        seq, cf = p2_convolution_instance()
        weight = {(0, 0, 0): ONE, (1, 0, 0): L}
        result = convolution_f1(weight, seq, cf, (1, 1, 1), 12)
        assert result.value_volume_route == {0: Fraction(1), 1: Fraction(1)}
        assert result.routes_agree()
        assert result.residue.a == 3
        assert result.residue.chi == Fraction(1, 3)
        assert result.residue.rank == 1

    def test_hypothesis_violation(self):
        # Quotient functionals meeting the dual of the basis cone: the
        # splitting Z^2 = Z x Z with the coordinate quotient.
        seq = ExactSequence(i_cols=[(1, 0)], j_rows=[(0, 1)])
        cf = ConeFan(2, [[1, 0]], [[0]])
        with pytest.raises(HypothesisViolation):
            convolution_f1({(0, 0): ONE}, seq, cf, (1, 1), 8)


class TestPoleOrder:
    def test_bounded_by_dimension(self, cones):
        for name, lam in (("quadrant", (1, 1)), ("subdivided", (1, 1)),
                          ("half", (1,))):
            cf = cones[name]
            series = l_series_direction(cf, lam)
            assert series.pole_order() <= cf.dim
            assert series.pole_order() == cf.dim  # the fan is full in its span
