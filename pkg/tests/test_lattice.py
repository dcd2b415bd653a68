"""Character sums, Fourier transform, dual integration, local Poisson."""

import random

import pytest

from motzeta import (CharFunction, CharSum, Lattice, Sublattice, L, ONE,
                     ZERO, fourier, fourier_invert, integrate_dual,
                     partial_integrate, poisson_both_sides)
from motzeta.lattice import NonComplementaryBases
from motzeta.verify import (random_char_function, random_sublattice,
                            random_unimodular)


class TestSublattice:
    def test_membership_basic(self):
        even = Sublattice(1, [[2]])
        assert even.contains((4,))
        assert not even.contains((3,))
        assert even.contains((0,))

    def test_zero_sublattice(self):
        zero = Sublattice.zero(2)
        assert zero.contains((0, 0))
        assert not zero.contains((1, 0))

    def test_rank_two_skew(self):
        sub = Sublattice(2, [[2, 0], [1, 3]])
        assert sub.contains((3, 3))
        assert sub.contains((2, 0))
        assert not sub.contains((1, 0))
        assert not sub.contains((0, 1))

    def test_redundant_generators(self):
        sub = Sublattice(2, [[1, 1], [2, 2], [-1, -1]])
        assert sub.contains((5, 5))
        assert not sub.contains((1, 0))


class TestFourier:
    def test_point_mass_gives_monomial(self):
        psi = CharFunction(2, {(3, -1): ONE})
        assert fourier(psi) == CharSum.ev((3, -1))

    def test_zero_function(self):
        psi = CharFunction(1, {})
        assert fourier(psi) == CharSum(1, {})

    def test_linearity(self):
        psi = CharFunction(2, {(0, 0): ONE, (1, 0): L})
        transform = fourier(psi)
        assert transform.coeff((0, 0)) == ONE
        assert transform.coeff((1, 0)) == L

    def test_monomial_multiplication(self):
        prod = CharSum.ev((1, 2)) * CharSum.ev((3, -5))
        assert prod == CharSum.ev((4, -3))


class TestIntegrateDual:
    def test_nonmember_dies(self):
        assert integrate_dual(CharSum.ev((1,)), Sublattice(1, [[3]])) == ZERO

    def test_origin_survives(self):
        assert integrate_dual(CharSum.ev((0,)), Sublattice.zero(1)) == ONE

    def test_even_sublattice(self):
        s = CharSum(1, {(0,): ONE, (1,): L, (2,): L * L})
        assert integrate_dual(s, Sublattice(1, [[2]])) == ONE + L * L


class TestPartialIntegrate:
    B_PRIME = [[1, 0]]
    B_SECOND = [[0, 1]]

    def test_zero_first_component_kept(self):
        s = CharSum.ev((0, 3))
        out = partial_integrate(s, self.B_PRIME, self.B_SECOND,
                                Sublattice.zero(1))
        assert out == CharSum.ev((3,))

    def test_nonzero_first_component_killed(self):
        s = CharSum.ev((1, 3))
        out = partial_integrate(s, self.B_PRIME, self.B_SECOND,
                                Sublattice.zero(1))
        assert out == CharSum(1, {})

    def test_even_sublattice_filter(self):
        s = CharSum.ev((2, 5)) + CharSum.ev((1, 1))
        out = partial_integrate(s, self.B_PRIME, self.B_SECOND,
                                Sublattice(1, [[2]]))
        assert out == CharSum.ev((5,))

    def test_non_complementary_bases_error(self):
        with pytest.raises(NonComplementaryBases):
            partial_integrate(CharSum.ev((0, 0)), [[1, 0]], [[2, 0]],
                              Sublattice.zero(1))

    def test_composition_law(self):
        rng = random.Random(5)
        for _ in range(150):
            rank = rng.randint(2, 3)
            basis = random_unimodular(rng, rank)
            k = rng.randint(1, rank - 1)
            cols = [[basis[i][j] for i in range(rank)] for j in range(rank)]
            b_prime, b_second = cols[:k], cols[k:]
            gens = [[rng.randint(-2, 2) for _ in range(k)]
                    for _ in range(rng.randint(0, k))]
            gens = [g for g in gens if any(g)]
            sub_prime = Sublattice(k, gens)
            ambient = []
            for g in gens:
                vec = [0] * rank
                for coef, col in zip(g, b_prime):
                    vec = [x + coef * y for x, y in zip(vec, col)]
                ambient.append(vec)
            s = CharSum(rank,
                        {tuple(rng.randint(-4, 4) for _ in range(rank)):
                         L ** rng.randint(0, 2) for _ in range(5)})
            kept = partial_integrate(s, b_prime, b_second, sub_prime)
            lhs = integrate_dual(kept, Sublattice.zero(rank - k))
            rhs = integrate_dual(s, Sublattice(rank, ambient))
            assert lhs == rhs


class TestFourierInversion:
    def test_point_mass_on_support(self):
        psi = CharFunction(2, {(2, 1): ONE})
        assert fourier_invert(fourier(psi), (2, 1)) == ONE

    def test_point_mass_off_support(self):
        psi = CharFunction(2, {(2, 1): ONE})
        assert fourier_invert(fourier(psi), (0, 0)) == ZERO

    def test_weighted_two_points(self):
        psi = CharFunction(2, {(0, 0): ONE, (1, 0): L})
        assert fourier_invert(fourier(psi), (1, 0)) == L

    def test_randomized_inversion(self):
        rng = random.Random(17)
        for _ in range(300):
            rank = rng.randint(1, 3)
            psi = random_char_function(rng, rank)
            transform = fourier(psi)
            x = rng.choice(sorted(psi.support)) if rng.random() < 0.5 \
                else tuple(rng.randint(-6, 6) for _ in range(rank))
            assert fourier_invert(transform, x) == psi.value(x)


class TestPoisson:
    def test_even_shift_example(self):
        psi = CharFunction(1, {(0,): ONE, (1,): L})
        left, right = poisson_both_sides(psi, Sublattice(1, [[2]]), (0,))
        assert left == right == ONE

    def test_full_group_total_mass(self):
        psi = CharFunction(2, {(0, 0): ONE, (1, 3): L, (2, -1): L + 1})
        left, right = poisson_both_sides(psi, Sublattice.full(2), (0, 0))
        total = ONE + L + (L + 1)
        assert left == right == total

    def test_trivial_subgroup_is_inversion(self):
        psi = CharFunction(2, {(0, 0): ONE, (1, 3): L})
        left, right = poisson_both_sides(psi, Sublattice.zero(2), (1, 3))
        assert left == right == L

    def test_randomized_identity(self):
        rng = random.Random(99)
        for _ in range(300):
            rank = rng.randint(1, 3)
            psi = random_char_function(rng, rank)
            sub = random_sublattice(rng, rank)
            g = tuple(rng.randint(-4, 4) for _ in range(rank))
            left, right = poisson_both_sides(psi, sub, g)
            assert left == right


class TestAmbientStability:
    def test_zero_extension_preserves_integrals(self):
        rng = random.Random(31)
        for _ in range(200):
            rank = rng.randint(1, 2)
            extra = rng.randint(1, 2)
            psi = random_char_function(rng, rank)
            sub = random_sublattice(rng, rank)
            s = fourier(psi)
            assert integrate_dual(s, sub) == integrate_dual(
                s.zero_extend(extra), sub.zero_extend(extra))


class TestTorsionQuotient:
    def test_relations_fold_exponents(self):
        quotient = Lattice(2, relations=[[0, 2]])
        s = CharSum(2, {(0, 3): ONE}, lattice=quotient)
        t = CharSum(2, {(0, 1): ONE}, lattice=quotient)
        assert s == t
        prod = CharSum.ev((0, 1), lattice=quotient) * \
            CharSum.ev((0, 1), lattice=quotient)
        assert prod.coeff((0, 2)) == ONE
        assert prod.coeff((0, 0)) == ONE


class TestCharSumDimension:
    def test_character_part_carries_no_weight(self):
        s = CharSum(2, {(5, -7): L ** 2, (0, 0): ONE})
        assert s.virtual_dim() == 2
        assert CharSum(2, {}).virtual_dim() is not None
