"""Plethystic calculus, Euler products over the genus-0 curve,
configuration classes."""

import random

import pytest

from motzeta import (GradedMonomial, GradedSeries, LabeledPartition,
                     LocalFactor, PlethysticSeries, L, ONE, ZERO,
                     config_class, euler_product_genus0, plethystic_exp,
                     plethystic_log, torsor_twist)
from motzeta.euler import config_class_by_euler_product, _config_shape
from motzeta.lefschetz import LefschetzLaurent
from motzeta.verify import random_local_factor


def projective_space_class(k):
    return LefschetzLaurent({j: 1 for j in range(k + 1)})


def univariate(terms, trunc):
    return GradedSeries(1, 0, {GradedMonomial((e,), ()): c
                               for e, c in terms.items()}, trunc)


class TestPlethysticExp:
    def test_single_geometric_factor(self):
        g = PlethysticSeries(1, 0, {(0, (), (1,)): 1}, 6)
        out = plethystic_exp(g)
        assert out == univariate({e: ONE for e in range(7)}, 6)

    def test_kapranov_zeta_of_the_line(self):
        g = PlethysticSeries(1, 0, {(0, (), (1,)): 1, (1, (), (1,)): 1}, 6)
        out = plethystic_exp(g)
        for k in range(7):
            assert out.coefficient((k,)) == projective_space_class(k)

    def test_cancelling_factors(self):
        g = PlethysticSeries(1, 0, {(0, (), (1,)): 1, (0, (), (2,)): -1}, 6)
        assert plethystic_exp(g) == univariate({0: ONE, 1: ONE}, 6)


class TestPlethysticLog:
    def test_one_plus_t(self):
        f = univariate({0: ONE, 1: ONE}, 6)
        log = plethystic_log(f)
        assert log.terms == {(0, (), (1,)): 1, (0, (), (2,)): -1}

    def test_inverse_of_twisted_geometric(self):
        # 1/(1 - z T) has a single line-element factor.
        terms = {GradedMonomial((k,), (k,)): ONE for k in range(7)}
        f = GradedSeries(1, 1, terms, 6)
        log = plethystic_log(f)
        assert log.terms == {(0, (1,), (1,)): 1}

    def test_one_minus_t(self):
        f = univariate({0: ONE, 1: -ONE}, 6)
        assert plethystic_log(f).terms == {(0, (), (1,)): -1}

    def test_roundtrip_randomized(self):
        rng = random.Random(12)
        for _ in range(60):
            factor = random_local_factor(rng, trunc=7)
            assert plethystic_exp(plethystic_log(factor.series)) \
                == factor.series

    def test_requires_constant_term_one(self):
        with pytest.raises(ValueError):
            plethystic_log(univariate({0: L}, 3))


class TestEulerProductGenus0:
    def test_geometric_factor_gives_kapranov(self):
        f = univariate({e: ONE for e in range(9)}, 8)
        product = euler_product_genus0(f)
        for k in range(9):
            assert product.coefficient((k,)) == projective_space_class(k)

    def test_one_plus_t_degree_two(self):
        f = univariate({0: ONE, 1: ONE}, 4)
        product = euler_product_genus0(f)
        assert product.coefficient((2,)) == L * L

    def test_universal_l_function_marker(self):
        terms = {GradedMonomial((k,), (k,)): ONE for k in range(7)}
        product = euler_product_genus0(GradedSeries(1, 1, terms, 6))
        for k in range(7):
            assert product.coefficient((k,), (k,)) == projective_space_class(k)
        # Forgetting the marker recovers the Kapranov zeta values.
        plain = euler_product_genus0(univariate({e: ONE for e in range(7)}, 6))
        for k in range(7):
            assert plain.coefficient((k,)) == product.coefficient((k,), (k,))

    def test_multiplicativity(self):
        rng = random.Random(77)
        for _ in range(15):
            f = random_local_factor(rng, trunc=5)
            g = random_local_factor(rng, trunc=5)
            lhs = euler_product_genus0(LocalFactor(f.series * g.series))
            rhs = euler_product_genus0(f) * euler_product_genus0(g)
            assert lhs == rhs

    def test_single_label_power_twist(self):
        # Coefficient of T^k for 1 + c T with a monomial c is the reduced
        # configuration class times c^k.
        c = LefschetzLaurent({1: 1})
        f = univariate({0: ONE, 1: c}, 4)
        product = euler_product_genus0(f)
        for k in range(1, 5):
            expected = config_class({("i",): k}) * c ** k
            assert product.coefficient((k,)) == expected

    def test_local_factor_requires_unit_constant(self):
        with pytest.raises(ValueError):
            LocalFactor(univariate({0: ZERO, 1: ONE}, 3))


class TestConfigClass:
    def test_single_point(self):
        assert config_class({("i",): 1}) == L + 1

    def test_ordered_pair(self):
        assert config_class({("i",): 1, ("j",): 1}) == L * L + L

    def test_reduced_double_point(self):
        assert config_class({("i",): 2}) == L * L

    def test_empty_partition(self):
        assert config_class({}) == ONE

    def test_recursion_matches_euler_product_definition(self):
        shapes = set()

        def parts(n, mx):
            if n == 0:
                yield ()
                return
            for p in range(min(n, mx), 0, -1):
                for rest in parts(n - p, p):
                    yield (p,) + rest

        for size in range(8):
            shapes.update(parts(size, size if size else 1))
        for shape in sorted(shapes):
            assert _config_shape(shape) == config_class_by_euler_product(shape)

    def test_point_count_specializations(self):
        # Labeled configurations of distinct points, counted over F_q.
        for q in (2, 3, 4):
            assert config_class({1: 1, 2: 1}).specialize(q) == (q + 1) * q
            assert config_class({1: 2}).specialize(q) == q * q
            assert config_class({1: 1, 2: 1, 3: 1}).specialize(q) \
                == (q + 1) * q * (q - 1)


class TestTorsorTwist:
    def test_single_point_with_unit(self):
        assert torsor_twist({("i",): 1}) == L * L - 1

    def test_pair_with_units(self):
        expected = (L - 1) ** 2 * (L * L + L)
        assert torsor_twist({("i",): 1, ("j",): 1}) == expected
        assert torsor_twist({("i",): 1, ("j",): 1}).specialize(2) == 6

    def test_empty(self):
        assert torsor_twist({}) == ONE

    def test_partition_size(self):
        pi = LabeledPartition({("a",): 2, ("b",): 3})
        assert pi.size() == 5
        assert pi.shape() == (3, 2)


def brute_force_config_count(shape, q):
    """Count tuples of pairwise disjoint reduced rational divisors on the
    line over F_q with prescribed degrees, from closed-point counts alone."""
    from math import comb
    from motzeta import closed_point_counts
    dmax = max(shape)
    counts = [0] + [q + 1] + closed_point_counts(q, dmax)[1:] \
        if dmax >= 1 else [0]

    def assignments(n, max_deg):
        # ways to write n as sum of point degrees: {degree: how many points}
        if n == 0:
            yield {}
            return
        for d in range(1, min(n, max_deg) + 1):
            for rest in assignments(n - d, d):
                use = dict(rest)
                use[d] = use.get(d, 0) + 1
                yield use

    total = 0

    def rec(idx, used_by_degree, weight):
        nonlocal total
        if idx == len(shape):
            total += weight
            return
        for assign in assignments(shape[idx], dmax):
            w = weight
            feasible = True
            new_used = dict(used_by_degree)
            for d, k in assign.items():
                available = counts[d] - new_used.get(d, 0)
                if available < k:
                    feasible = False
                    break
                w *= comb(available, k)
                new_used[d] = new_used.get(d, 0) + k
            if feasible:
                rec(idx + 1, new_used, w)

    rec(0, {}, 1)
    return total


class TestConfigOracle:
    @pytest.mark.parametrize("q", [2, 3])
    def test_specialization_counts_configurations(self, q):
        shapes = [(1,), (2,), (3,), (1, 1), (2, 1), (2, 2), (3, 1),
                  (1, 1, 1), (2, 1, 1)]
        for shape in shapes:
            pi = {i: n for i, n in enumerate(shape)}
            assert config_class(pi).specialize(q) == \
                brute_force_config_count(shape, q), shape
