#!/usr/bin/env python3
"""
Tests for brute-force oracles, coefficient identities, the equivalence suite
and composed-kernel limits
"""

import random
from fractions import Fraction

import pytest

from rkhsmult.errors import DegreeOutOfRange, NonRationalValues, NotCnp, UnresolvedCase
from rkhsmult.functionals import (
    Functional, TensorFunctional, boundary_limit_ones, counterexample_functional, point_functional,
    tensor_point,
)
from rkhsmult.kernels import bergman, dirichlet, drury_arveson, szego
from rkhsmult.series.multi_index import MultiIndex, multi_indices_up_to
from rkhsmult.verify import (
    FAIL, PASS, brute_force_multiplicative, check_composed_limit, coefficient_identity_check,
    coefficient_identity_check_schur, coefficient_identity_check_tensor, equivalence_suite,
    identity_sweep, schur_identity_sweep, tensor_identity_sweep,
)

SEED = 20240611


def random_point(rng: random.Random, dimension: int):
    bound = 6 if dimension == 1 else 3
    return [Fraction(rng.randint(-bound, bound), 8) for _ in range(dimension)]


def perturb(functional: Functional, alpha: MultiIndex, delta: Fraction) -> Functional:
    values = dict(functional.values)
    values[alpha] = values[alpha] + delta
    return Functional(functional.dimension, values, functional.degree, f"{functional.label}+perturbed")


def random_functionals(count: int = 100):
    """Half point evaluations, half point evaluations moved at one coefficient"""
    rng = random.Random(SEED)
    cases = []
    for i in range(count):
        dimension = rng.choice([1, 2])
        max_degree = rng.randint(2, 5 if dimension == 1 else 4)
        lam = point_functional(random_point(rng, dimension), 2 * max_degree)
        if i % 2:
            degree = rng.randint(2, max_degree)
            alpha = rng.choice([a for a in multi_indices_up_to(dimension, degree) if a.degree == degree])
            delta = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(2, 9))
            lam = perturb(lam, alpha, delta)
        cases.append((lam, max_degree, rng.choice([1, 2, 3])))
    return cases


class TestBruteForce:
    """Monomial multiplicativity"""

    def test_point_evaluation_passes(self):
        report = brute_force_multiplicative(point_functional([Fraction(1, 3), Fraction(-1, 4)], 8), 4)
        assert report.passed
        assert report.power_form_holds
        assert report.verdict == PASS
        assert report.witness_degree is None

    def test_counterexample_witness(self):
        report = brute_force_multiplicative(counterexample_functional(4), 2)
        assert report.witness == (MultiIndex.of(1), MultiIndex.of(1))
        assert report.witness_degree == 2
        witness = report.to_dict()['witness']
        assert witness == {'alpha': [1], 'beta': [1], 'value_of_product': '0', 'product_of_values': '1'}

    def test_unit_value_checked_through_zero_pair(self):
        values = {alpha: Fraction(0) for alpha in multi_indices_up_to(1, 2)}
        values[MultiIndex.of(0)] = Fraction(2)
        report = brute_force_multiplicative(Functional(1, values, 2), 1)
        assert report.witness_degree == 0

    def test_boundary_limit_is_multiplicative(self):
        assert brute_force_multiplicative(boundary_limit_ones(2, 6), 3).passed

    def test_needs_double_degree(self):
        with pytest.raises(DegreeOutOfRange):
            brute_force_multiplicative(counterexample_functional(4), 3)

    def test_float_mode(self):
        report = brute_force_multiplicative(point_functional([0.3, -0.2j], 6), 3)
        assert report.mode == 'float'
        assert report.passed


class TestCoefficientIdentities:
    """Exact identities behind the criteria"""

    def test_counterexample_at_degree_two(self):
        report = coefficient_identity_check(counterexample_functional(8), szego(1, 8), 1, MultiIndex.of(2))
        assert report.lhs == 1
        assert report.rhs == 0
        assert not report.equal

    def test_low_degrees_hold_for_counterexample(self):
        lam = counterexample_functional(8)
        assert coefficient_identity_check(lam, szego(1, 8), 1, MultiIndex.of(0)).equal
        assert coefficient_identity_check(lam, szego(1, 8), 1, MultiIndex.of(1)).equal

    @pytest.mark.parametrize('p', [1, 2, 3])
    def test_sweep_first_failing_degree(self, p):
        sweep = identity_sweep(counterexample_functional(8), dirichlet(1, 8), p, 4)
        assert sweep.first_failing_degree == 2
        assert sweep.verdict == FAIL
        assert sweep.to_dict()['kind'] == 'identity'

    def test_point_evaluation_sweep_holds(self):
        sweep = identity_sweep(point_functional([Fraction(1, 3), Fraction(1, 5)], 6), drury_arveson(2, 6), 2, 3)
        assert sweep.all_equal
        assert len(sweep.reports) == 10

    def test_exact_mode_only(self):
        with pytest.raises(NonRationalValues):
            coefficient_identity_check(point_functional([0.25], 4), szego(1, 4), 1, MultiIndex.of(1))

    def test_needs_cnp(self):
        with pytest.raises(NotCnp):
            coefficient_identity_check(counterexample_functional(4), bergman(1, 4), 1, MultiIndex.of(1))

    def test_degree_limit(self):
        with pytest.raises(DegreeOutOfRange):
            coefficient_identity_check(counterexample_functional(4), szego(1, 8), 1, MultiIndex.of(5))

    def test_schur_identity(self):
        lam = counterexample_functional(6)
        assert coefficient_identity_check_schur(lam, szego(1, 6), dirichlet(1, 6), MultiIndex.of(1)).equal
        assert not coefficient_identity_check_schur(lam, szego(1, 6), dirichlet(1, 6), MultiIndex.of(2)).equal
        sweep = schur_identity_sweep(point_functional([Fraction(1, 4)], 6), szego(1, 6), dirichlet(1, 6), 4)
        assert sweep.all_equal
        assert sweep.kernels == ['szego', 'dirichlet']

    def test_tensor_identity(self):
        zero, one = MultiIndex.of(0), MultiIndex.of(1)
        perturbed = TensorFunctional.from_values(1, 4, {(zero, zero): Fraction(1), (one, one): Fraction(1, 10)})
        report = coefficient_identity_check_tensor(perturbed, szego(1, 4), szego(1, 4), one, one)
        assert report.lhs == 0
        assert report.rhs == Fraction(1, 10)
        assert report.to_dict()['beta'] == [1]
        assert tensor_identity_sweep(perturbed, szego(1, 4), szego(1, 4), 3).first_failing_degree == 2
        exact = tensor_point([Fraction(1, 3)], [Fraction(-1, 2)], 4)
        assert tensor_identity_sweep(exact, szego(1, 4), dirichlet(1, 4), 4).all_equal


class TestEquivalence:
    """Brute force and identities agree"""

    KERNELS = {1: (szego(1, 10), dirichlet(1, 10)), 2: (drury_arveson(2, 8), dirichlet(2, 8))}
    POINTS = {1: [Fraction(1, 3)], 2: [Fraction(1, 4), Fraction(-1, 3)]}

    def test_brute_force_matches_identity_sweep(self):
        cases = random_functionals()
        assert len(cases) == 100
        for index, (lam, max_degree, p) in enumerate(cases):
            kernel = self.KERNELS[lam.dimension][index % 2]
            brute = brute_force_multiplicative(lam, max_degree)
            sweep = identity_sweep(lam, kernel, p, max_degree)
            assert brute.passed == sweep.all_equal, (lam.label, kernel.label, p, max_degree)
            assert brute.passed == (index % 2 == 0)

    @pytest.mark.parametrize('p', [1, 2, 3])
    @pytest.mark.parametrize('max_degree', [1, 2, 3, 4, 5])
    @pytest.mark.parametrize('dimension', [1, 2])
    def test_identities_match_brute_force_on_full_grid(self, dimension, max_degree, p):
        """Every perturbation position 2 <= |alpha| <= D, both kernel families"""
        base = point_functional(self.POINTS[dimension], 2 * max_degree)
        cases = [(base, True)]
        for alpha in multi_indices_up_to(dimension, max_degree):
            if alpha.degree >= 2:
                cases.append((perturb(base, alpha, Fraction(1, 7)), False))
        kernels = (szego(dimension, 10), dirichlet(dimension, 10))
        for lam, multiplicative in cases:
            brute = brute_force_multiplicative(lam, max_degree)
            assert brute.passed == multiplicative, lam.label
            for kernel in kernels:
                sweep = identity_sweep(lam, kernel, p, max_degree)
                assert sweep.all_equal == multiplicative, (lam.label, kernel.label)

    def test_suite_on_counterexample(self):
        report = equivalence_suite(counterexample_functional(8), szego(1, 8), 1, 2,
                                   [[Fraction(1, 2)], [Fraction(1, 4)]])
        assert report.brute_force.verdict == FAIL
        assert report.identities.verdict == FAIL
        assert report.criterion.verdict == FAIL
        assert report.agree
        assert report.verdict == FAIL
        assert any('exceeds 1' in c for c in report.caveats)

    def test_suite_on_origin(self):
        report = equivalence_suite(point_functional([Fraction(0)], 8), szego(1, 8), 1, 4,
                                   [[Fraction(0)], [Fraction(1, 2)]])
        assert report.agree
        assert report.verdict == PASS
        assert report.caveats == []
        assert report.to_dict()['kind'] == 'equivalence'


class TestComposedLimit:
    """Limits of evaluations through a symbol into the disc"""

    def test_origin_limit_passes(self):
        report = check_composed_limit(Fraction(0), [Fraction(1, 4), Fraction(-1, 3)], degree=8)
        assert report.functional == 'composed_limit(0)'
        assert report.verdict == PASS

    def test_nonzero_limit_is_unresolved(self):
        with pytest.raises(UnresolvedCase):
            check_composed_limit(Fraction(1, 2), [Fraction(1, 4)], degree=8)
