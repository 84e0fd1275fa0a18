# -*- coding: utf-8 -*-

# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

from hypothesis import given
from hypothesis import strategies as st
import testscenarios

from jforge import algebra
from jforge import exception
from jforge import extension
from jforge import forms
from jforge import linalg
from jforge import representation
from jforge.tests.unit import base

Matrix = linalg.Matrix


def j11(label='x'):
    return algebra.JordanAlgebra.zero(1, basis=[label], name='J_1_1')


def j21():
    return algebra.JordanAlgebra.from_products(
        ['a1', 'b1'], {('a1', 'a1'): {'b1': 1}}, name='J_2_1')


def unit1(label='e'):
    return algebra.JordanAlgebra([[(1,)]], basis=[label], name='K')


class CocycleTestCase(base.TestCase):

    def test_unknown_kind(self):
        self.assertRaises(exception.InvalidInput, extension.Cocycle,
                          'bogus', [[(0,)]])

    def test_not_square(self):
        self.assertRaises(exception.DimensionMismatch, extension.Cocycle,
                          extension.CENTRAL, [[(0,), (0,)]])

    def test_evaluate_and_sparse(self):
        phi = extension.Cocycle.from_sparse(extension.CENTRAL, 2, 1,
                                            {(0, 1): [3]})
        self.assertTrue(phi.is_symmetric())
        self.assertEqual((6,), phi((1, 0), (0, 2)))
        self.assertEqual({(0, 1): (3,)}, phi.sparse())

    def test_zero(self):
        phi = extension.Cocycle.zero(extension.TSTAR, 2, 2)
        self.assertEqual({}, phi.sparse())
        self.assertEqual(2, phi.value_dim)


class CentralExtensionTestCase(base.TestCase):

    def test_j11_to_j21(self):
        phi = extension.Cocycle.from_sparse(
            extension.CENTRAL, 1, 1, {(0, 0): [1]})
        a = extension.central_extension(j11('a'), 1, phi, conf=self.cfg)
        self.assertEqual(('a', 'v1'), a.basis)
        self.assertEqual((0, 1), a.product(0, 0))
        self.assertIn((0, 1), algebra.annihilator(a))

    def test_zero_cocycle(self):
        a = extension.central_extension(j21(), 2, conf=self.cfg)
        self.assertEqual(('a1', 'b1', 'v1', 'v2'), a.basis)
        self.assertEqual(3, algebra.annihilator(a).dim)

    def test_bad_cocycle(self):
        # phi(xy, x^2) = phi(x, yx^2) at x = y = a1 forces phi(b1, b1) = 0.
        phi = extension.Cocycle.from_sparse(
            extension.CENTRAL, 2, 1, {(1, 1): [1]})
        report = extension.check_central_cocycle(j21(), phi)
        self.assertFalse(report.ok)
        self.assertEqual('central', report.identity)
        e = self.assertRaises(exception.BadCocycle,
                              extension.central_extension, j21(), 1, phi)
        self.assertEqual('central', e.identity)

    def test_asymmetric_cocycle(self):
        phi = extension.Cocycle(extension.CENTRAL,
                                [[(0,), (1,)], [(0,), (0,)]])
        report = extension.check_central_cocycle(j21(), phi)
        self.assertEqual('symmetry', report.identity)

    def test_value_dimension(self):
        phi = extension.Cocycle.from_sparse(
            extension.CENTRAL, 1, 1, {(0, 0): [1]})
        self.assertRaises(exception.DimensionMismatch,
                          extension.central_extension, j11(), 2, phi)

    def test_source_dimension(self):
        phi = extension.Cocycle.zero(extension.CENTRAL, 1, 1)
        self.assertRaises(exception.DimensionMismatch,
                          extension.check_central_cocycle, j21(), phi)


class TstarTestCase(base.TestCase):

    def test_hyperbolic_gram(self):
        self.assertEqual(Matrix([[0, 1], [1, 0]]),
                         extension.hyperbolic_gram(1))
        self.assertEqual(Matrix.zeros(0), extension.hyperbolic_gram(0))

    def test_trivial_cocycle(self):
        p = extension.tstar_extension(j21(), conf=self.cfg)
        self.assertIsInstance(p, forms.PseudoEuclideanAlgebra)
        self.assertEqual(('a1', 'b1', 'a1*', 'b1*'), p.basis)
        self.assertEqual('TSTAR0(J_2_1)', p.name)
        self.assertEqual(extension.hyperbolic_gram(2), p.form)
        # (b1* o R_a1)(a1) = b1*(b1) = 1.
        self.assertEqual((0, 0, 1, 0), p.algebra.product(0, 3))
        self.assertEqual((0, 0, 0, 0), p.algebra.product(0, 2))

    def test_nontrivial_cocycle(self):
        theta = extension.Cocycle.from_sparse(
            extension.TSTAR, 1, 1, {(0, 0): [1]})
        self.assertTrue(extension.check_tstar_cocycle(j11(), theta).ok)
        p = extension.tstar_extension(j11(), theta, conf=self.cfg)
        self.assertEqual((0, 1), p.algebra.product(0, 0))

    def test_cyclic_failure(self):
        z = algebra.JordanAlgebra.zero(2)
        theta = extension.Cocycle.from_sparse(
            extension.TSTAR, 2, 2, {(0, 0): [0, 1]})
        report = extension.check_tstar_cocycle(z, theta)
        self.assertFalse(report.ok)
        self.assertEqual('cyclic', report.identity)
        self.assertRaises(exception.BadCocycle, extension.tstar_extension,
                          z, theta)

    def test_values_in_dual(self):
        theta = extension.Cocycle.zero(extension.TSTAR, 2, 1)
        self.assertRaises(exception.DimensionMismatch,
                          extension.check_tstar_cocycle,
                          algebra.JordanAlgebra.zero(2), theta)


class SemidirectTestCase(base.TestCase):

    def test_admissible(self):
        pi = representation.Representation(unit1(), [[['1/2']]])
        target = algebra.JordanAlgebra.zero(1, basis=['z'])
        a = extension.semidirect_product(unit1(), target, pi, conf=self.cfg)
        self.assertEqual(('e', 'z'), a.basis)
        self.assertEqual((0, linalg.Fraction(1, 2)), a.product(0, 1))

    def test_not_admissible(self):
        pi = representation.Representation(unit1(), [[['1/2']]])
        self.assertRaises(exception.NotAdmissible,
                          extension.semidirect_product, unit1(),
                          unit1('f'), pi)

    def test_wrong_source(self):
        pi = representation.adjoint(j21())
        self.assertRaises(exception.InvalidInput,
                          extension.semidirect_product, unit1(), j21(), pi)


class AdmissiblePairTestCase(base.TestCase):

    def test_zero_pair(self):
        report = extension.check_admissible_pair(j21(), Matrix.zeros(2),
                                                 (0, 0))
        self.assertTrue(report.admissible)
        self.assertIsNone(report.b_symmetric)

    def test_c6(self):
        report = extension.check_admissible_pair(j11(), [[1]], (0,))
        self.assertFalse(report.admissible)
        self.assertEqual('C6', report.failed_condition)
        self.assertEqual('C6', report.first_violation.identity)

    def test_shape(self):
        self.assertRaises(exception.DimensionMismatch,
                          extension.check_admissible_pair, j21(),
                          Matrix.zeros(1), (0, 0))

    def test_b_symmetry(self):
        p = forms.PseudoEuclideanAlgebra(j21(), [[0, 1], [1, 0]])
        sym = extension.check_admissible_pair(p, [[0, 0], [1, 0]], (0, 0))
        self.assertTrue(sym.b_symmetric)
        asym = extension.check_admissible_pair(p, [[1, 0], [0, 0]], (0, 0))
        self.assertFalse(asym.b_symmetric)

    def test_pair_coercion(self):
        pair = extension.AdmissiblePair([[0]], ['1/2'], '3')
        self.assertEqual(Matrix([[0]]), pair.D)
        self.assertEqual((linalg.Fraction(1, 2),), pair.x0)
        self.assertEqual(3, pair.k)


def split_units():
    # K + K: e e = e, f f = f.
    return algebra.JordanAlgebra.from_products(
        ['e', 'f'], {('e', 'e'): {'e': 1}, ('f', 'f'): {'f': 1}})


def square_and_cross():
    # a a = b, a c = d; b and d annihilate everything, so J^3 = 0.
    return algebra.JordanAlgebra.from_products(
        ['a', 'c', 'b', 'd'], {('a', 'a'): {'b': 1}, ('a', 'c'): {'d': 1}})


class FailedConditionTestCase(testscenarios.WithScenarios, base.TestCase):
    """Each pair passes every earlier condition and fails the named one."""

    scenarios = [
        ('C1', dict(base_algebra=split_units,
                    D=[[0, 0], [1, 0]], x0=(0, 0), condition='C1')),
        ('C2', dict(base_algebra=j21,
                    D=[[1, 0], [0, 0]], x0=(0, 0), condition='C2')),
        ('C3', dict(base_algebra=j21,
                    D=[[0, 0], [0, 1]], x0=(1, 0), condition='C3')),
        ('C4', dict(base_algebra=square_and_cross,
                    D=[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0],
                       [0, 0, 0, 0]],
                    x0=(0, 0, 0, 0), condition='C4')),
        ('C5', dict(base_algebra=j21,
                    D=[[0, 0], [0, 1]], x0=(0, 0), condition='C5')),
        ('C6', dict(base_algebra=j11, D=[[1]], x0=(0,), condition='C6')),
        ('C7', dict(base_algebra=j21,
                    D=[[0, 0], [0, 0]], x0=(1, 0), condition='C7')),
    ]

    def test_report(self):
        report = extension.check_admissible_pair(self.base_algebra(),
                                                 self.D, self.x0)
        self.assertFalse(report.admissible)
        self.assertEqual(self.condition, report.failed_condition)
        self.assertEqual(self.condition, report.first_violation.identity)
        self.assertNotEqual(report.first_violation.lhs,
                            report.first_violation.rhs)

    def test_construction_refused(self):
        pair = extension.AdmissiblePair(self.D, self.x0)
        e = self.assertRaises(exception.NotAdmissible,
                              extension.generalized_semidirect,
                              self.base_algebra(), pair, conf=self.cfg)
        self.assertEqual(self.condition, e.condition)


class GeneralizedSemidirectTestCase(base.TestCase):

    def test_square_of_a(self):
        pair = extension.AdmissiblePair([[0]], [1])
        a = extension.generalized_semidirect(j11(), pair, conf=self.cfg)
        self.assertEqual(('a', 'x'), a.basis)
        self.assertEqual((0, 1), a.product(0, 0))
        self.assertEqual(3, algebra.nilpotency_class(a))

    def test_label_clash(self):
        t = extension.generalized_semidirect_table(
            j11('a'), Matrix.zeros(1), (0,))
        self.assertEqual(("a'", 'a'), t.basis)

    def test_not_admissible(self):
        pair = extension.AdmissiblePair([[1]], [0])
        e = self.assertRaises(exception.NotAdmissible,
                              extension.generalized_semidirect, j11(), pair)
        self.assertEqual('C6', e.condition)


scalar = st.fractions(min_value=-3, max_value=3, max_denominator=4)


class RandomizedSoundnessTestCase(base.TestCase):

    @base.fuzz(100)
    @given(scalar, scalar, scalar)
    def test_central_over_zero_algebra(self, p, q, r):
        phi = extension.Cocycle.from_sparse(
            extension.CENTRAL, 2, 1, {(0, 0): [p], (0, 1): [q], (1, 0): [q],
                                      (1, 1): [r]})
        a = extension.central_extension(algebra.JordanAlgebra.zero(2), 1,
                                        phi, conf=self.cfg)
        self.assertTrue(algebra.check_jordan(a).jordan)
        self.assertEqual((0, 0, p), a.product(0, 0))

    @base.fuzz(100)
    @given(scalar)
    def test_tstar(self, lam):
        j = algebra.JordanAlgebra.from_products(
            ['a1', 'b1'], {('a1', 'a1'): {'b1': lam}})
        p = extension.tstar_extension(j, conf=self.cfg)
        self.assertTrue(algebra.check_jordan(p.algebra).jordan)
        self.assertTrue(forms.check_pep(p.algebra, p.form).ok)

    @base.fuzz(100)
    @given(st.sampled_from(['0', '1/2', '1']))
    def test_semidirect(self, c):
        pi = representation.Representation(unit1(), [[[c]]])
        target = algebra.JordanAlgebra.zero(1, basis=['z'])
        a = extension.semidirect_product(unit1(), target, pi, conf=self.cfg)
        self.assertTrue(algebra.check_jordan(a).jordan)

    @base.fuzz(100)
    @given(scalar, scalar, scalar)
    def test_generalized_semidirect(self, c, u, v):
        # Over a zero algebra (C6) and (C7) reduce to D^3 = 0 and
        # D^2 x0 = 0, which every strictly lower triangular D satisfies.
        pair = extension.AdmissiblePair([[0, 0], [c, 0]], (u, v))
        a = extension.generalized_semidirect(
            algebra.JordanAlgebra.zero(2), pair, conf=self.cfg)
        self.assertTrue(algebra.check_jordan(a).jordan)
        self.assertEqual((0, u, v), a.product(0, 0))

    @base.fuzz(100)
    @given(scalar.filter(lambda c: c != 0))
    def test_invalid_pair_names_condition(self, c):
        pair = extension.AdmissiblePair([[c, 0], [0, c]], (0, 0))
        e = self.assertRaises(exception.NotAdmissible,
                              extension.generalized_semidirect,
                              algebra.JordanAlgebra.zero(2), pair)
        self.assertEqual('C6', e.condition)
