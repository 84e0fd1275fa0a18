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

from jforge import algebra
from jforge import catalog
from jforge import exception
from jforge import extension
from jforge import forms
from jforge import linalg
from jforge import manin
from jforge.tests.unit import base

Matrix = linalg.Matrix
Subspace = linalg.Subspace

OMEGA = [[0, 1], [-1, 0]]
A1 = Subspace(2, [[1, 0]])
B1 = Subspace(2, [[0, 1]])


def j20_triple(omega=None):
    return manin.ManinTriple(catalog.get('J_2_0').pseudo_euclidean, A1, B1,
                             omega)


def zero_triple(omega=None):
    p = forms.PseudoEuclideanAlgebra(algebra.JordanAlgebra.zero(0),
                                     Matrix.zeros(0))
    return manin.ManinTriple(p, Subspace.zero(0), Subspace.zero(0), omega)


def empty_pair(k=0):
    return extension.AdmissiblePair(Matrix.zeros(0), (), k)


class CheckManinTestCase(base.TestCase):

    def test_triple(self):
        self.assertEqual((True, None), manin.check_manin(*j20_triple()))

    def test_symplectic_triple(self):
        m = j20_triple(OMEGA)
        self.assertEqual(Matrix(OMEGA), m.omega)
        self.assertTrue(manin.check_manin(*m).ok)

    def test_not_direct(self):
        p = catalog.get('J_2_0').pseudo_euclidean
        report = manin.check_manin(p, A1, A1)
        self.assertEqual(manin.DIRECT_SUM, report.failed_condition)

    def test_not_isotropic(self):
        p = catalog.get('J_2_0').pseudo_euclidean
        report = manin.check_manin(p, Subspace(2, [[1, 1]]), B1)
        self.assertEqual(manin.U_ISOTROPIC, report.failed_condition)

    def test_not_subalgebra(self):
        p = catalog.get('J_2_1').pseudo_euclidean
        report = manin.check_manin(p, A1, B1)
        self.assertEqual(manin.U_SUBALGEBRA, report.failed_condition)

    def test_omega_not_symplectic(self):
        report = manin.check_manin(*j20_triple(Matrix.zeros(2)))
        self.assertEqual(manin.OMEGA_SYMPLECTIC, report.failed_condition)

    def test_ambient_mismatch(self):
        p = catalog.get('J_2_0').pseudo_euclidean
        self.assertRaises(exception.DimensionMismatch, manin.check_manin,
                          p, Subspace(3), B1)

    def test_swapped(self):
        m = j20_triple().swapped()
        self.assertEqual(B1, m.U)
        self.assertEqual(A1, m.V)

    def test_ann_intersections(self):
        ann = manin.ann_intersections(j20_triple())
        self.assertEqual(A1, ann.U)
        self.assertEqual(B1, ann.V)


class ManinDoubleExtensionTestCase(base.TestCase):

    def test_from_zero(self):
        m = manin.manin_double_extension(zero_triple(), empty_pair(),
                                         conf=self.cfg)
        self.assertEqual(2, m.p.dim)
        self.assertEqual(B1, m.U)
        self.assertEqual(A1, m.V)

    def test_k_must_vanish(self):
        e = self.assertRaises(exception.SpecInvalid,
                              manin.manin_double_extension, zero_triple(),
                              empty_pair(k=1))
        self.assertIn(manin.K_ZERO, e.message)

    def test_x0_in_v(self):
        pair = extension.AdmissiblePair(Matrix.zeros(2), (0, 1), 0)
        m = manin.manin_double_extension(j20_triple(), pair, conf=self.cfg)
        self.assertEqual(4, m.p.dim)
        self.assertTrue(manin.check_manin(*m).ok)
        self.assertIn((1, 0, 0, 0), m.V)
        self.assertIn((0, 0, 0, 1), m.U)

    def test_x0_outside_v(self):
        pair = extension.AdmissiblePair(Matrix.zeros(2), (1, 0), 0)
        e = self.assertRaises(exception.SpecInvalid,
                              manin.manin_double_extension, j20_triple(),
                              pair)
        self.assertIn(manin.X0_IN_V, e.message)


class PeelManinTestCase(base.TestCase):

    def test_two_dim(self):
        peel = manin.peel_manin(j20_triple())
        self.assertFalse(peel.swapped)
        self.assertEqual(0, peel.triple.p.dim)
        self.assertEqual((1, 0), peel.b)
        self.assertEqual((0, 1), peel.a)
        self.assertEqual(Matrix([[0, 1], [1, 0]]), peel.isometry)

    @base.fuzz(30)
    @given(st.integers(min_value=-4, max_value=4).filter(lambda v: v != 0),
           st.fractions(min_value=-3, max_value=3, max_denominator=4))
    def test_round_trip(self, r, e):
        # D(a1) = r b1 keeps V = K b1 stable and is B-symmetric.
        pair = extension.AdmissiblePair(Matrix([[0, 0], [r, 0]]), (0, e), 0)
        m = manin.manin_double_extension(j20_triple(), pair, conf=self.cfg)
        peel = manin.peel_manin(m)
        self.assertFalse(peel.swapped)
        self.assertEqual(2, peel.triple.p.dim)
        self.assertEqual((0, 0, 0, 1), peel.b)
        self.assertFalse(peel.pair.D.is_zero())
        rebuilt = manin.manin_double_extension(peel.triple, peel.pair,
                                               conf=self.cfg)
        self.assertTrue(forms.check_isometry(rebuilt.p, m.p, peel.isometry))
        self.assertEqual(m.U, rebuilt.U.image_under(peel.isometry))
        self.assertEqual(m.V, rebuilt.V.image_under(peel.isometry))


class SpectralSplitTestCase(base.TestCase):

    def test_split(self):
        p = catalog.get('J_2_0').pseudo_euclidean
        m = manin.spectral_split(p, OMEGA)
        self.assertEqual(A1, m.U)
        self.assertEqual(B1, m.V)
        self.assertEqual(Matrix(OMEGA), m.omega)

    def test_zero_eigenvalue(self):
        p = catalog.get('J_2_0').pseudo_euclidean
        self.assertRaises(exception.ZeroEigenvalue, manin.spectral_split, p,
                          Matrix.zeros(2))

    def test_not_a_derivation(self):
        p = catalog.get('J_2_1').pseudo_euclidean
        self.assertRaises(exception.InvalidInput, manin.spectral_split, p,
                          OMEGA)


class SymplecticManinTestCase(base.TestCase):

    def test_from_zero(self):
        m = manin.symplectic_manin_double_extension(
            zero_triple(Matrix.zeros(0)), empty_pair(), (), 1, conf=self.cfg)
        self.assertEqual(Matrix([[0, -1], [1, 0]]), m.omega)
        self.assertEqual(B1, m.U)
        self.assertTrue(manin.check_manin(*m).ok)

    def test_needs_omega(self):
        self.assertRaises(exception.InvalidInput,
                          manin.symplectic_manin_double_extension,
                          zero_triple(), empty_pair(), (), 1)

    def test_k_must_vanish(self):
        e = self.assertRaises(exception.CompatibilityFails,
                              manin.symplectic_manin_double_extension,
                              zero_triple(Matrix.zeros(0)), empty_pair(k=1),
                              (), 1)
        self.assertEqual(manin.K_ZERO, e.kwargs['condition'])

    def test_peel(self):
        p = catalog.get('J_2_0').pseudo_euclidean
        peel = manin.peel_symplectic_manin(manin.spectral_split(p, OMEGA))
        self.assertFalse(peel.swapped)
        self.assertEqual(1, peel.lam)
        self.assertEqual((1, 0), peel.b)
        self.assertEqual(0, peel.triple.p.dim)
