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

import testscenarios

from jforge import algebra
from jforge import catalog
from jforge import exception
from jforge import forms
from jforge import linalg
from jforge import manin
from jforge import symplectic
from jforge import tkk
from jforge.tests.base import F
from jforge.tests.unit import base

Matrix = linalg.Matrix


class EntryScenarioTestCase(testscenarios.WithScenarios, base.TestCase):

    scenarios = [
        ('J_1_1', dict(name='J_1_1', params={}, dim=1, nilpotent=True)),
        ('J_2_0', dict(name='J_2_0', params={}, dim=2, nilpotent=True)),
        ('J_2_1', dict(name='J_2_1', params={}, dim=2, nilpotent=True)),
        ('J_3_0_1', dict(name='J_3_0_1', params={}, dim=3, nilpotent=True)),
        ('J_3_1_0', dict(name='J_3_1_0', params={}, dim=3, nilpotent=True)),
        ('J_4_0_A', dict(name='J_4_0_A', params={'alpha': 1, 'eta': 1},
                         dim=4, nilpotent=True)),
        ('J_4_0_B', dict(name='J_4_0_B', params={'alpha': 2}, dim=4,
                         nilpotent=True)),
        ('J_4_1', dict(name='J_4_1', params={'beta': 1, 'k': 3}, dim=4,
                       nilpotent=True)),
        ('J_5_0_1', dict(name='J_5_0_1', params={'alpha': 1, 'eta1': 1},
                         dim=5, nilpotent=True)),
        ('J_5_1_0', dict(name='J_5_1_0', params={'alpha': 2, 'eta': 1},
                         dim=5, nilpotent=True)),
        ('NONASSOC_5', dict(name='NONASSOC_5', params={}, dim=5,
                            nilpotent=True)),
        ('UNIT_1', dict(name='UNIT_1', params={}, dim=1, nilpotent=False)),
        ('SPIN', dict(name='SPIN', params={'q': '1,-1'}, dim=3,
                      nilpotent=False)),
        ('H_3', dict(name='H_3', params={}, dim=6, nilpotent=False)),
        ('TENSOR', dict(name='TENSOR', params={'n': 3}, dim=3,
                        nilpotent=True)),
    ]

    def test_entry(self):
        entry = catalog.get(self.name, **self.params)
        self.assertEqual(self.name, entry.name)
        self.assertEqual(self.dim, entry.algebra.dim)
        self.assertTrue(algebra.check_jordan(entry.algebra).jordan)
        self.assertEqual(self.nilpotent, algebra.is_nilpotent(entry.algebra))
        if entry.form is not None:
            self.assertTrue(forms.check_pep(entry.algebra, entry.form).ok)


class CatalogTestCase(base.TestCase):

    def test_names(self):
        names = catalog.names()
        for name in ('J_1_1', 'J_2_lambda', 'J_3_0_k', 'J_3_alpha_k',
                     'NONASSOC_5', 'UNIT_1', 'SPIN', 'H_n', 'TENSOR',
                     'TSTAR0'):
            self.assertIn(name, names)

    def test_list_entries(self):
        entries = catalog.list_entries()
        self.assertEqual(catalog.names(), [e['name'] for e in entries])
        spin = [e for e in entries if e['name'] == 'SPIN'][0]
        self.assertEqual('q', spin['params'][0]['name'])
        self.assertTrue(spin['has_form'])

    def test_alias(self):
        entry = catalog.get('J_2_1')
        self.assertEqual({'lambda': '1'}, entry.params)
        self.assertEqual('J_2_1', entry.algebra.name)
        self.assertEqual((0, 1), entry.algebra.product(0, 0))

    def test_string_parameter(self):
        entry = catalog.get('J_2_lambda', **{'lambda': '1/2'})
        self.assertEqual((0, F(1) / 2), entry.algebra.product(0, 0))

    def test_three_dim_products(self):
        a = catalog.get('J_3_alpha_k', alpha=2, k=3).algebra
        self.assertEqual(('a2', 'a', 'b2'), a.basis)
        self.assertEqual((0, 2, 3), a.product(0, 0))
        self.assertEqual((0, 0, 2), a.product(0, 1))
        self.assertEqual((0, 0, 0), a.product(1, 1))

    def test_nonassociative_witness(self):
        entry = catalog.get('NONASSOC_5')
        a = entry.algebra
        self.assertFalse(entry.properties.associative)
        a2, a4 = a.unit('a2'), a.unit('a4')
        lhs = a.multiply(a2, a.multiply(a2, a4))
        rhs = a.multiply(a.multiply(a2, a2), a4)
        self.assertEqual(a.unit('b4'), linalg.sub(lhs, rhs))

    def test_spin(self):
        a = catalog.get('SPIN', q='1,-1').algebra
        self.assertEqual(('u', 'v1', 'v2'), a.basis)
        self.assertEqual((-1, 0, 0), a.product(2, 2))
        self.assertEqual((0, 1, 0), a.product(0, 1))

    def test_symmetric_matrices(self):
        entry = catalog.get('H_2')
        self.assertEqual(('E11', 'E22', 'E12'), entry.algebra.basis)
        self.assertEqual((1, 1, 0), entry.algebra.product(2, 2))
        self.assertEqual(Matrix.diagonal([1, 1, 2]), entry.form)

    def test_tensor(self):
        a = catalog.get('TENSOR', J='UNIT_1', n=2).algebra
        self.assertEqual(('eX1', 'eX2'), a.basis)
        self.assertEqual((0, 1), a.product(0, 0))
        self.assertEqual((0, 0), a.product(1, 1))
        self.assertIsNone(catalog.get('TENSOR').form)

    def test_tstar(self):
        entry = catalog.get('TSTAR0', J='J_2_1')
        self.assertEqual(4, entry.algebra.dim)
        self.assertIsNotNone(entry.pseudo_euclidean)


class AliasParamsTestCase(testscenarios.WithScenarios, base.TestCase):

    scenarios = [
        ('J_2_1', dict(name='J_2_1', key='lambda', fixed='1', other=5)),
        ('J_3_0_0', dict(name='J_3_0_0', key='k', fixed='0', other=1)),
        ('J_3_0_1', dict(name='J_3_0_1', key='k', fixed='1', other='1/2')),
        ('J_3_1_0_alpha', dict(name='J_3_1_0', key='alpha', fixed='1',
                               other=2)),
        ('J_3_1_0_k', dict(name='J_3_1_0', key='k', fixed='0', other=3)),
        ('H_2', dict(name='H_2', key='n', fixed='2', other=3)),
    ]

    def test_conflicting_value(self):
        e = self.assertRaises(exception.BadParams, catalog.get, self.name,
                              **{self.key: self.other})
        self.assertIn(self.key, e.message)
        self.assertEqual(self.name, e.name)

    def test_same_value(self):
        entry = catalog.get(self.name, **{self.key: self.fixed})
        self.assertEqual(self.fixed, entry.params[self.key])
        self.assertEqual(catalog.get(self.name).algebra, entry.algebra)

    def test_unparsable_value(self):
        self.assertRaises(exception.BadParams, catalog.get, self.name,
                          **{self.key: 'x'})


class CatalogErrorTestCase(base.TestCase):

    def test_unknown_name(self):
        self.assertRaises(exception.UnknownName, catalog.get, 'J_9_9')

    def test_unknown_parameter(self):
        e = self.assertRaises(exception.BadParams, catalog.get,
                              'J_2_lambda', mu=1)
        self.assertIn('mu', e.message)

    def test_alpha_zero(self):
        self.assertRaises(exception.BadParams, catalog.get, 'J_3_alpha_k',
                          alpha=0)

    def test_matrix_size(self):
        self.assertRaises(exception.BadParams, catalog.get, 'H_n', n=9)
        self.assertRaises(exception.BadParams, catalog.get, 'H_n', n='x')

    def test_degenerate_spin(self):
        self.assertRaises(exception.BadParams, catalog.get, 'SPIN',
                          q='1,0')

    def test_eta1_domain(self):
        self.assertRaises(exception.BadParams, catalog.get, 'J_5_0_1',
                          alpha=1, eta1=5)

    def test_bad_scalar(self):
        self.assertRaises(exception.BadParams, catalog.get, 'J_3_0_k',
                          k='x')

    def test_bad_params_are_invalid_input(self):
        self.assertTrue(issubclass(exception.BadParams,
                                   exception.InvalidInput))


class IsomorphismTestCase(base.TestCase):

    def test_two_dim(self):
        self.assertTrue(algebra.check_isomorphism(
            catalog.get('J_2_lambda', **{'lambda': '1/2'}).algebra,
            catalog.get('J_2_1').algebra, catalog.phi_2('1/2')))

    def test_three_dim_k(self):
        self.assertTrue(algebra.check_isomorphism(
            catalog.get('J_3_0_k', k=5).algebra,
            catalog.get('J_3_0_1').algebra, catalog.phi_3(5)))

    def test_three_dim_alpha_k(self):
        self.assertTrue(algebra.check_isomorphism(
            catalog.get('J_3_alpha_k', alpha=2, k=3).algebra,
            catalog.get('J_3_1_0').algebra, catalog.phi_alpha_k(2, 3)))

    def test_wrong_map(self):
        self.assertFalse(algebra.check_isomorphism(
            catalog.get('J_3_0_k', k=5).algebra,
            catalog.get('J_3_0_1').algebra, Matrix.identity(3)))


class TensorExampleTestCase(base.TestCase):

    def test_unit_tensor(self):
        example = catalog.tensor_symplectic_example('UNIT_1', 2,
                                                    conf=self.cfg)
        self.assertEqual(4, example.P.dim)
        self.assertEqual(Matrix.diagonal([1, 2, -1, -2]), example.Dbar)
        self.assertEqual(('eX1', 'eX2'), example.base.basis)

    def test_unit_tensor_structures(self):
        example = catalog.tensor_symplectic_example('UNIT_1', 2,
                                                    conf=self.cfg)
        p = example.P
        s = symplectic.symplectic_from_derivation(p, example.Dbar)
        self.assertTrue(symplectic.check_symplectic(p.algebra, s.omega).ok)
        self.assertTrue(algebra.is_nilpotent(p.algebra))
        self.assertTrue(tkk.check_condition_d1(p, example.Dbar))

        r = symplectic.rmatrix_from_symplectic(p, s.omega)
        report = symplectic.ybe_check(p, r)
        self.assertTrue(report.cjr_zero)
        self.assertTrue(report.morphism)
        self.assertEqual(example.Dbar, report.U.inverse())

        m = manin.spectral_split(p, s.omega)
        self.assertTrue(manin.check_manin(*m).ok)
        self.assertEqual(linalg.Subspace(4, [[1, 0, 0, 0], [0, 1, 0, 0]]),
                         m.U)
        self.assertEqual(linalg.Subspace(4, [[0, 0, 1, 0], [0, 0, 0, 1]]),
                         m.V)
