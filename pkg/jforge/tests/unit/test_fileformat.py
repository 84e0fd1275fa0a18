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

from jforge import catalog
from jforge import exception
from jforge import extension
from jforge import fileformat
from jforge import linalg
from jforge import manin
from jforge.tests.base import F
from jforge.tests import fixtures as jfixtures
from jforge.tests.unit import base

Matrix = linalg.Matrix
Subspace = linalg.Subspace

BASIS = ['a1', 'b1']


def j21_doc(**extra):
    doc = {
        'name': 'J_2_1',
        'dim': 2,
        'basis': list(BASIS),
        'mul': {'a1.a1': {'b1': '1'}},
        'form': {'a1.b1': '1'},
    }
    doc.update(extra)
    return doc


class ParseAlgebraTestCase(base.TestCase):

    def test_parse(self):
        parsed = fileformat.parse_algebra(j21_doc())
        self.assertEqual('J_2_1', parsed.name)
        self.assertEqual(catalog.get('J_2_1').algebra, parsed.algebra)
        self.assertEqual(Matrix([[0, 1], [1, 0]]), parsed.form)
        self.assertIsNone(parsed.omega)
        self.assertEqual({}, parsed.subspaces)

    def test_symmetric_completion(self):
        doc = j21_doc(mul={'a1.b1': {'b1': '1/2'}})
        parsed = fileformat.parse_algebra(doc, verify=False)
        self.assertEqual((0, F(1) / 2), parsed.algebra.product(1, 0))

    def test_omega_and_subspaces(self):
        doc = j21_doc(omega={'a1.b1': '1'},
                      subspaces={'U': [{'a1': '1'}], 'V': [{'b1': '2'}]})
        parsed = fileformat.parse_algebra(doc)
        self.assertEqual(Matrix([[0, 1], [-1, 0]]), parsed.omega)
        self.assertEqual(Subspace(2, [[1, 0]]), parsed.subspaces['U'])
        self.assertEqual(Subspace(2, [[0, 1]]), parsed.subspaces['V'])

    def test_empty_basis(self):
        parsed = fileformat.parse_algebra({'basis': []})
        self.assertEqual(0, parsed.algebra.dim)

    def assertField(self, field, doc, **kwargs):
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.parse_algebra, doc, **kwargs)
        self.assertEqual(field, e.field)
        return e

    def test_unknown_label(self):
        e = self.assertField('mul.a1.c1',
                             j21_doc(mul={'a1.c1': {'b1': '1'}}))
        self.assertIn("'c1'", e.message)

    def test_unknown_image_label(self):
        self.assertField('mul.a1.a1.c1',
                         j21_doc(mul={'a1.a1': {'c1': '1'}}))

    def test_float_scalar(self):
        self.assertField('mul.a1.a1.b1',
                         j21_doc(mul={'a1.a1': {'b1': 0.5}}))

    def test_bad_scalar(self):
        self.assertField('form.a1.b1', j21_doc(form={'a1.b1': 'x'}))

    def test_bad_key(self):
        self.assertField('form', j21_doc(form={'a1': '1'}))

    def test_dim_mismatch(self):
        self.assertField('dim', j21_doc(dim=3))

    def test_unknown_key(self):
        self.assertField('foo', j21_doc(foo=1))

    def test_missing_basis(self):
        self.assertField('basis', {'mul': {}})

    def test_duplicate_labels(self):
        self.assertField('basis', j21_doc(basis=['a1', 'a1']))

    def test_conflicting_products(self):
        self.assertField('mul', j21_doc(mul={'a1.b1': {'b1': '1'},
                                             'b1.a1': {'b1': '2'}}))

    def test_antisymmetric_diagonal(self):
        self.assertField('omega', j21_doc(omega={'a1.a1': '1'}))

    def test_not_jordan(self):
        doc = {'basis': ['x', 'y'],
               'mul': {'x.x': {'y': '1'}, 'x.y': {'x': '1'}}}
        self.assertField('mul', doc)

    def test_bad_invalid_input(self):
        self.assertTrue(issubclass(exception.AlgebraFileError,
                                   exception.InvalidInput))


class LoadTestCase(base.TestCase):

    def setUp(self):
        super(LoadTestCase, self).setUp()
        self.workspace = self.useFixture(jfixtures.AlgebraWorkspace())

    def test_syntax_error(self):
        path = self.workspace.write_text('bad.json', '{"basis": [}')
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.load_json, path)
        self.assertTrue(e.field.startswith('line 1 column'))
        self.assertEqual(path, e.path)

    def test_missing_file(self):
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.load_json,
                              self.workspace.join('missing.json'))
        self.assertEqual('-', e.field)

    def test_file_round_trip(self):
        entry = catalog.get('J_3_0_1')
        path = self.workspace.write(
            'j.json', fileformat.dump_algebra(entry.algebra, form=entry.form))
        parsed = fileformat.parse_algebra_file(path)
        self.assertEqual(entry.algebra, parsed.algebra)
        self.assertEqual(entry.form, parsed.form)
        self.assertEqual('J_3_0_1', parsed.name)

    def test_operator_file(self):
        path = self.workspace.write('d.json', {'D': {'a1': {'a1': '1'},
                                                     'b1': {'b1': '2'}}})
        self.assertEqual(Matrix([[1, 0], [0, 2]]),
                         fileformat.parse_operator_file(path, BASIS))

    def test_operator_file_missing_key(self):
        path = self.workspace.write('d.json', {'E': {}})
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.parse_operator_file, path, BASIS)
        self.assertEqual('D', e.field)


class DumpTestCase(base.TestCase):

    def test_dump_algebra(self):
        entry = catalog.get('J_2_1')
        doc = fileformat.dump_algebra(entry.algebra, form=entry.form,
                                      omega=[[0, 1], [-1, 0]],
                                      subspaces={'U': Subspace(2, [[1, 0]])})
        self.assertEqual(j21_doc(omega={'a1.b1': '1'},
                                 subspaces={'U': [{'a1': '1'}]}), doc)

    def test_dump_operator(self):
        m = Matrix([[0, 0], [F(1) / 3, 0]])
        self.assertEqual({'a1': {'b1': '1/3'}},
                         fileformat.dump_operator(BASIS, m))

    def test_pair_round_trip(self):
        pair = extension.AdmissiblePair(Matrix([[0, 0], [2, 0]]), (0, 1),
                                        F(1) / 2)
        doc = fileformat.dump_pair(BASIS, pair, a0=(1, 0), lam=-1)
        self.assertEqual({'D': {'a1': {'b1': '2'}}, 'x0': {'b1': '1'},
                          'k': '1/2', 'a0': {'a1': '1'}, 'lambda': '-1'},
                         doc)
        parsed = fileformat.parse_pair(doc, BASIS)
        self.assertEqual(pair.D, parsed.pair.D)
        self.assertEqual((0, 1), parsed.pair.x0)
        self.assertEqual(F(1) / 2, parsed.pair.k)
        self.assertEqual((1, 0), parsed.a0)
        self.assertEqual(-1, parsed.lam)


class ParseAuxiliaryTestCase(base.TestCase):

    def test_pair_defaults(self):
        parsed = fileformat.parse_pair({}, BASIS)
        self.assertTrue(parsed.pair.D.is_zero())
        self.assertEqual((0, 0), parsed.pair.x0)
        self.assertEqual(0, parsed.pair.k)
        self.assertIsNone(parsed.a0)
        self.assertIsNone(parsed.lam)

    def test_pair_unknown_key(self):
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.parse_pair, {'mu': '1'}, BASIS)
        self.assertEqual('mu', e.field)

    def test_rmatrix(self):
        self.assertEqual(Matrix([[0, 1], [-1, 0]]),
                         fileformat.parse_rmatrix({'r': {'a1.b1': '1'}},
                                                  BASIS))

    def test_rmatrix_missing(self):
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.parse_rmatrix, {}, BASIS)
        self.assertEqual('r', e.field)

    def test_comultiplication(self):
        t = fileformat.parse_comultiplication(
            {'delta': {'a1': {'a1.b1': '1'}}}, BASIS)
        self.assertEqual(1, t[0][0][1])
        self.assertEqual(0, t[0][1][0])
        self.assertEqual([[0, 0], [0, 0]], t[1])

    def test_action(self):
        ops = fileformat.parse_action({'action': {'x': {'e': {'e': '1'}}}},
                                      ['x', 'y'], ['e'])
        self.assertEqual([Matrix([[1]]), Matrix([[0]])], ops)

    def test_action_unknown_label(self):
        e = self.assertRaises(exception.AlgebraFileError,
                              fileformat.parse_action,
                              {'action': {'z': {}}}, ['x'], ['e'])
        self.assertEqual('action.z', e.field)

    def test_cocycle(self):
        n, entries = fileformat.parse_cocycle(
            {'cocycle': {'a1.a1': {'v1': '1'}}}, BASIS, ['v1'])
        self.assertEqual(2, n)
        self.assertEqual({(0, 0): (1,)}, entries)


class ReportTestCase(base.TestCase):

    def test_to_json(self):
        self.assertEqual('1/2', fileformat.to_json(F(1) / 2))
        self.assertEqual([['1', '0'], ['0', '-1']],
                         fileformat.to_json(Matrix([[1, 0], [0, -1]])))
        self.assertEqual({'dim': 1, 'basis': [['0', '1']]},
                         fileformat.to_json(Subspace(2, [[0, 3]])))
        self.assertEqual({'ok': False, 'failed_condition': 'U isotropic'},
                         fileformat.to_json(
                             manin.ManinReport(False, manin.U_ISOTROPIC)))

    def test_pseudo_euclidean(self):
        doc = fileformat.to_json(catalog.get('J_2_1').pseudo_euclidean)
        self.assertEqual(j21_doc(), doc)

    def test_emit_report(self):
        text = fileformat.emit_report({'b': F(1) / 2, 'a': True})
        self.assertEqual('{\n  "a": true,\n  "b": "1/2"\n}\n', text)

    def test_emit_is_deterministic(self):
        entry = catalog.get('J_4_1', beta=1, k=3)
        doc = fileformat.dump_algebra(entry.algebra, form=entry.form)
        self.assertEqual(fileformat.emit_report(doc),
                         fileformat.emit_report(dict(reversed(
                             list(doc.items())))))
