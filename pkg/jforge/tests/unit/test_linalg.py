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

from jforge import exception
from jforge import linalg
from jforge.tests.base import F
from jforge.tests.unit import base

Matrix = linalg.Matrix
Subspace = linalg.Subspace

small_ints = st.integers(min_value=-3, max_value=3)
square3 = st.lists(st.lists(small_ints, min_size=3, max_size=3),
                   min_size=3, max_size=3)


class ScalarTestCase(base.TestCase):

    def test_to_fraction_string(self):
        self.assertEqual(F(1) / 3, linalg.to_fraction('1/3'))
        self.assertEqual(F(-2), linalg.to_fraction(' -2 '))

    def test_to_fraction_refuses_float(self):
        self.assertRaises(exception.InvalidInput, linalg.to_fraction, 0.5)

    def test_to_fraction_refuses_bool(self):
        self.assertRaises(ValueError, linalg.to_fraction, True)

    def test_to_fraction_bad_string(self):
        self.assertRaises(exception.InvalidInput, linalg.to_fraction, '1/0')
        self.assertRaises(exception.InvalidInput, linalg.to_fraction, 'x')

    def test_format_scalar(self):
        self.assertEqual('2/3', linalg.format_scalar('4/6'))
        self.assertEqual('-5', linalg.format_scalar(-5))

    def test_combine(self):
        v = linalg.combine([1, 2], [(1, 0), (0, 1)], 2)
        self.assertEqual((1, 2), v)


class DeterminantTestCase(testscenarios.WithScenarios, base.TestCase):

    scenarios = [
        ('empty', dict(rows=[], det=1)),
        ('identity', dict(rows=[[1, 0], [0, 1]], det=1)),
        ('swap', dict(rows=[[0, 1], [1, 0]], det=-1)),
        ('singular', dict(rows=[[1, 2], [2, 4]], det=0)),
        ('rational', dict(rows=[['1/2', 0], [3, 4]], det=2)),
        ('upper3', dict(rows=[[2, 1, 5], [0, 3, 7], [0, 0, '1/6']], det=1)),
    ]

    def test_det(self):
        self.assertEqual(F(self.det), Matrix(self.rows).det())


class MatrixTestCase(base.TestCase):

    def test_ragged_rows(self):
        self.assertRaises(exception.DimensionMismatch, Matrix,
                          [[1, 2], [3]])

    def test_product_and_transpose(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 1], [1, 0]])
        self.assertEqual(Matrix([[2, 1], [4, 3]]), a @ b)
        self.assertEqual(Matrix([[1, 3], [2, 4]]), a.T)

    def test_product_shape_mismatch(self):
        self.assertRaises(exception.DimensionMismatch,
                          Matrix([[1, 2]]).__matmul__, Matrix([[1, 2]]))

    def test_from_columns(self):
        m = Matrix.from_columns([(1, 2), (3, 4)])
        self.assertEqual((1, 3), m.row(0))
        self.assertEqual((3, 4), m.column(1))

    def test_block_diagonal(self):
        m = Matrix.block_diagonal(Matrix([[1]]), Matrix([[2, 3], [4, 5]]))
        self.assertEqual(Matrix([[1, 0, 0], [0, 2, 3], [0, 4, 5]]), m)

    def test_inverse(self):
        a = Matrix([[2, 1], [1, 1]])
        self.assertEqual(Matrix([[1, -1], [-1, 2]]), a.inverse())

    def test_inverse_singular(self):
        self.assertRaises(exception.SingularMatrix,
                          Matrix([[1, 2], [2, 4]]).inverse)

    def test_empty_inverse(self):
        self.assertEqual(Matrix.zeros(0), Matrix.zeros(0).inverse())

    def test_nilpotent(self):
        self.assertTrue(Matrix([[0, 1], [0, 0]]).is_nilpotent())
        self.assertFalse(Matrix([[1, 0], [0, 0]]).is_nilpotent())

    def test_symmetry(self):
        self.assertTrue(Matrix([[1, 2], [2, 1]]).is_symmetric())
        self.assertTrue(Matrix([[0, 2], [-2, 0]]).is_antisymmetric())
        self.assertFalse(Matrix([[1, 2], [0, 1]]).is_symmetric())

    def test_kernel_and_image(self):
        m = Matrix([[1, 2], [2, 4]])
        self.assertEqual(Subspace(2, [[-2, 1]]), m.kernel())
        self.assertEqual(Subspace(2, [[1, 2]]), m.image())

    def test_power(self):
        m = Matrix([[1, 1], [0, 1]])
        self.assertEqual(Matrix([[1, 5], [0, 1]]), m.power(5))

    def test_commutator(self):
        e = Matrix([[0, 1], [0, 0]])
        f = Matrix([[0, 0], [1, 0]])
        self.assertEqual(Matrix([[1, 0], [0, -1]]), linalg.commutator(e, f))

    @base.fuzz(50)
    @given(square3)
    def test_rank_nullity(self, rows):
        m = Matrix(rows)
        self.assertEqual(3, m.rank() + m.kernel().dim)

    @base.fuzz(50)
    @given(square3)
    def test_inverse_when_det_nonzero(self, rows):
        m = Matrix(rows)
        if m.det() == 0:
            self.assertRaises(exception.SingularMatrix, m.inverse)
        else:
            self.assertEqual(Matrix.identity(3), m @ m.inverse())


class SubspaceTestCase(base.TestCase):

    def test_echelon_equality(self):
        self.assertEqual(Subspace(3, [[1, 1, 0], [0, 1, 0]]),
                         Subspace(3, [[1, 0, 0], [0, 2, 0]]))

    def test_wrong_length(self):
        self.assertRaises(exception.DimensionMismatch, Subspace, 2,
                          [[1, 2, 3]])

    def test_contains_and_coordinates(self):
        s = Subspace(3, [[1, 0, 1], [0, 1, 1]])
        self.assertIn((2, 3, 5), s)
        self.assertEqual((2, 3), s.coordinates((2, 3, 5)))
        self.assertNotIn((0, 0, 1), s)
        self.assertRaises(exception.InvalidInput, s.coordinates, (0, 0, 1))

    def test_sum_and_intersection(self):
        u = Subspace(3, [[1, 0, 0], [0, 1, 0]])
        v = Subspace(3, [[0, 1, 0], [0, 0, 1]])
        self.assertTrue((u + v).is_full())
        self.assertEqual(Subspace(3, [[0, 1, 0]]), u & v)

    def test_annihilator(self):
        s = Subspace(3, [[1, 1, 0]])
        self.assertEqual(Subspace(3, [[-1, 1, 0], [0, 0, 1]]),
                         s.annihilator())
        self.assertTrue(Subspace.zero(3).annihilator().is_full())

    def test_complement(self):
        s = Subspace(3, [[1, 1, 0]])
        c = s.complement()
        self.assertEqual(2, c.dim)
        self.assertTrue((s + c).is_full())

    def test_image_under(self):
        s = Subspace(2, [[1, 0]])
        m = Matrix([[0, 0], [1, 0]])
        self.assertEqual(Subspace(2, [[0, 1]]), s.image_under(m))

    def test_subspace_algebra(self):
        u = Subspace(2, [[1, 0]])
        full = Subspace.full(2)
        self.assertTrue(linalg.subspace_algebra(full, u, 'contains'))
        self.assertFalse(linalg.subspace_algebra(u, full, 'equals'))
        self.assertRaises(exception.InvalidInput, linalg.subspace_algebra,
                          u, full, 'bogus')


class FrameTestCase(base.TestCase):

    def test_coordinates(self):
        fr = linalg.Frame(3, [(1, 1, 0), (0, 1, 1)])
        self.assertEqual((2, 3), fr.coordinates((2, 5, 3)))
        self.assertFalse(fr.contains((1, 0, 0)))

    def test_dependent(self):
        self.assertRaises(exception.InvalidInput, linalg.Frame, 2,
                          [(1, 2), (2, 4)])


class SolveTestCase(base.TestCase):

    def test_unique_solution(self):
        res = linalg.solve_and_kernel(Matrix([[1, 1], [1, -1]]), [3, 1])
        self.assertEqual((2, 1), res.solution)
        self.assertTrue(res.kernel.is_zero())

    def test_inconsistent(self):
        res = linalg.solve_and_kernel(Matrix([[1, 1], [1, 1]]), [1, 2])
        self.assertIsNone(res.solution)
        self.assertEqual(1, res.kernel.dim)

    def test_rhs_length(self):
        self.assertRaises(exception.DimensionMismatch,
                          linalg.solve_and_kernel, Matrix([[1]]), [1, 2])


class SpectralTestCase(base.TestCase):

    def test_split(self):
        m = Matrix([[2, 1], [0, 2]])
        spaces = linalg.rational_spectral(m)
        self.assertEqual(1, len(spaces))
        self.assertEqual(2, spaces[0].value)
        self.assertTrue(spaces[0].space.is_full())

    def test_sorted_values(self):
        spaces = linalg.rational_spectral(Matrix.diagonal([3, '-1/2', 3]))
        self.assertEqual([F('-1/2'), F(3)], [s.value for s in spaces])
        self.assertEqual([1, 2], [s.space.dim for s in spaces])

    def test_empty(self):
        self.assertEqual([], linalg.rational_spectral(Matrix.zeros(0)))

    def test_split_failure(self):
        e = self.assertRaises(exception.SplitFailure,
                              linalg.rational_spectral,
                              Matrix([[0, -1], [1, 0]]))
        self.assertEqual(['x**2 + 1'], e.factors)
