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

"""
Exact rational linear algebra.

Every scalar is a `fractions.Fraction`. Vectors are tuples of fractions,
matrices are immutable `Matrix` objects acting on column vectors, and spans
are `Subspace` objects kept in reduced row-echelon form so that two spans of
the same space compare equal:

..code:: python

    from jforge import linalg

    m = linalg.Matrix([[1, 2], [2, 4]])
    ker = m.kernel()
    assert ker == linalg.Subspace(2, [[-2, 1]])

    res = linalg.solve_and_kernel(linalg.Matrix.identity(2), [1, 0])
    assert res.solution == (1, 0)
"""

import collections
import fractions
import logging

import sympy

from jforge import exception

LOG = logging.getLogger(__name__)

Fraction = fractions.Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

SolveResult = collections.namedtuple('SolveResult', 'solution kernel')
EigenSpace = collections.namedtuple('EigenSpace', 'value space')


def to_fraction(value):
    """Converts an int, Fraction or "p/q" string into a Fraction.

    Floats are refused: nothing in this package is allowed to round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise exception.InvalidInput(reason='boolean is not a scalar')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise exception.InvalidInput(
                reason='cannot parse scalar %r' % value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise exception.InvalidInput(
        reason='unsupported scalar %r of type %s' % (
            value, type(value).__name__))


def format_scalar(value):
    """Returns "p" or "p/q" in lowest terms."""
    return str(to_fraction(value))


def vector(values):
    return tuple(to_fraction(v) for v in values)


def zeros(n):
    return (ZERO,) * n


def unit(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero(v):
    return not any(v)


def combine(coefficients, vectors, n):
    """Returns sum(c * v) over paired coefficients and vectors of length n."""
    acc = [ZERO] * n
    for c, v in zip(coefficients, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] += c * a
    return tuple(acc)


def _rref(rows, ncols):
    """Gauss-Jordan elimination. Returns (reduced rows, pivot columns); the
    first len(pivots) rows are the nonzero ones.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        if lead != ONE:
            m[r] = [v / lead for v in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


class Matrix(object):
    """Immutable matrix of Fractions acting on column vectors."""

    __slots__ = ('_rows', 'nrows', 'ncols')

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(to_fraction(v) for v in row) for row in rows)
        if rows:
            widths = set(len(r) for r in rows)
            if len(widths) != 1:
                raise exception.DimensionMismatch(reason='ragged rows')
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise exception.DimensionMismatch(
                    reason='rows have %d columns, expected %d' % (
                        width, ncols))
        else:
            width = ncols or 0
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def _raw(cls, rows, ncols):
        m = cls.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, nrows, ncols=None):
        if ncols is None:
            ncols = nrows
        return cls._raw(tuple((ZERO,) * ncols for _i in range(nrows)), ncols)

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(unit(n, i) for i in range(n)), n)

    @classmethod
    def diagonal(cls, values):
        values = vector(values)
        n = len(values)
        rows = []
        for i, v in enumerate(values):
            row = [ZERO] * n
            row[i] = v
            rows.append(tuple(row))
        return cls._raw(tuple(rows), n)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [vector(c) for c in columns]
        if not columns:
            return cls.zeros(nrows or 0, 0)
        if nrows is None:
            nrows = len(columns[0])
        for c in columns:
            if len(c) != nrows:
                raise exception.DimensionMismatch(
                    reason='column of length %d, expected %d' % (
                        len(c), nrows))
        rows = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls._raw(rows, len(columns))

    @classmethod
    def block_diagonal(cls, *blocks):
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = []
        col = 0
        for b in blocks:
            for r in b.rows:
                rows.append((ZERO,) * col + r + (ZERO,) * (m - col - b.ncols))
            col += b.ncols
        assert len(rows) == n
        return cls._raw(tuple(rows), m)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash((self.nrows, self.ncols, self._rows))

    def __repr__(self):
        body = ', '.join(
            '[' + ', '.join(format_scalar(v) for v in r) + ']'
            for r in self._rows)
        return 'Matrix(%dx%d: %s)' % (self.nrows, self.ncols, body)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise exception.DimensionMismatch(
                reason='%s vs %s' % (self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(add(a, b) for a, b in zip(self._rows, other._rows)),
            self.ncols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(sub(a, b) for a, b in zip(self._rows, other._rows)),
            self.ncols)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        c = to_fraction(c)
        return Matrix._raw(tuple(scale(c, r) for r in self._rows), self.ncols)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise exception.DimensionMismatch(
                reason='cannot multiply %s by %s' % (self.shape, other.shape))
        other_rows = other._rows
        width = other.ncols
        out = []
        for r in self._rows:
            acc = [ZERO] * width
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(other_rows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(tuple(out), width)

    def apply(self, v):
        if len(v) != self.ncols:
            raise exception.DimensionMismatch(
                reason='vector of length %d for %s matrix' % (
                    len(v), self.shape))
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(
            sum((r[k] * a for k, a in nz), ZERO) for r in self._rows)

    def transpose(self):
        if not self._rows:
            return Matrix.zeros(self.ncols, 0)
        return Matrix._raw(tuple(zip(*self._rows)), self.nrows)

    @property
    def T(self):
        return self.transpose()

    def is_square(self):
        return self.nrows == self.ncols

    def _require_square(self):
        if not self.is_square():
            raise exception.DimensionMismatch(
                reason='square matrix required, got %s' % (self.shape,))

    def trace(self):
        self._require_square()
        return sum((self._rows[i][i] for i in range(self.nrows)), ZERO)

    def is_zero(self):
        return not any(any(r) for r in self._rows)

    def is_symmetric(self):
        return self.is_square() and self == self.transpose()

    def is_antisymmetric(self):
        return self.is_square() and self == -self.transpose()

    def flatten(self):
        return tuple(v for r in self._rows for v in r)

    def rref(self):
        m, pivots = _rref(self._rows, self.ncols)
        return Matrix._raw(tuple(tuple(r) for r in m), self.ncols), pivots

    def rank(self):
        return len(_rref(self._rows, self.ncols)[1])

    def det(self):
        self._require_square()
        m = [list(r) for r in self._rows]
        n = self.nrows
        det = ONE
        for c in range(n):
            pivot = None
            for i in range(c, n):
                if m[i][c]:
                    pivot = i
                    break
            if pivot is None:
                return ZERO
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            lead = m[c][c]
            det *= lead
            for i in range(c + 1, n):
                f = m[i][c] / lead
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self):
        self._require_square()
        n = self.nrows
        aug = [r + unit(n, i) for i, r in enumerate(self._rows)]
        m, pivots = _rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise exception.SingularMatrix()
        return Matrix._raw(tuple(tuple(r[n:]) for r in m), n)

    def is_invertible(self):
        return self.is_square() and self.rank() == self.nrows

    def power(self, k):
        self._require_square()
        result = Matrix.identity(self.nrows)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_nilpotent(self):
        self._require_square()
        return self.power(self.nrows).is_zero()

    def kernel(self):
        """Returns the null space as a Subspace of the column space."""
        m, pivots = _rref(self._rows, self.ncols)
        pivot_set = set(pivots)
        vectors = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for r, p in enumerate(pivots):
                v[p] = -m[r][f]
            vectors.append(v)
        return Subspace(self.ncols, vectors)

    def image(self):
        """Returns the column space as a Subspace."""
        return Subspace(self.nrows, self.columns())


def commutator(a, b):
    return a @ b - b @ a


def stack(matrices, ncols):
    """Stacks matrices with ncols columns vertically into one matrix."""
    rows = []
    for m in matrices:
        if m.ncols != ncols:
            raise exception.DimensionMismatch(
                reason='cannot stack %s under width %d' % (m.shape, ncols))
        rows.extend(m.rows)
    return Matrix._raw(tuple(rows), ncols)


class Subspace(object):
    """A span kept in reduced row-echelon form."""

    __slots__ = ('ambient_dim', 'basis', 'pivots')

    def __init__(self, ambient_dim, vectors=()):
        rows = []
        for v in vectors:
            v = vector(v)
            if len(v) != ambient_dim:
                raise exception.DimensionMismatch(
                    reason='vector of length %d in ambient dimension %d' % (
                        len(v), ambient_dim))
            rows.append(v)
        m, pivots = _rref(rows, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in m[:len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def full(cls, n):
        return cls(n, [unit(n, i) for i in range(n)])

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and
                self.basis == other.basis)

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return 'Subspace(%d, [%s])' % (
            self.ambient_dim,
            ', '.join('(' + ', '.join(format_scalar(a) for a in b) + ')'
                      for b in self.basis))

    def _check_ambient(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise exception.DimensionMismatch(
                reason='ambient %d vs %d' % (
                    self.ambient_dim, other.ambient_dim))

    def reduce(self, v):
        """Returns v minus its echelon projection onto this span."""
        v = list(vector(v))
        if len(v) != self.ambient_dim:
            raise exception.DimensionMismatch(
                reason='vector of length %d in ambient dimension %d' % (
                    len(v), self.ambient_dim))
        for b, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * x for a, x in zip(v, b)]
        return tuple(v)

    def contains(self, v):
        return is_zero(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v):
        """Coefficients of v on the canonical basis."""
        if not self.contains(v):
            raise exception.InvalidInput(reason='vector not in subspace')
        v = vector(v)
        return tuple(v[p] for p in self.pivots)

    def issubset(self, other):
        self._check_ambient(other)
        return all(other.contains(b) for b in self.basis)

    def sum(self, other):
        self._check_ambient(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    __add__ = sum

    def annihilator(self):
        """Vectors whose dot product with every member is zero."""
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return Matrix._raw(self.basis, self.ambient_dim).kernel()

    def intersect(self, other):
        self._check_ambient(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    __and__ = intersect

    def complement(self):
        """Standard basis vectors at the non-pivot columns."""
        pivots = set(self.pivots)
        n = self.ambient_dim
        return Subspace(n, [unit(n, i) for i in range(n) if i not in pivots])

    def complement_vectors(self):
        pivots = set(self.pivots)
        n = self.ambient_dim
        return [unit(n, i) for i in range(n) if i not in pivots]

    def image_under(self, m):
        if m.ncols != self.ambient_dim:
            raise exception.DimensionMismatch(
                reason='%s matrix on ambient %d' % (m.shape,
                                                    self.ambient_dim))
        return Subspace(m.nrows, [m.apply(b) for b in self.basis])

    def as_matrix(self):
        """Basis vectors as the columns of an ambient_dim x dim matrix."""
        return Matrix.from_columns(self.basis, self.ambient_dim)


class Frame(object):
    """A fixed, not necessarily echelon, basis of a span.

    Coordinates are computed through an invertible square block picked from
    independent rows, so repeated decompositions cost one matrix-vector
    product plus a membership check.
    """

    def __init__(self, ambient_dim, vectors):
        self.ambient_dim = ambient_dim
        self.vectors = tuple(vector(v) for v in vectors)
        size = len(self.vectors)
        if size == 0:
            self._rows = ()
            self._inverse = Matrix.zeros(0)
            return
        columns = Matrix.from_columns(self.vectors, ambient_dim)
        _m, rows = _rref(columns.transpose().rows, ambient_dim)
        if len(rows) != size:
            raise exception.InvalidInput(reason='frame vectors are dependent')
        self._rows = tuple(rows)
        block = Matrix._raw(tuple(columns.row(r) for r in rows), size)
        self._inverse = block.inverse()

    @property
    def dim(self):
        return len(self.vectors)

    def combine(self, coefficients):
        return combine(coefficients, self.vectors, self.ambient_dim)

    def coordinates(self, v):
        """Coefficients of v on the frame; InvalidInput if v is outside."""
        v = vector(v)
        coords = self._inverse.apply(tuple(v[r] for r in self._rows))
        if self.combine(coords) != v:
            raise exception.InvalidInput(reason='vector not in span')
        return coords

    def contains(self, v):
        try:
            self.coordinates(v)
        except exception.InvalidInput:
            return False
        return True


def solve_and_kernel(a, b=None):
    """Solves a x = b exactly.

    Returns SolveResult(solution, kernel) where solution is None when the
    system is inconsistent; with b omitted the homogeneous system is solved.

    :param a: `Matrix`
    :param b: sequence of a.nrows scalars, or None
    """
    if b is None:
        b = zeros(a.nrows)
    b = vector(b)
    if len(b) != a.nrows:
        raise exception.DimensionMismatch(
            reason='right-hand side of length %d for %s matrix' % (
                len(b), a.shape))
    n = a.ncols
    aug = [r + (c,) for r, c in zip(a.rows, b)]
    m, pivots = _rref(aug, n + 1)
    kernel = a.kernel()
    if pivots and pivots[-1] == n:
        return SolveResult(None, kernel)
    x = [ZERO] * n
    for r, p in enumerate(pivots):
        x[p] = m[r][n]
    return SolveResult(tuple(x), kernel)


def subspace_algebra(u, v, op):
    """Applies op ('sum', 'intersect', 'equals' or 'contains') to u and v.

    'contains' answers whether v is a subspace of u.
    """
    u._check_ambient(v)
    if op == 'sum':
        return u.sum(v)
    if op == 'intersect':
        return u.intersect(v)
    if op == 'equals':
        return u == v
    if op == 'contains':
        return v.issubset(u)
    raise exception.InvalidInput(reason='unknown subspace operation %r' % op)


def _sympy_matrix(m):
    return sympy.Matrix(
        m.nrows, m.ncols,
        [sympy.Rational(v.numerator, v.denominator) for v in m.flatten()])


def rational_spectral(a):
    """Generalized eigenspaces of a square matrix over the rationals.

    Returns a list of EigenSpace(value, space) sorted by eigenvalue, where
    space is ker (a - value)^n. Raises SplitFailure listing the irreducible
    non-linear factors when the characteristic polynomial does not split.
    """
    a._require_square()
    n = a.nrows
    if n == 0:
        return []
    x = sympy.Symbol('x')
    charpoly = _sympy_matrix(a).charpoly(x)
    _coeff, factors = charpoly.factor_list()
    roots = []
    nonlinear = []
    for f, _mult in factors:
        if f.degree() == 1:
            c1, c0 = f.all_coeffs()
            root = sympy.Rational(-c0, c1)
            roots.append(Fraction(int(root.p), int(root.q)))
        elif f.degree() > 1:
            nonlinear.append(str(f.as_expr()))
    if nonlinear:
        LOG.debug("characteristic polynomial %s does not split",
                  charpoly.as_expr())
        raise exception.SplitFailure(factors=sorted(nonlinear))

    result = []
    total = 0
    for value in sorted(set(roots)):
        shifted = a - Matrix.identity(n).scale(value)
        space = shifted.power(n).kernel()
        total += space.dim
        result.append(EigenSpace(value, space))
    if total != n:
        raise exception.VerificationFailed(
            what='generalized eigenspace decomposition',
            detail='dimensions add up to %d, not %d' % (total, n))
    return result
