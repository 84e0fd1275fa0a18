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
Finite-dimensional Jordan algebras given by structure constants.

A `JordanAlgebra` holds a list of basis labels and the products of basis
vectors, ``e_i e_j = sum_k c[i][j][k] e_k``. Elements are coordinate tuples
of Fractions. The multiplication operator ``R_x`` is a `linalg.Matrix`
whose column j is ``x e_j``.

..code:: python

    from jforge import algebra

    j21 = algebra.JordanAlgebra.from_products(
        ['a1', 'b1'], {('a1', 'a1'): {'b1': 1}}, name='J_2_1')
    report = algebra.check_jordan(j21)
    assert report.jordan

The normative Jordan check is commutativity plus the linearized identity

    [R_{wz}, R_x] + [R_{zx}, R_w] + [R_{xw}, R_z] = 0

evaluated on every basis vector for every basis triple (w, z, x). Checking
x(yx^2) = (xy)x^2 on basis vectors only is not enough, because the identity
is not linear in x.
"""

import collections
import itertools
import logging

from jforge import exception
from jforge import linalg

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO

IdentityReport = collections.namedtuple(
    'IdentityReport', 'commutative jordan first_violation')
Violation = collections.namedtuple('Violation', 'identity index lhs rhs')
AlgebraStructure = collections.namedtuple(
    'AlgebraStructure', 'ann center square')
IdealClosure = collections.namedtuple(
    'IdealClosure', 'ideal is_ideal nilpotency_class')
Quotient = collections.namedtuple('Quotient', 'algebra projection lift')
Embedded = collections.namedtuple('Embedded', 'algebra inclusion')
OperatorIdentityReport = collections.namedtuple(
    'OperatorIdentityReport',
    'bracket_associator associator_identity first_violation')


def default_labels(n, prefix='e'):
    return ['%s%d' % (prefix, i + 1) for i in range(n)]


def _sparse(v):
    return tuple((k, c) for k, c in enumerate(v) if c)


class StructureTable(object):
    """Raw bilinear product on a basis, not necessarily commutative."""

    def __init__(self, table, basis=None, name=None):
        n = len(table)
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise exception.DimensionMismatch(
                    reason='row %d of the product table has %d entries, '
                           'expected %d' % (i, len(row), n))
            cells = []
            for j, cell in enumerate(row):
                cell = linalg.vector(cell)
                if len(cell) != n:
                    raise exception.DimensionMismatch(
                        reason='product e%d e%d has length %d, expected '
                               '%d' % (i + 1, j + 1, len(cell), n))
                cells.append(cell)
            rows.append(tuple(cells))
        if basis is None:
            basis = default_labels(n)
        basis = [str(b) for b in basis]
        if len(basis) != n:
            raise exception.DimensionMismatch(
                reason='%d labels for dimension %d' % (len(basis), n))
        if len(set(basis)) != n:
            raise exception.InvalidInput(reason='duplicate basis labels')
        self.dim = n
        self.basis = tuple(basis)
        self.name = name
        self._table = tuple(rows)
        self._nz = tuple(tuple(_sparse(c) for c in row) for row in rows)
        self._operators = {}

    @property
    def table(self):
        return self._table

    def product(self, i, j):
        return self._table[i][j]

    def index(self, label):
        try:
            return self.basis.index(label)
        except ValueError:
            raise exception.InvalidInput(
                reason='unknown basis label %r' % label)

    def unit(self, i):
        if not isinstance(i, int):
            i = self.index(i)
        return linalg.unit(self.dim, i)

    def element(self, coefficients):
        """Builds a vector from a {label: scalar} mapping."""
        v = [ZERO] * self.dim
        for label, c in coefficients.items():
            v[self.index(label)] += linalg.to_fraction(c)
        return tuple(v)

    def _check_vector(self, x):
        if len(x) != self.dim:
            raise exception.DimensionMismatch(
                reason='vector of length %d in algebra of dimension %d' % (
                    len(x), self.dim))

    def multiply(self, x, y):
        self._check_vector(x)
        self._check_vector(y)
        acc = [ZERO] * self.dim
        ys = _sparse(y)
        for i, a in _sparse(x):
            row = self._nz[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return tuple(acc)

    def left(self, i, y):
        """e_i y, with e_i given by index."""
        acc = [ZERO] * self.dim
        row = self._nz[i]
        for j, b in _sparse(y):
            for k, c in row[j]:
                acc[k] += b * c
        return tuple(acc)

    def square(self, x):
        return self.multiply(x, x)

    def operator(self, x):
        """R_x as a matrix: column j is x e_j."""
        x = tuple(x)
        self._check_vector(x)
        return linalg.Matrix.from_columns(
            [self.multiply(x, linalg.unit(self.dim, j))
             for j in range(self.dim)], self.dim)

    def basis_operator(self, i):
        op = self._operators.get(i)
        if op is None:
            op = self.operator(linalg.unit(self.dim, i))
            self._operators[i] = op
        return op

    def is_commutative(self):
        return self.commutativity_violation() is None

    def commutativity_violation(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self._table[i][j] != self._table[j][i]:
                    return Violation(
                        'commutativity', (self.basis[i], self.basis[j]),
                        self._table[i][j], self._table[j][i])
        return None

    def sparse_products(self):
        """Nonzero products e_i e_j for i <= j as {(i, j): vector}."""
        out = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                if any(self._table[i][j]):
                    out[(i, j)] = self._table[i][j]
        return out

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return (self.basis == other.basis and
                self._table == other._table)

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash((self.basis, self._table))

    def __repr__(self):
        return '<%s %s dim=%d>' % (
            self.__class__.__name__, self.name or '', self.dim)


class JordanAlgebra(StructureTable):
    """Commutative structure constants, expected to satisfy the Jordan
    identity (see `check_jordan` and `verify`).
    """

    def __init__(self, table, basis=None, name=None):
        super(JordanAlgebra, self).__init__(table, basis=basis, name=name)
        bad = self.commutativity_violation()
        if bad is not None:
            raise exception.NotJordanAlgebra(
                detail='e_i e_j != e_j e_i at %s' % (bad.index,))

    @classmethod
    def from_products(cls, basis, products, name=None):
        """Builds an algebra from sparse products.

        :param basis: list of labels
        :param products: mapping from (i, j) pairs, given either as indices
                         or as labels, to a vector or a {label: scalar}
                         mapping; the symmetric entry is filled in
        """
        basis = [str(b) for b in basis]
        n = len(basis)
        index = dict((b, i) for i, b in enumerate(basis))
        table = [[None] * n for _i in range(n)]

        def _idx(key):
            if isinstance(key, int):
                if not 0 <= key < n:
                    raise exception.InvalidInput(
                        reason='basis index %d out of range' % key)
                return key
            if key not in index:
                raise exception.InvalidInput(
                    reason='unknown basis label %r' % (key,))
            return index[key]

        for (a, b), value in products.items():
            i, j = _idx(a), _idx(b)
            if isinstance(value, dict):
                v = [ZERO] * n
                for label, c in value.items():
                    v[_idx(label)] += linalg.to_fraction(c)
                v = tuple(v)
            else:
                v = linalg.vector(value)
            for p, q in ((i, j), (j, i)):
                if table[p][q] is not None and table[p][q] != v:
                    raise exception.NotJordanAlgebra(
                        detail='conflicting products for %s %s' % (
                            basis[i], basis[j]))
                table[p][q] = v
        zero = linalg.zeros(n)
        table = [[c if c is not None else zero for c in row]
                 for row in table]
        return cls(table, basis=basis, name=name)

    @classmethod
    def zero(cls, n, basis=None, name=None):
        zero = linalg.zeros(n)
        return cls([[zero] * n for _i in range(n)], basis=basis, name=name)

    def verify(self):
        """Raises NotJordanAlgebra unless check_jordan passes."""
        report = check_jordan(self)
        if not report.jordan:
            LOG.warning("algebra %s fails the Jordan identity at %s",
                        self.name, report.first_violation.index)
            raise exception.NotJordanAlgebra(
                detail='%s identity fails at %s' % (
                    report.first_violation.identity,
                    report.first_violation.index))
        return self

    def relabel(self, basis=None, name=None):
        return JordanAlgebra(self._table, basis=basis or self.basis,
                             name=name if name is not None else self.name)


def _as_table(table):
    if isinstance(table, StructureTable):
        return table
    return StructureTable(table)


def check_jordan(table):
    """Verifies commutativity and the linearized Jordan identity.

    :param table: a `StructureTable`/`JordanAlgebra`, or a raw n x n nested
                  sequence of n-vectors (c[i][j] is the vector e_i e_j)
    :returns: `IdentityReport`
    """
    t = _as_table(table)
    n = t.dim
    bad = t.commutativity_violation()
    if bad is not None:
        return IdentityReport(False, False, bad)

    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        cyclic = ((i, j, k), (j, k, i), (k, i, j))
        for b in range(n):
            lhs = linalg.zeros(n)
            rhs = linalg.zeros(n)
            for p, q, r in cyclic:
                qr = t.product(q, r)
                lhs = linalg.add(lhs, t.multiply(t.product(p, b), qr))
                rhs = linalg.add(rhs, t.left(p, t.left(b, qr)))
            if lhs != rhs:
                index = (t.basis[b], t.basis[i], t.basis[j], t.basis[k])
                LOG.debug("Jordan identity fails at %s", index)
                return IdentityReport(
                    True, False, Violation('jordan', index, lhs, rhs))
    return IdentityReport(True, True, None)


def jordan_defect(table, x, y):
    """(xy)x^2 - x(yx^2) at the given elements."""
    t = _as_table(table)
    x2 = t.multiply(x, x)
    return linalg.sub(t.multiply(t.multiply(x, y), x2),
                      t.multiply(x, t.multiply(y, x2)))


def mult_operator(a, x):
    """R_x for the element x of a."""
    return a.operator(linalg.vector(x))


def associator(a, x, y, z):
    """(xy)z - x(yz)."""
    return linalg.sub(a.multiply(a.multiply(x, y), z),
                      a.multiply(x, a.multiply(y, z)))


def associator_space(a):
    n = a.dim
    vectors = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = linalg.sub(a.multiply(a.product(i, j), a.unit(k)),
                               a.left(i, a.product(j, k)))
                if any(v):
                    vectors.append(v)
    return linalg.Subspace(n, vectors)


def annihilator(a):
    n = a.dim
    if n == 0:
        return linalg.Subspace.zero(0)
    ops = [a.basis_operator(j) for j in range(n)]
    return linalg.stack(ops, n).kernel()


def square_space(a):
    n = a.dim
    return linalg.Subspace(
        n, [a.product(i, j) for i in range(n) for j in range(i, n)])


def center(a):
    """{x : (x,y,z) = (y,x,z) = (y,z,x) = 0 for all y, z}."""
    n = a.dim
    if n == 0:
        return linalg.Subspace.zero(0)
    blocks = []
    for y in range(n):
        ry = a.basis_operator(y)
        for z in range(n):
            rz = a.basis_operator(z)
            ryz = a.operator(a.product(y, z))
            rzry = rz @ ry
            ryrz = ry @ rz
            blocks.append(rzry - ryz)
            blocks.append(rzry - ryrz)
            blocks.append(ryz - ryrz)
    return linalg.stack(blocks, n).kernel()


def annulator_and_center(a):
    """Returns AlgebraStructure(ann, center, square)."""
    return AlgebraStructure(annihilator(a), center(a), square_space(a))


def product_space(a, u, v):
    """span{uv : u in U, v in V}."""
    n = a.dim
    return linalg.Subspace(
        n, [a.multiply(x, y) for x in u.basis for y in v.basis])


def is_subalgebra(a, s):
    return all(s.contains(a.multiply(x, y))
               for i, x in enumerate(s.basis) for y in s.basis[i:])


def is_ideal(a, s):
    return all(s.contains(a.left(i, v))
               for v in s.basis for i in range(a.dim))


def ideal_closure_space(a, seed):
    ideal = seed
    while True:
        grown = ideal.sum(linalg.Subspace(
            a.dim, [a.left(i, v) for v in ideal.basis
                    for i in range(a.dim)]))
        if grown == ideal:
            return ideal
        ideal = grown


def nilpotency_class(a):
    """Smallest k with C^k = 0 where C^1 = J and C^k = sum C^i C^(k-i).

    Returns None when the chain stabilizes at a nonzero space.
    """
    n = a.dim
    chain = {1: linalg.Subspace.full(n)}
    k = 1
    while True:
        if chain[k].is_zero():
            return k
        if k > n + 1:
            return None
        k += 1
        space = linalg.Subspace.zero(n)
        for i in range(1, k // 2 + 1):
            space = space.sum(product_space(a, chain[i], chain[k - i]))
        chain[k] = space
        if space == chain[k - 1]:
            return None


def is_nilpotent(a):
    return nilpotency_class(a) is not None


def ideal_closure(a, seed):
    """Smallest ideal containing seed, whether seed was already an ideal,
    and the nilpotency class of a.
    """
    if seed.ambient_dim != a.dim:
        raise exception.DimensionMismatch(
            reason='seed in ambient %d for algebra of dimension %d' % (
                seed.ambient_dim, a.dim))
    ideal = ideal_closure_space(a, seed)
    return IdealClosure(ideal, ideal == seed, nilpotency_class(a))


def subspace_labels(a, vectors, prefix='u'):
    """Labels for a basis of a subspace: the original label where the basis
    vector is a standard basis vector, prefix + position otherwise.
    """
    labels = []
    for pos, v in enumerate(vectors):
        nz = [k for k, c in enumerate(v) if c]
        if len(nz) == 1 and v[nz[0]] == linalg.ONE:
            labels.append(a.basis[nz[0]])
        else:
            labels.append('%s%d' % (prefix, pos + 1))
    if len(set(labels)) != len(labels):
        labels = ['%s%d' % (prefix, pos + 1) for pos in range(len(vectors))]
    return labels


def induced_algebra(a, vectors, coordinates, name=None, labels=None):
    """Algebra on the span of vectors whose product of basis vectors u_i u_j
    has coordinates coordinates(a.multiply(u_i, u_j)).
    """
    d = len(vectors)
    table = [[None] * d for _i in range(d)]
    for i in range(d):
        for j in range(i, d):
            c = coordinates(a.multiply(vectors[i], vectors[j]))
            table[i][j] = table[j][i] = c
    if labels is None:
        labels = subspace_labels(a, vectors)
    return JordanAlgebra(table, basis=labels, name=name)


def subalgebra(a, s, name=None):
    """Restriction of the product to a multiplication-closed subspace.

    Returns Embedded(algebra, inclusion), inclusion being the a.dim x s.dim
    matrix whose columns are the basis of s.
    """
    if not is_subalgebra(a, s):
        raise exception.InvalidInput(
            reason='subspace is not closed under the product')
    alg = induced_algebra(a, list(s.basis), s.coordinates, name=name)
    return Embedded(alg, s.as_matrix())


def quotient(a, ideal):
    """Quotient by an ideal on the echelon complement basis.

    Returns Quotient(algebra, projection, lift): projection maps a onto the
    quotient, lift maps quotient coordinates back to the complement.
    """
    if not is_ideal(a, ideal):
        raise exception.NotAnIdeal()
    n = a.dim
    complement = sorted(set(range(n)) - set(ideal.pivots))

    def _project(v):
        r = ideal.reduce(v)
        return tuple(r[c] for c in complement)

    vectors = [linalg.unit(n, c) for c in complement]
    alg = induced_algebra(
        a, vectors, _project,
        name='%s/I' % a.name if a.name else None,
        labels=[a.basis[c] for c in complement])
    projection = linalg.Matrix.from_columns(
        [_project(linalg.unit(n, j)) for j in range(n)], len(complement))
    lift = linalg.Matrix.from_columns(vectors, n)
    return Quotient(alg, projection, lift)


def check_isomorphism(a, b, phi):
    """True iff phi (columns are images of a's basis in b) is an invertible
    multiplicative map from a onto b.
    """
    if a.dim != b.dim or phi.shape != (b.dim, a.dim):
        raise exception.DimensionMismatch(
            reason='map of shape %s between dimensions %d and %d' % (
                phi.shape, a.dim, b.dim))
    if not phi.is_invertible():
        return False
    cols = phi.columns()
    for i in range(a.dim):
        for j in range(i, a.dim):
            if phi.apply(a.product(i, j)) != b.multiply(cols[i], cols[j]):
                LOG.debug("map is not multiplicative at (%s, %s)",
                          a.basis[i], a.basis[j])
                return False
    return True


def derivation_violation(a, d):
    """First basis pair where D(xy) != D(x)y + xD(y), or None."""
    if d.shape != (a.dim, a.dim):
        raise exception.DimensionMismatch(
            reason='operator of shape %s on dimension %d' % (d.shape, a.dim))
    cols = d.columns()
    for i in range(a.dim):
        for j in range(i, a.dim):
            lhs = d.apply(a.product(i, j))
            rhs = linalg.add(a.multiply(cols[i], a.unit(j)),
                             a.multiply(a.unit(i), cols[j]))
            if lhs != rhs:
                return (a.basis[i], a.basis[j])
    return None


def is_derivation(a, d):
    return derivation_violation(a, d) is None


def derivations(a):
    """Basis of the derivation algebra, as a list of matrices."""
    n = a.dim
    if n == 0:
        return []
    # Unknown D[m][k] sits at position m * n + k.
    rows = []
    for i in range(n):
        for j in range(i, n):
            cij = a.product(i, j)
            for m in range(n):
                row = [ZERO] * (n * n)
                for k, c in enumerate(cij):
                    if c:
                        row[m * n + k] += c
                for k in range(n):
                    ckj = a.product(k, j)[m]
                    if ckj:
                        row[k * n + i] -= ckj
                    cik = a.product(i, k)[m]
                    if cik:
                        row[k * n + j] -= cik
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[ZERO] * (n * n)]
    kernel = linalg.Matrix(rows).kernel()
    return [linalg.Matrix([v[m * n:(m + 1) * n] for m in range(n)])
            for v in kernel.basis]


def fresh_label(base, taken):
    label = base
    while label in taken:
        label += "'"
    return label


def _disjoint_labels(first, second):
    taken = set(first)
    out = []
    for label in second:
        new = label
        while new in taken:
            new += "'"
        taken.add(new)
        out.append(new)
    return list(first) + out


def direct_sum(a, b, name=None):
    """Block direct sum a + b with zero cross products."""
    n, m = a.dim, b.dim
    size = n + m
    table = []
    for i in range(size):
        row = []
        for j in range(size):
            if i < n and j < n:
                row.append(a.product(i, j) + linalg.zeros(m))
            elif i >= n and j >= n:
                row.append(linalg.zeros(n) + b.product(i - n, j - n))
            else:
                row.append(linalg.zeros(size))
        table.append(row)
    return JordanAlgebra(table, basis=_disjoint_labels(a.basis, b.basis),
                         name=name)


def check_operator_identities(a):
    """Checks [R_x,[R_y,R_z]] = R_{(y,x,z)} and, polarized,
    2(x,y,zx) + (z,y,x^2) = 0 on all basis triples.
    """
    n = a.dim
    ops = [a.basis_operator(i) for i in range(n)]
    for x in range(n):
        for y in range(n):
            inner = {}
            for z in range(n):
                if z not in inner:
                    inner[z] = linalg.commutator(ops[y], ops[z])
                lhs = linalg.commutator(ops[x], inner[z])
                rhs = a.operator(associator(a, a.unit(y), a.unit(x),
                                            a.unit(z)))
                if lhs != rhs:
                    return OperatorIdentityReport(
                        False, None,
                        Violation('bracket-associator',
                                  (a.basis[x], a.basis[y], a.basis[z]),
                                  lhs, rhs))
    for u in range(n):
        for v in range(u, n):
            for y in range(n):
                for z in range(n):
                    eu, ev, ey, ez = (a.unit(u), a.unit(v), a.unit(y),
                                      a.unit(z))
                    total = linalg.add(
                        linalg.add(
                            associator(a, eu, ey, a.multiply(ez, ev)),
                            associator(a, ev, ey, a.multiply(ez, eu))),
                        associator(a, ez, ey, a.product(u, v)))
                    if any(total):
                        return OperatorIdentityReport(
                            True, False,
                            Violation('associator-identity',
                                      (a.basis[u], a.basis[v], a.basis[y],
                                       a.basis[z]),
                                      total, linalg.zeros(n)))
    return OperatorIdentityReport(True, True, None)
