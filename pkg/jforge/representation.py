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
Representations of Jordan algebras.

A representation of J on a space V is a list of matrices pi(e_i), one per
basis vector of J, each acting on V. The defining identities are checked in
their linearized form on every ordered basis triple (x, y, z):

    pi(xy)pi(z) + pi(yz)pi(x) + pi(xz)pi(y)
        = pi(y)pi(xz) + pi(x)pi(yz) + pi(z)pi(xy)
        = pi((xy)z) + pi(x)pi(z)pi(y) + pi(y)pi(z)pi(x)

..code:: python

    from jforge import catalog
    from jforge import representation

    j = catalog.get('J_2_1').algebra
    rho = representation.coadjoint(j)
    assert representation.check_representation(j, rho.action).ok
"""

import collections
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import exception
from jforge import linalg

LOG = logging.getLogger(__name__)

# Block pattern classes of the semidirect product identity.
SOURCE = 'source'
TARGET = 'target'
REPRESENTATION = 'representation'
ADMISSIBLE_1 = '(1)'
ADMISSIBLE_2 = '(2)'
ADMISSIBLE_3 = '(3)'
CONDITIONS = (SOURCE, TARGET, REPRESENTATION,
              ADMISSIBLE_1, ADMISSIBLE_2, ADMISSIBLE_3)


class RepReport(collections.namedtuple('RepReport', 'ok first_violation')):
    pass


class AdmissibleReport(collections.namedtuple(
        'AdmissibleReport', 'admissible failed first_violation')):

    @property
    def failed_condition(self):
        return self.failed[0] if self.failed else None


def _zero_op(m):
    return linalg.Matrix.zeros(m)


def _combine_ops(coefficients, ops, m):
    acc = _zero_op(m)
    for c, op in zip(coefficients, ops):
        if c:
            acc = acc + op.scale(c)
    return acc


def _check_action(a, action):
    if len(action) != a.dim:
        raise exception.DimensionMismatch(
            reason='%d operators for an algebra of dimension %d' % (
                len(action), a.dim))
    sizes = set(op.shape for op in action)
    if len(sizes) > 1:
        raise exception.DimensionMismatch(reason='operators of mixed shape')
    if sizes:
        rows, cols = sizes.pop()
        if rows != cols:
            raise exception.DimensionMismatch(
                reason='operators must be square, got %dx%d' % (rows, cols))
        return rows
    return None


def check_representation(a, action):
    """Verifies the linearized representation identities.

    :param a: `algebra.JordanAlgebra`
    :param action: list of a.dim square matrices of the same size
    :returns: `RepReport(ok, first_violation)`
    """
    action = [op if isinstance(op, linalg.Matrix) else linalg.Matrix(op)
              for op in action]
    m = _check_action(a, action)
    if m is None:
        return RepReport(True, None)
    n = a.dim

    def pi(v):
        return _combine_ops(v, action, m)

    sq = [[pi(a.product(i, j)) for j in range(n)] for i in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                l1 = (sq[x][y] @ action[z] + sq[y][z] @ action[x] +
                      sq[x][z] @ action[y])
                l2 = (action[y] @ sq[x][z] + action[x] @ sq[y][z] +
                      action[z] @ sq[x][y])
                index = (a.basis[x], a.basis[y], a.basis[z])
                if l1 != l2:
                    return RepReport(False, algebra.Violation(
                        'representation-commutator', index, l1, l2))
                l3 = (pi(a.multiply(a.product(x, y), a.unit(z))) +
                      action[x] @ action[z] @ action[y] +
                      action[y] @ action[z] @ action[x])
                if l3 != l2:
                    return RepReport(False, algebra.Violation(
                        'representation-triple', index, l3, l2))
    return RepReport(True, None)


class Representation(object):
    """Action of a Jordan algebra on a space of dimension space_dim."""

    def __init__(self, algebra, action, space_dim=None, conf=None):
        conf = jconf.get(conf)
        action = [op if isinstance(op, linalg.Matrix) else linalg.Matrix(op)
                  for op in action]
        size = _check_action(algebra, action)
        if size is None:
            size = space_dim or 0
        if space_dim is not None and space_dim != size:
            raise exception.DimensionMismatch(
                reason='operators of size %d for a space of dimension %d' % (
                    size, space_dim))
        conf.check_dim(size, 'representation space')
        self.algebra = algebra
        self.action = tuple(action)
        self.space_dim = size
        if conf.verify:
            report = check_representation(algebra, self.action)
            if not report.ok:
                LOG.warning("action fails %s at %s",
                            report.first_violation.identity,
                            report.first_violation.index)
                raise exception.NotARepresentation(
                    index=report.first_violation.index)

    def __call__(self, x):
        """pi(x) for an element x of the algebra."""
        x = linalg.vector(x)
        if len(x) != self.algebra.dim:
            raise exception.DimensionMismatch(
                reason='element of length %d for dimension %d' % (
                    len(x), self.algebra.dim))
        return _combine_ops(x, self.action, self.space_dim)

    def apply(self, x, v):
        return self(x).apply(v)

    def is_symmetric_for(self, gram):
        """Every pi(e_i) is symmetric for the given form."""
        return all(op.transpose() @ gram == gram @ op for op in self.action)

    def __repr__(self):
        return '<Representation of %s on dimension %d>' % (
            self.algebra.name or 'algebra', self.space_dim)


def adjoint(a, conf=None):
    return Representation(
        a, [a.basis_operator(i) for i in range(a.dim)], a.dim, conf=conf)


def coadjoint(a, conf=None):
    """rho(x) f = f o R_x, i.e. R_x transposed on dual coordinates."""
    return Representation(
        a, [a.basis_operator(i).transpose() for i in range(a.dim)], a.dim,
        conf=conf)


def zero(a, space_dim, conf=None):
    return Representation(
        a, [linalg.Matrix.zeros(space_dim) for _i in range(a.dim)],
        space_dim, conf=conf)


def direct_sum(pi, rho, conf=None):
    """(pi + rho)(x)(v + w) = pi(x)v + rho(x)w."""
    if pi.algebra != rho.algebra:
        raise exception.InvalidInput(
            reason='representations of different algebras')
    return Representation(
        pi.algebra,
        [linalg.Matrix.block_diagonal(p, r)
         for p, r in zip(pi.action, rho.action)],
        pi.space_dim + rho.space_dim, conf=conf)


def rep_associator_identity(pi):
    """pi((x,y,z)) == [pi(y), [pi(x), pi(z)]] on all basis triples."""
    a = pi.algebra
    n = a.dim
    ops = pi.action
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = pi(algebra.associator(a, a.unit(x), a.unit(y),
                                            a.unit(z)))
                rhs = linalg.commutator(ops[y],
                                        linalg.commutator(ops[x], ops[z]))
                if lhs != rhs:
                    LOG.debug("associator identity fails at %s",
                              (a.basis[x], a.basis[y], a.basis[z]))
                    return False
    return True


def semidirect_table(source, target, action):
    """Product table on source + target:
    (x + y)(x' + y') = xx' + pi(x)y' + pi(x')y + yy'.
    """
    n, m = source.dim, target.dim
    size = n + m
    table = [[None] * size for _i in range(size)]
    for i in range(size):
        for j in range(i, size):
            if i < n and j < n:
                v = source.product(i, j) + linalg.zeros(m)
            elif i >= n and j >= n:
                v = linalg.zeros(n) + target.product(i - n, j - n)
            else:
                x, y = (i, j - n) if i < n else (j, i - n)
                v = linalg.zeros(n) + action[x].column(y)
            table[i][j] = table[j][i] = v
    labels = algebra._disjoint_labels(source.basis, target.basis)
    return algebra.StructureTable(table, basis=labels)


def _classify(n, b, triple):
    in_target = sum(1 for t in triple if t >= n)
    if b >= n:
        if in_target == 3:
            return TARGET
        if in_target in (1, 2):
            return ADMISSIBLE_1
        return REPRESENTATION
    if in_target == 0:
        return SOURCE
    if in_target == 3:
        return ADMISSIBLE_2
    if in_target == 2:
        return ADMISSIBLE_3
    return REPRESENTATION


def check_admissible_representation(pi, target):
    """Checks that the semidirect product of target by pi.algebra is Jordan.

    Every basis tuple of the linearized identity on the semidirect product
    is attributed to the condition its block pattern exercises: the
    identities of the source or target algebras, the representation
    identities, or one of the admissibility conditions (1), (2), (3).

    :returns: `AdmissibleReport(admissible, failed, first_violation)` where
              failed lists the failing conditions in canonical order
    """
    if pi.space_dim != target.dim:
        raise exception.DimensionMismatch(
            reason='action on dimension %d, target of dimension %d' % (
                pi.space_dim, target.dim))
    source = pi.algebra
    t = semidirect_table(source, target, pi.action)
    n = source.dim
    size = t.dim
    failed = {}
    for i in range(size):
        for j in range(i, size):
            for k in range(j, size):
                cyclic = ((i, j, k), (j, k, i), (k, i, j))
                for b in range(size):
                    condition = _classify(n, b, (i, j, k))
                    if condition in failed:
                        continue
                    lhs = linalg.zeros(size)
                    rhs = linalg.zeros(size)
                    for p, q, r in cyclic:
                        qr = t.product(q, r)
                        lhs = linalg.add(
                            lhs, t.multiply(t.product(p, b), qr))
                        rhs = linalg.add(rhs, t.left(p, t.left(b, qr)))
                    if lhs != rhs:
                        failed[condition] = algebra.Violation(
                            condition,
                            (t.basis[b], t.basis[i], t.basis[j], t.basis[k]),
                            lhs, rhs)
    order = [c for c in CONDITIONS if c in failed]
    if order:
        LOG.debug("admissibility fails conditions %s", order)
        return AdmissibleReport(False, tuple(order), failed[order[0]])
    return AdmissibleReport(True, (), None)
