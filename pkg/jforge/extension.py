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
First tier extension machines: central extensions, T*-extensions,
semidirect products and generalized semidirect products.

Every identity with repeated variables is checked in fully polarized form on
basis tuples. A cocycle is stored as a symmetric table of value vectors:

..code:: python

    from jforge import algebra
    from jforge import extension

    j11 = algebra.JordanAlgebra.zero(1, basis=['a'])
    phi = extension.Cocycle.from_sparse(
        extension.CENTRAL, 1, 1, {(0, 0): [1]})
    j21 = extension.central_extension(j11, 1, phi)
"""

import collections
import itertools
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import exception
from jforge import forms
from jforge import linalg
from jforge import representation

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO
HALF = linalg.Fraction(1, 2)

CENTRAL = 'central'
TSTAR = 'tstar'

CocycleReport = collections.namedtuple(
    'CocycleReport', 'ok identity index')
PairReport = collections.namedtuple(
    'PairReport', 'admissible failed_condition b_symmetric first_violation')


class AdmissiblePair(collections.namedtuple('AdmissiblePair', 'D x0 k')):
    """(D, x0) with the scalar k used by generalized double extensions."""

    def __new__(cls, D, x0, k=0):
        if not isinstance(D, linalg.Matrix):
            D = linalg.Matrix(D)
        return super(AdmissiblePair, cls).__new__(
            cls, D, linalg.vector(x0), linalg.to_fraction(k))


class Cocycle(object):
    """Symmetric bilinear map J x J -> K^m stored as a full table.

    :param kind: CENTRAL (values in a vector space) or TSTAR (values in J*,
                 so m equals the dimension of J)
    :param table: n x n nested sequence of length m vectors
    """

    def __init__(self, kind, table, value_dim=None):
        if kind not in (CENTRAL, TSTAR):
            raise exception.InvalidInput(reason='unknown cocycle kind %r'
                                         % kind)
        n = len(table)
        rows = []
        for row in table:
            if len(row) != n:
                raise exception.DimensionMismatch(
                    reason='cocycle table is not square')
            rows.append(tuple(linalg.vector(v) for v in row))
        widths = set(len(v) for row in rows for v in row)
        if len(widths) > 1:
            raise exception.DimensionMismatch(
                reason='cocycle values of mixed length')
        m = widths.pop() if widths else (value_dim or 0)
        self.kind = kind
        self.table = tuple(rows)
        self.source_dim = n
        self.value_dim = m

    @classmethod
    def from_sparse(cls, kind, n, m, entries):
        """entries maps (i, j) to a value vector; (j, i) is filled in."""
        zero = linalg.zeros(m)
        table = [[zero] * n for _i in range(n)]
        for (i, j), v in entries.items():
            v = linalg.vector(v)
            table[i][j] = v
            table[j][i] = v
        return cls(kind, table, value_dim=m)

    @classmethod
    def zero(cls, kind, n, m):
        return cls.from_sparse(kind, n, m, {})

    def __call__(self, x, y):
        acc = [ZERO] * self.value_dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] += ab * c
        return tuple(acc)

    def is_symmetric(self):
        n = self.source_dim
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def sparse(self):
        n = self.source_dim
        return dict(((i, j), self.table[i][j])
                    for i in range(n) for j in range(i, n)
                    if any(self.table[i][j]))


def _check_cocycle_shape(a, phi, kind):
    if phi.source_dim != a.dim:
        raise exception.DimensionMismatch(
            reason='cocycle on dimension %d for algebra of dimension %d' % (
                phi.source_dim, a.dim))
    if kind == TSTAR and phi.value_dim != a.dim:
        raise exception.DimensionMismatch(
            reason='T* cocycle values must lie in the dual space')


def check_central_cocycle(a, phi):
    """Symmetry and the polarized identity phi(xy, x^2) = phi(x, yx^2)."""
    _check_cocycle_shape(a, phi, CENTRAL)
    if not phi.is_symmetric():
        return CocycleReport(False, 'symmetry', None)
    n = a.dim
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        for b in range(n):
            total = linalg.zeros(phi.value_dim)
            for p, q, r in ((i, j, k), (j, k, i), (k, i, j)):
                qr = a.product(q, r)
                total = linalg.add(total, phi(a.product(p, b), qr))
                total = linalg.sub(total, phi(a.unit(p), a.left(b, qr)))
            if any(total):
                index = (a.basis[b], a.basis[i], a.basis[j], a.basis[k])
                return CocycleReport(False, 'central', index)
    return CocycleReport(True, None, None)


def central_extension(a, v_dim, phi=None, name=None, conf=None):
    """J1 + V with (x + v)(y + w) = xy + phi(x, y); V lies in Ann."""
    conf = jconf.get(conf)
    n = a.dim
    size = n + v_dim
    conf.check_dim(size)
    if phi is None:
        phi = Cocycle.zero(CENTRAL, n, v_dim)
    if phi.value_dim != v_dim:
        raise exception.DimensionMismatch(
            reason='cocycle values of length %d for V of dimension %d' % (
                phi.value_dim, v_dim))
    report = check_central_cocycle(a, phi)
    if not report.ok:
        LOG.warning("central cocycle fails %s at %s", report.identity,
                    report.index)
        raise exception.BadCocycle(identity=report.identity,
                                   index=report.index)
    zero = linalg.zeros(size)
    table = [[zero] * size for _i in range(size)]
    for i in range(n):
        for j in range(n):
            table[i][j] = a.product(i, j) + phi.table[i][j]
    labels = list(a.basis)
    for pos in range(v_dim):
        labels.append(algebra.fresh_label('v%d' % (pos + 1), labels))
    result = algebra.JordanAlgebra(table, basis=labels, name=name)
    LOG.debug("central extension of %s has dimension %d", a.name, size)
    v_space = linalg.Subspace(size, [linalg.unit(size, n + p)
                                     for p in range(v_dim)])
    if not v_space.issubset(algebra.annihilator(result)):
        raise exception.VerificationFailed(
            what='central extension', detail='V is not in Ann')
    if conf.verify:
        result.verify()
    return result


def tstar_table(a, theta):
    """(x + f)(y + h) = xy + h o R_x + f o R_y + theta(x, y) on J + J*."""
    n = a.dim
    size = 2 * n
    zero = linalg.zeros(size)
    table = [[zero] * size for _i in range(size)]
    for i in range(n):
        rt = a.basis_operator(i).transpose()
        for j in range(n):
            table[i][j] = a.product(i, j) + theta.table[i][j]
        for k in range(n):
            v = linalg.zeros(n) + rt.column(k)
            table[i][n + k] = v
            table[n + k][i] = v
    labels = list(a.basis)
    for b in a.basis:
        labels.append(algebra.fresh_label(b + '*', labels))
    return algebra.StructureTable(table, basis=labels)


def hyperbolic_gram(n):
    """[[0, I], [I, 0]]."""
    rows = []
    for i in range(2 * n):
        rows.append(linalg.unit(2 * n, (i + n) % (2 * n)))
    return linalg.Matrix(rows, ncols=2 * n) if n else linalg.Matrix.zeros(0)


def check_tstar_cocycle(a, theta):
    """Symmetry, theta(x,y)(z) = theta(z,x)(y), and the Jordan identity of
    the extended product.
    """
    _check_cocycle_shape(a, theta, TSTAR)
    if not theta.is_symmetric():
        return CocycleReport(False, 'symmetry', None)
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if theta.table[i][j][k] != theta.table[k][i][j]:
                    return CocycleReport(
                        False, 'cyclic', (a.basis[i], a.basis[j],
                                          a.basis[k]))
    report = algebra.check_jordan(tstar_table(a, theta))
    if not report.jordan:
        return CocycleReport(False, 'jordan', report.first_violation.index)
    return CocycleReport(True, None, None)


def tstar_extension(a, theta=None, name=None, conf=None):
    """T*_theta J with the form B(x + f, y + h) = f(y) + h(x).

    With theta omitted the trivial cocycle gives T*_0 J.
    """
    conf = jconf.get(conf)
    n = a.dim
    conf.check_dim(2 * n)
    if theta is None:
        theta = Cocycle.zero(TSTAR, n, n)
    report = check_tstar_cocycle(a, theta)
    if not report.ok:
        LOG.warning("T* cocycle fails %s at %s", report.identity,
                    report.index)
        raise exception.BadCocycle(identity=report.identity,
                                   index=report.index)
    t = tstar_table(a, theta)
    if name is None and a.name:
        name = 'TSTAR0(%s)' % a.name
    result = algebra.JordanAlgebra(t.table, basis=t.basis, name=name)
    LOG.debug("T* extension of %s has dimension %d", a.name, 2 * n)
    return forms.PseudoEuclideanAlgebra(result, hyperbolic_gram(n),
                                        conf=conf)


def semidirect_product(source, target, pi, name=None, conf=None):
    """source + target with (x + y)(x' + y') = xx' + pi(x)y' + pi(x')y + yy'.
    """
    conf = jconf.get(conf)
    conf.check_dim(source.dim + target.dim)
    if pi.algebra != source:
        raise exception.InvalidInput(
            reason='representation is not of the source algebra')
    report = representation.check_admissible_representation(pi, target)
    if not report.admissible:
        LOG.warning("representation is not admissible: %s fails at %s",
                    report.failed_condition, report.first_violation.index)
        raise exception.NotAdmissible(condition=report.failed_condition)
    t = representation.semidirect_table(source, target, pi.action)
    result = algebra.JordanAlgebra(t.table, basis=t.basis, name=name)
    if conf.verify:
        result.verify()
    return result


def _algebra_of(j):
    if isinstance(j, forms.PseudoEuclideanAlgebra):
        return j.algebra
    return j


def _pair_violations(a, D, x0):
    """Yields (condition, index, lhs, rhs) for each failing condition."""
    n = a.dim
    e = [a.unit(i) for i in range(n)]
    De = D.columns()
    D2 = D @ D
    D2e = D2.columns()
    mul = a.multiply
    lab = a.basis

    # C1: D(x^2 y) = x^2 D(y) + 2 D(x)(xy) - 2 x(D(x)y), polarized in x
    for u in range(n):
        for v in range(u, n):
            uv = a.product(u, v)
            for y in range(n):
                lhs = D.apply(mul(uv, e[y]))
                rhs = mul(uv, De[y])
                rhs = linalg.add(rhs, mul(De[u], a.product(v, y)))
                rhs = linalg.add(rhs, mul(De[v], a.product(u, y)))
                rhs = linalg.sub(rhs, mul(e[u], mul(De[v], e[y])))
                rhs = linalg.sub(rhs, mul(e[v], mul(De[u], e[y])))
                if lhs != rhs:
                    yield ('C1', (lab[u], lab[v], lab[y]), lhs, rhs)
                    return

    # C2: D(x)D(y) - D(D(x)y) = (x0, y, x) / 2 on ordered pairs
    for x in range(n):
        for y in range(n):
            lhs = linalg.sub(mul(De[x], De[y]), D.apply(mul(De[x], e[y])))
            assoc = algebra.associator(a, x0, e[y], e[x])
            rhs = linalg.scale(HALF, assoc)
            if lhs != rhs:
                yield ('C2', (lab[x], lab[y]), lhs, rhs)
                return

    # C3: D(x0 x) = x0 D(x)
    for x in range(n):
        lhs = D.apply(mul(x0, e[x]))
        rhs = mul(x0, De[x])
        if lhs != rhs:
            yield ('C3', (lab[x],), lhs, rhs)
            return

    # C4: x D(x^2) = x^2 D(x), polarized
    for u, v, w in itertools.combinations_with_replacement(range(n), 3):
        lhs = linalg.add(linalg.add(
            mul(e[u], D.apply(a.product(v, w))),
            mul(e[v], D.apply(a.product(u, w)))),
            mul(e[w], D.apply(a.product(u, v))))
        rhs = linalg.add(linalg.add(
            mul(a.product(v, w), De[u]),
            mul(a.product(u, w), De[v])),
            mul(a.product(u, v), De[w]))
        if lhs != rhs:
            yield ('C4', (lab[u], lab[v], lab[w]), lhs, rhs)
            return

    # C5: D^2(x^2) = 2 D(x)^2 - 2 x D^2(x) + x0 x^2, polarized
    for u in range(n):
        for v in range(u, n):
            uv = a.product(u, v)
            lhs = D2.apply(uv)
            rhs = linalg.scale(2, mul(De[u], De[v]))
            rhs = linalg.sub(rhs, mul(e[u], D2e[v]))
            rhs = linalg.sub(rhs, mul(e[v], D2e[u]))
            rhs = linalg.add(rhs, mul(x0, uv))
            if lhs != rhs:
                yield ('C5', (lab[u], lab[v]), lhs, rhs)
                return

    # C6: D^3(x) = 3/2 x0 D(x) - 1/2 x D(x0)
    D3 = D2 @ D
    Dx0 = D.apply(x0)
    for x in range(n):
        lhs = D3.apply(e[x])
        rhs = linalg.sub(linalg.scale(linalg.Fraction(3, 2),
                                      mul(x0, De[x])),
                         linalg.scale(HALF, mul(e[x], Dx0)))
        if lhs != rhs:
            yield ('C6', (lab[x],), lhs, rhs)
            return

    # C7: D^2(x0) = x0^2
    lhs = D2.apply(x0)
    rhs = mul(x0, x0)
    if lhs != rhs:
        yield ('C7', (), lhs, rhs)


def check_admissible_pair(j, D, x0):
    """Evaluates (C1)-(C7) for (D, x0) and reports B-symmetry of D.

    :param j: `forms.PseudoEuclideanAlgebra` or `algebra.JordanAlgebra`;
              b_symmetric is None when no form is available
    :returns: `PairReport(admissible, failed_condition, b_symmetric,
              first_violation)`
    """
    a = _algebra_of(j)
    if not isinstance(D, linalg.Matrix):
        D = linalg.Matrix(D)
    x0 = linalg.vector(x0)
    if D.shape != (a.dim, a.dim) or len(x0) != a.dim:
        raise exception.DimensionMismatch(
            reason='pair of shape %s, %d for dimension %d' % (
                D.shape, len(x0), a.dim))
    b_symmetric = None
    if isinstance(j, forms.PseudoEuclideanAlgebra):
        b_symmetric = D.transpose() @ j.form == j.form @ D
    for condition, index, lhs, rhs in _pair_violations(a, D, x0):
        LOG.debug("admissible pair fails %s at %s", condition, index)
        return PairReport(False, condition, b_symmetric,
                          algebra.Violation(condition, index, lhs, rhs))
    return PairReport(True, None, b_symmetric, None)


def generalized_semidirect_table(a, D, x0, label='a'):
    """Ka + J with x * a = D(x) and a * a = x0; a is basis vector 0."""
    n = a.dim
    size = n + 1
    table = [[None] * size for _i in range(size)]
    table[0][0] = (ZERO,) + tuple(x0)
    cols = D.columns()
    for i in range(n):
        v = (ZERO,) + cols[i]
        table[0][i + 1] = table[i + 1][0] = v
        for j in range(n):
            table[i + 1][j + 1] = (ZERO,) + a.product(i, j)
    labels = [algebra.fresh_label(label, a.basis)] + list(a.basis)
    return algebra.StructureTable(table, basis=labels)


def generalized_semidirect(j, pair, name=None, conf=None):
    """Generalized semidirect product of J by a 1-dim zero algebra Ka."""
    conf = jconf.get(conf)
    a = _algebra_of(j)
    conf.check_dim(a.dim + 1)
    report = check_admissible_pair(a, pair.D, pair.x0)
    if not report.admissible:
        LOG.warning("pair is not admissible: %s fails at %s",
                    report.failed_condition, report.first_violation.index)
        raise exception.NotAdmissible(condition=report.failed_condition)
    t = generalized_semidirect_table(a, pair.D, pair.x0)
    result = algebra.JordanAlgebra(t.table, basis=t.basis, name=name)
    ideal = linalg.Subspace(a.dim + 1, [linalg.unit(a.dim + 1, i + 1)
                                        for i in range(a.dim)])
    if not algebra.is_ideal(result, ideal):
        raise exception.VerificationFailed(
            what='generalized semidirect product', detail='J is not an ideal')
    if conf.verify:
        result.verify()
    return result
