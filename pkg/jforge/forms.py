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
Bilinear forms on algebras.

A bilinear form is a `linalg.Matrix` Gram matrix G on the algebra basis,
B(x, y) = x^T G y. A `PseudoEuclideanAlgebra` pairs a `JordanAlgebra` with a
symmetric, nondegenerate and associative form:

..code:: python

    from jforge import algebra
    from jforge import forms
    from jforge import linalg

    j21 = algebra.JordanAlgebra.from_products(
        ['a1', 'b1'], {('a1', 'a1'): {'b1': 1}})
    p = forms.PseudoEuclideanAlgebra(j21, linalg.Matrix([[0, 1], [1, 0]]))
    assert forms.dual_basis(p) == [(0, 1), (1, 0)]
"""

import collections
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import exception
from jforge import linalg

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO

Split = collections.namedtuple(
    'Split', 'ideal complement ideal_space complement_space')
FormSpace = collections.namedtuple('FormSpace', 'forms unknowns equations')


class PepReport(collections.namedtuple(
        'PepReport', 'symmetric nondegenerate associative first_violation')):

    @property
    def ok(self):
        return self.symmetric and self.nondegenerate and self.associative


def as_gram(form, dim=None):
    if not isinstance(form, linalg.Matrix):
        form = linalg.Matrix(form, ncols=dim)
    if dim is not None and form.shape != (dim, dim):
        raise exception.DimensionMismatch(
            reason='Gram matrix of shape %s for dimension %d' % (
                form.shape, dim))
    return form


def value(gram, x, y):
    """x^T G y."""
    return linalg.dot(x, gram.apply(y))


def restrict(gram, vectors):
    """Gram matrix of the form on the given vectors."""
    images = [gram.apply(v) for v in vectors]
    return linalg.Matrix._raw(
        tuple(tuple(linalg.dot(u, gv) for gv in images) for u in vectors),
        len(vectors))


def associativity_violation(a, gram):
    """First basis triple with B(xy, z) != B(x, yz), or None."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            xy = a.product(i, j)
            for k in range(n):
                lhs = value(gram, xy, a.unit(k))
                rhs = value(gram, a.unit(i), a.product(j, k))
                if lhs != rhs:
                    return algebra.Violation(
                        'associativity', (a.basis[i], a.basis[j], a.basis[k]),
                        lhs, rhs)
    return None


def check_pep(a, form):
    """Evaluates symmetry, nondegeneracy and associativity of form on a.

    :returns: `PepReport`; first_violation names the first failing property
    """
    gram = as_gram(form, a.dim)
    symmetric = gram.is_symmetric()
    nondegenerate = gram.det() != ZERO
    bad = associativity_violation(a, gram)
    first = None
    if not symmetric:
        for i in range(a.dim):
            for j in range(i + 1, a.dim):
                if gram[i, j] != gram[j, i]:
                    first = algebra.Violation(
                        'symmetry', (a.basis[i], a.basis[j]),
                        gram[i, j], gram[j, i])
                    break
            if first is not None:
                break
    elif not nondegenerate:
        first = algebra.Violation('nondegeneracy', (), gram.det(), ZERO)
    elif bad is not None:
        first = bad
    return PepReport(symmetric, nondegenerate, bad is None, first)


class PseudoEuclideanAlgebra(object):
    """A Jordan algebra with an associative scalar product.

    :param algebra: `algebra.JordanAlgebra`
    :param form: Gram matrix (Matrix or nested sequence)
    :param conf: `jforge.conf.Conf`; when conf.verify is set the Jordan
                 identity and the form axioms are checked
    """

    def __init__(self, algebra, form, conf=None):
        conf = jconf.get(conf)
        conf.check_dim(algebra.dim)
        self.algebra = algebra
        self.form = as_gram(form, algebra.dim)
        if conf.verify:
            algebra.verify()
            report = check_pep(algebra, self.form)
            if not report.ok:
                LOG.warning("form on %s fails %s at %s", algebra.name,
                            report.first_violation.identity,
                            report.first_violation.index)
                raise exception.NotPseudoEuclidean(
                    detail='%s fails at %s' % (
                        report.first_violation.identity,
                        report.first_violation.index))

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def basis(self):
        return self.algebra.basis

    @property
    def name(self):
        return self.algebra.name

    def B(self, x, y):
        return value(self.form, x, y)

    def __eq__(self, other):
        if not isinstance(other, PseudoEuclideanAlgebra):
            return NotImplemented
        return self.algebra == other.algebra and self.form == other.form

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash((self.algebra, self.form))

    def __repr__(self):
        return '<PseudoEuclideanAlgebra %s dim=%d>' % (
            self.name or '', self.dim)


def orthogonal_complement(p, s):
    """{x : B(x, s) = 0 for all s in S}.

    When S is an ideal, S^perp is checked to be an ideal with S S^perp = 0.
    """
    if s.ambient_dim != p.dim:
        raise exception.DimensionMismatch(
            reason='subspace in ambient %d for dimension %d' % (
                s.ambient_dim, p.dim))
    perp = linalg.Subspace(p.dim, [p.form.apply(v) for v in s.basis])
    perp = perp.annihilator()
    if algebra.is_ideal(p.algebra, s):
        if not algebra.is_ideal(p.algebra, perp):
            raise exception.VerificationFailed(
                what='orthogonal of an ideal', detail='not an ideal')
        if not algebra.product_space(p.algebra, s, perp).is_zero():
            raise exception.VerificationFailed(
                what='orthogonal of an ideal',
                detail='I I^perp is not zero')
    return perp


def restrict_to(p, s, name=None, conf=None):
    """Pseudo-euclidean algebra on a subalgebra with nondegenerate form."""
    embedded = algebra.subalgebra(p.algebra, s, name=name)
    gram = restrict(p.form, list(s.basis))
    if gram.det() == ZERO and s.dim:
        raise exception.Degenerate()
    return PseudoEuclideanAlgebra(embedded.algebra, gram, conf=conf)


def split_by_ideal(p, ideal, conf=None):
    """Splits p = I + I^perp along an ideal with nondegenerate restriction.

    :returns: `Split(ideal, complement, ideal_space, complement_space)`
    """
    if not algebra.is_ideal(p.algebra, ideal):
        raise exception.NotAnIdeal()
    gram = restrict(p.form, list(ideal.basis))
    if ideal.dim and gram.det() == ZERO:
        LOG.warning("form restricted to the ideal of dimension %d is "
                    "degenerate", ideal.dim)
        raise exception.Degenerate()
    perp = orthogonal_complement(p, ideal)
    LOG.debug("splitting %s into dimensions %d + %d", p.name, ideal.dim,
              perp.dim)
    first = restrict_to(p, ideal, conf=conf)
    second = restrict_to(p, perp, conf=conf)
    return Split(first, second, ideal, perp)


def dual_basis(p):
    """Vectors e'_j with B(e_i, e'_j) = delta_ij."""
    try:
        inv = p.form.inverse()
    except exception.SingularMatrix:
        raise exception.NotPseudoEuclidean(detail='degenerate form')
    duals = inv.columns()
    for i in range(p.dim):
        for j in range(p.dim):
            expected = linalg.ONE if i == j else ZERO
            if p.B(p.algebra.unit(i), duals[j]) != expected:
                raise exception.VerificationFailed(
                    what='dual basis', detail='B(e_i, e\'_j) at %d, %d' % (
                        i, j))
    return duals


def orthogonal_sum(p, q, name=None, conf=None):
    """Direct sum with block-diagonal form."""
    alg = algebra.direct_sum(p.algebra, q.algebra, name=name)
    return PseudoEuclideanAlgebra(
        alg, linalg.Matrix.block_diagonal(p.form, q.form), conf=conf)


def check_isometry(p, q, phi):
    """True iff phi is an algebra isomorphism p -> q preserving the forms."""
    if not algebra.check_isomorphism(p.algebra, q.algebra, phi):
        return False
    return phi.transpose() @ q.form @ phi == p.form


def is_isotropic(form, s):
    gram = as_gram(form)
    return all(value(gram, u, v) == ZERO for u in s.basis for v in s.basis)


def associative_forms(a):
    """Basis of the symmetric bilinear forms T with T(xy, z) = T(x, yz).

    Unknowns are the upper triangular Gram entries; there is one equation
    per ordered basis triple.

    :returns: `FormSpace(forms, unknowns, equations)`
    """
    n = a.dim
    positions = {}
    for i in range(n):
        for j in range(i, n):
            positions[(i, j)] = len(positions)
    unknowns = len(positions)

    def _slot(p, q):
        return positions[(p, q) if p <= q else (q, p)]

    rows = []
    equations = 0
    for i in range(n):
        for j in range(n):
            xy = a.product(i, j)
            for k in range(n):
                equations += 1
                row = [ZERO] * unknowns
                for p, c in enumerate(xy):
                    if c:
                        row[_slot(p, k)] += c
                for q, c in enumerate(a.product(j, k)):
                    if c:
                        row[_slot(i, q)] -= c
                if any(row):
                    rows.append(row)
    if unknowns == 0:
        return FormSpace([], 0, equations)
    if not rows:
        rows = [[ZERO] * unknowns]
    kernel = linalg.Matrix(rows).kernel()
    result = []
    for v in kernel.basis:
        gram = [[ZERO] * n for _i in range(n)]
        for (i, j), pos in positions.items():
            gram[i][j] = gram[j][i] = v[pos]
        result.append(linalg.Matrix(gram))
    LOG.debug("associative forms of %s: %d unknowns, %d equations, "
              "dimension %d", a.name, unknowns, equations, len(result))
    return FormSpace(result, unknowns, equations)
