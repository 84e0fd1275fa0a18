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
The 3-graded quadratic Lie algebra Lie(J) = J + H(J) + Jbar of a
pseudo-euclidean Jordan algebra.

H(J) = L(J^2) + [L(J), L(J)] is a space of operators on J. It carries the
form Gamma(R_a + D1, R_b + D2) = B(a, b) + Omega(D1, D2) where
Omega(D1, [R_c, R_d]) = B(D1 c, d). The brackets are

    [T1, T2]   = T1 T2 - T2 T1
    [T, a]     = T(a)
    [T, bbar]  = -(theta(T) b)bar     theta(R_a + D) = R_a - D
    [a, bbar]  = 2 R_ab + 2 [R_a, R_b]

with J in degree -1, H in degree 0 and Jbar in degree +1. The invariant form
is B_L = Gamma on H and B_L(a, bbar) = 2 B(a, b). Every construction checks
the Jacobi identity, invariance and nondegeneracy before returning.

..code:: python

    from jforge import catalog
    from jforge import tkk

    lie = tkk.tkk_build(catalog.get('UNIT_1').pseudo_euclidean)
    assert lie.dim == 3
    assert lie.killing_form().det() != 0
"""

import collections
import itertools
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import exception
from jforge import forms
from jforge import linalg

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO
TWO = linalg.Fraction(2)

MINUS, EVEN, PLUS = -1, 0, 1

StructureSpace = collections.namedtuple(
    'StructureSpace',
    'l_sq brackets operators square_preimages bracket_pairs gamma frame')


def _flat(m):
    return m.flatten()


def _unflat(v, n):
    return linalg.Matrix._raw(
        tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)), n)


class LieAlgebra(object):
    """Lie algebra given by antisymmetric structure constants.

    :param brackets: mapping (i, j) -> vector for i < j; the rest is filled
                     in by antisymmetry
    :param basis: labels
    :param grading: optional degree per basis vector
    :param form: optional invariant form (Gram matrix)
    """

    def __init__(self, brackets, basis, grading=None, form=None, name=None,
                 conf=None):
        conf = jconf.get(conf)
        n = len(basis)
        conf.check_dim(n, 'Lie algebra')
        self.dim = n
        self.basis = tuple(basis)
        self.name = name
        self.grading = tuple(grading) if grading is not None else None
        self.form = form
        sc = [[() for _j in range(n)] for _i in range(n)]
        for (i, j), v in brackets.items():
            v = linalg.vector(v)
            if len(v) != n:
                raise exception.DimensionMismatch(
                    reason='bracket of length %d in dimension %d' % (
                        len(v), n))
            if i == j:
                if any(v):
                    raise exception.InvalidInput(
                        reason='[x, x] must vanish')
                continue
            if i > j:
                i, j, v = j, i, linalg.scale(-linalg.ONE, v)
            nz = tuple((k, c) for k, c in enumerate(v) if c)
            sc[i][j] = nz
            sc[j][i] = tuple((k, -c) for k, c in nz)
        self._sc = tuple(tuple(row) for row in sc)
        if conf.verify:
            bad = self.jacobi_violation()
            if bad is not None:
                raise exception.JacobiFailure(index=bad)

    def bracket_basis(self, i, j):
        v = [ZERO] * self.dim
        for k, c in self._sc[i][j]:
            v[k] = c
        return tuple(v)

    def bracket(self, x, y):
        acc = [ZERO] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._sc[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return tuple(acc)

    def ad(self, x):
        return linalg.Matrix.from_columns(
            [self.bracket(x, linalg.unit(self.dim, j))
             for j in range(self.dim)], self.dim)

    def killing_form(self):
        ads = [self.ad(linalg.unit(self.dim, i)) for i in range(self.dim)]
        return linalg.Matrix(
            [[(ads[i] @ ads[j]).trace() for j in range(self.dim)]
             for i in range(self.dim)], ncols=self.dim)

    def is_abelian(self):
        return not any(self._sc[i][j] for i in range(self.dim)
                       for j in range(self.dim))

    def jacobi_violation(self):
        n = self.dim
        for i, j, k in itertools.combinations(range(n), 3):
            ei, ej, ek = (linalg.unit(n, i), linalg.unit(n, j),
                          linalg.unit(n, k))
            total = linalg.add(
                linalg.add(self.bracket(ei, self.bracket_basis(j, k)),
                           self.bracket(ej, self.bracket_basis(k, i))),
                self.bracket(ek, self.bracket_basis(i, j)))
            if any(total):
                return (self.basis[i], self.basis[j], self.basis[k])
        return None

    def check_jacobi(self):
        return self.jacobi_violation() is None

    def invariance_violation(self, form):
        """First triple with B([x,y],z) != B(x,[y,z]), or None."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                xy = self.bracket_basis(i, j)
                for k in range(n):
                    lhs = forms.value(form, xy, linalg.unit(n, k))
                    rhs = forms.value(form, linalg.unit(n, i),
                                      self.bracket_basis(j, k))
                    if lhs != rhs:
                        return (self.basis[i], self.basis[j],
                                self.basis[k])
        return None

    def check_invariant(self, form):
        return self.invariance_violation(form) is None

    def grading_violation(self):
        """First pair with [g_i, g_j] not inside g_{i+j}, or None."""
        if self.grading is None:
            return None
        n = self.dim
        for i in range(n):
            for j in range(n):
                degree = self.grading[i] + self.grading[j]
                for k, _c in self._sc[i][j]:
                    if self.grading[k] != degree:
                        return (self.basis[i], self.basis[j])
        return None

    def derivation_violation(self, d):
        n = self.dim
        cols = d.columns()
        for i in range(n):
            for j in range(i + 1, n):
                lhs = d.apply(self.bracket_basis(i, j))
                rhs = linalg.add(self.bracket(cols[i], linalg.unit(n, j)),
                                 self.bracket(linalg.unit(n, i), cols[j]))
                if lhs != rhs:
                    return (self.basis[i], self.basis[j])
        return None

    def brackets(self):
        """Nonzero brackets (i, j) -> vector with i < j."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self._sc[i][j]:
                    out[(i, j)] = self.bracket_basis(i, j)
        return out

    def __repr__(self):
        return '<LieAlgebra %s dim=%d>' % (self.name or '', self.dim)


def build_structure_space(p):
    """Bases of L(J^2) and [L(J), L(J)] and the form Gamma on their sum.

    :raises: NotDirect when the two spans intersect
    """
    a = p.algebra
    n = a.dim
    ann = algebra.annihilator(a)
    square = algebra.square_space(a)
    if forms.orthogonal_complement(p, ann) != square:
        raise exception.VerificationFailed(
            what='structure space', detail='(Ann J)^perp differs from J^2')

    l_sq_ops, preimages = [], []
    span = linalg.Subspace(n * n)
    for c in square.basis:
        op = a.operator(c)
        if not span.contains(_flat(op)):
            span = span.sum(linalg.Subspace(n * n, [_flat(op)]))
            l_sq_ops.append(op)
            preimages.append(c)
    l_sq = span

    bracket_ops, pairs = [], []
    span = linalg.Subspace(n * n)
    all_pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            op = linalg.commutator(a.basis_operator(i), a.basis_operator(j))
            all_pairs.append(((i, j), op))
            if not span.contains(_flat(op)):
                span = span.sum(linalg.Subspace(n * n, [_flat(op)]))
                bracket_ops.append(op)
                pairs.append((i, j))
    brackets = span

    total = l_sq.sum(brackets)
    if total.dim != l_sq.dim + brackets.dim:
        overlap = l_sq.dim + brackets.dim - total.dim
        LOG.warning("L(J^2) and [L(J),L(J)] meet in dimension %d for %s; "
                    "counterexample candidate", overlap, p.name)
        raise exception.NotDirect(dim=overlap)

    operators = l_sq_ops + bracket_ops
    frame = linalg.Frame(n * n, [_flat(op) for op in operators])
    s, h = len(l_sq_ops), len(operators)
    gamma = [[ZERO] * h for _i in range(h)]
    for i in range(s):
        for j in range(s):
            gamma[i][j] = p.B(preimages[i], preimages[j])

    def omega(d, pq):
        return p.B(d.apply(a.unit(pq[0])), a.unit(pq[1]))

    for i in range(s, h):
        for j in range(s, h):
            gamma[i][j] = omega(operators[i], pairs[j - s])

    # Omega must not depend on how a bracket is written.
    bracket_frame = linalg.Frame(n * n, [_flat(op) for op in bracket_ops])
    for pq, op in all_pairs:
        coords = bracket_frame.coordinates(_flat(op))
        for i in range(s, h):
            expected = sum((c * gamma[i][s + t]
                            for t, c in enumerate(coords)), ZERO)
            if omega(operators[i], pq) != expected:
                raise exception.VerificationFailed(
                    what='Omega', detail='not well defined at %s' % (
                        (a.basis[pq[0]], a.basis[pq[1]]),))
    LOG.debug("structure space of %s: L(J^2) %d, brackets %d", p.name, s,
              h - s)
    return StructureSpace(l_sq, brackets, operators, preimages, pairs,
                          linalg.Matrix(gamma, ncols=h), frame)


class _Tkk(object):
    """Index bookkeeping for J + H + Jbar."""

    def __init__(self, p, space):
        self.p = p
        self.space = space
        self.n = p.dim
        self.h = len(space.operators)
        self.dim = 2 * self.n + self.h
        self.theta_gram = p.form
        self.theta_inv = p.form.inverse() if self.n else p.form

    def theta(self, op):
        """B-adjoint of op."""
        return self.theta_inv @ op.transpose() @ self.theta_gram

    def h_coords(self, op):
        try:
            return self.space.frame.coordinates(_flat(op))
        except exception.InvalidInput:
            raise exception.VerificationFailed(
                what='Lie(J)', detail='operator outside H(J)')

    def j_vec(self, v):
        return tuple(v) + linalg.zeros(self.h + self.n)

    def h_vec(self, coords):
        return linalg.zeros(self.n) + tuple(coords) + linalg.zeros(self.n)

    def bar_vec(self, v):
        return linalg.zeros(self.n + self.h) + tuple(v)

    def labels(self):
        a = self.p.algebra
        labels = list(a.basis)
        for c in self.space.square_preimages:
            labels.append(algebra.fresh_label(
                'R(%s)' % _element_name(a, c), labels))
        for i, j in self.space.bracket_pairs:
            labels.append(algebra.fresh_label(
                '[R(%s),R(%s)]' % (a.basis[i], a.basis[j]), labels))
        for b in a.basis:
            labels.append(algebra.fresh_label(b + '~', labels))
        return labels

    def grading(self):
        return [MINUS] * self.n + [EVEN] * self.h + [PLUS] * self.n


def _element_name(a, v):
    nz = [(k, c) for k, c in enumerate(v) if c]
    if len(nz) == 1 and nz[0][1] == linalg.ONE:
        return a.basis[nz[0][0]]
    return '+'.join('%s*%s' % (linalg.format_scalar(c), a.basis[k])
                    for k, c in nz)


def _bracket_table(t):
    a = t.p.algebra
    n, h = t.n, t.h
    ops = t.space.operators
    brackets = {}
    for s in range(h):
        for u in range(s + 1, h):
            v = t.h_vec(t.h_coords(linalg.commutator(ops[s], ops[u])))
            if any(v):
                brackets[(n + s, n + u)] = v
    for s in range(h):
        theta = t.theta(ops[s])
        for i in range(n):
            v = ops[s].apply(a.unit(i))
            if any(v):
                brackets[(i, n + s)] = linalg.scale(-linalg.ONE, t.j_vec(v))
            w = theta.apply(a.unit(i))
            if any(w):
                brackets[(n + s, n + h + i)] = linalg.scale(
                    -linalg.ONE, t.bar_vec(w))
    for i in range(n):
        ri = a.basis_operator(i)
        for j in range(n):
            op = (a.operator(a.product(i, j)) +
                  linalg.commutator(ri, a.basis_operator(j))).scale(TWO)
            if not op.is_zero():
                brackets[(i, n + h + j)] = t.h_vec(t.h_coords(op))
    return brackets


def _form_table(t):
    n, h = t.n, t.h
    rows = [[ZERO] * t.dim for _i in range(t.dim)]
    for s in range(h):
        for u in range(h):
            rows[n + s][n + u] = t.space.gamma[s, u]
    for i in range(n):
        for j in range(n):
            value = TWO * t.p.form[i, j]
            rows[i][n + h + j] = value
            rows[n + h + j][i] = value
    return linalg.Matrix(rows, ncols=t.dim)


def tkk_build(p, conf=None):
    """Builds Lie(J) with its invariant form B_L.

    :param p: `forms.PseudoEuclideanAlgebra`
    :returns: `LieAlgebra` with grading and form set
    :raises: NotDirect, JacobiFailure, InvarianceFailure
    """
    conf = jconf.get(conf)
    space = build_structure_space(p)
    t = _Tkk(p, space)
    conf.check_dim(t.dim, 'Lie algebra')
    form = _form_table(t)
    lie = LieAlgebra(_bracket_table(t), t.labels(), grading=t.grading(),
                     form=form, name='Lie(%s)' % (p.name or 'J'),
                     conf=jconf.Conf(verify=False, max_dim=conf.max_dim))
    bad = lie.jacobi_violation()
    if bad is not None:
        LOG.warning("Lie(J) fails the Jacobi identity at %s", bad)
        raise exception.JacobiFailure(index=bad)
    bad = lie.invariance_violation(form)
    if bad is not None:
        LOG.warning("B_L is not invariant at %s", bad)
        raise exception.InvarianceFailure(detail='fails at %s' % (bad,))
    if form.det() == ZERO:
        raise exception.InvarianceFailure(detail='B_L is degenerate')
    if lie.grading_violation() is not None:
        raise exception.VerificationFailed(
            what='Lie(J)', detail='grading is not respected')
    LOG.debug("built %s: dimension %d, H of dimension %d", lie.name,
              lie.dim, t.h)
    return lie


def _require_derivation(a, d):
    if not isinstance(d, linalg.Matrix):
        d = linalg.Matrix(d)
    bad = algebra.derivation_violation(a, d)
    if bad is not None:
        raise exception.NotADerivation(index=bad)
    return d


def lift_derivation(p, d, lie=None, conf=None):
    """D_L(a) = D(a), D_L(abar) = D(a)bar, D_L(T) = [D, T].

    The result is verified to be a derivation of Lie(J). That holds when D
    is B-antisymmetric, or more generally when D + theta(D) commutes with
    theta(H).

    :returns: (lie, D_L)
    """
    d = _require_derivation(p.algebra, d)
    space = build_structure_space(p)
    t = _Tkk(p, space)
    if lie is None:
        lie = tkk_build(p, conf=conf)
    columns = []
    for i in range(t.n):
        columns.append(t.j_vec(d.apply(p.algebra.unit(i))))
    for op in space.operators:
        columns.append(t.h_vec(t.h_coords(linalg.commutator(d, op))))
    for i in range(t.n):
        columns.append(t.bar_vec(d.apply(p.algebra.unit(i))))
    d_l = linalg.Matrix.from_columns(columns, t.dim)
    bad = lie.derivation_violation(d_l)
    if bad is not None:
        raise exception.VerificationFailed(
            what='lifted derivation', detail='fails at %s' % (bad,))
    if d.transpose() @ p.form == -(p.form @ d):
        if d_l.transpose() @ lie.form != -(lie.form @ d_l):
            raise exception.VerificationFailed(
                what='lifted derivation', detail='not B_L-antisymmetric')
    return lie, d_l


def check_condition_d1(p, d):
    """D_L([R(J), R(J)]) == [R(J), R(J)] as subspaces of End(J)."""
    a = p.algebra
    d = _require_derivation(a, d)
    n = a.dim
    ops = [linalg.commutator(a.basis_operator(i), a.basis_operator(j))
           for i in range(n) for j in range(i + 1, n)]
    brackets = linalg.Subspace(n * n, [_flat(op) for op in ops])
    image = linalg.Subspace(
        n * n, [_flat(linalg.commutator(d, _unflat(v, n)))
                for v in brackets.basis])
    return image == brackets


def lift_symplectic_form(p, d, conf=None):
    """omega_L(x, y) = B_L(D_L x, y) on Lie(J), when (d1) holds.

    Verified antisymmetric, nondegenerate, closed under the Lie cyclic sum,
    and zero between H and J + Jbar.

    :returns: (lie, gram of omega_L)
    """
    if not check_condition_d1(p, d):
        raise exception.CompatibilityFails(condition='d1')
    lie, d_l = lift_derivation(p, d, conf=conf)
    omega = d_l.transpose() @ lie.form
    if not omega.is_antisymmetric():
        raise exception.VerificationFailed(
            what='omega_L', detail='not antisymmetric')
    if omega.det() == ZERO:
        raise exception.VerificationFailed(
            what='omega_L', detail='degenerate')
    n = lie.dim
    for i, j, k in itertools.combinations(range(n), 3):
        total = (forms.value(omega, lie.bracket_basis(i, j), linalg.unit(n, k))
                 + forms.value(omega, lie.bracket_basis(j, k),
                               linalg.unit(n, i))
                 + forms.value(omega, lie.bracket_basis(k, i),
                               linalg.unit(n, j)))
        if total:
            raise exception.VerificationFailed(
                what='omega_L', detail='not closed at %s' % (
                    (lie.basis[i], lie.basis[j], lie.basis[k]),))
    for i in range(n):
        for j in range(n):
            if (lie.grading[i] == EVEN) != (lie.grading[j] == EVEN):
                if omega[i, j]:
                    raise exception.VerificationFailed(
                        what='omega_L', detail='pairs H with J + Jbar')
    return lie, omega
