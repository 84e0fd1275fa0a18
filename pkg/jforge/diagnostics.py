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
Semisimplicity diagnostics.

* `albert_form` and `trace_form_of_rep`: the trace forms tr R_{xy} and
  tr pi(xy);
* `radical_and_semisimplicity`: the radical as the kernel of the Albert
  form, verified to be a nilpotent ideal;
* `casimir` and `fitting`: the operator R_c with c = sum e_i e'_i over
  B-dual bases, and the splitting along the image and kernel of R_c^n;
* `index`: dimension of the space of symmetric associative forms;
* `reductive_report` and `form_from_intertwiner`.

..code:: python

    from jforge import catalog
    from jforge import diagnostics

    h2 = catalog.get('H_2').algebra
    assert diagnostics.radical_and_semisimplicity(h2).semisimple
    assert diagnostics.index(h2).index == 1
"""

import collections
import logging
import random

from jforge import algebra
from jforge import exception
from jforge import forms
from jforge import linalg

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO

INVERTIBLE = 'invertible'
NILPOTENT = 'nilpotent'
MIXED = 'mixed'

Radical = collections.namedtuple('Radical', 'radical semisimple')
CasimirData = collections.namedtuple('CasimirData', 'c Rc classification')
Fitting = collections.namedtuple('Fitting', 'S S_perp')
IndexData = collections.namedtuple(
    'IndexData', 'basis_of_forms index unknowns equations')
ReductiveReport = collections.namedtuple(
    'ReductiveReport',
    'reductive dim_ann index components criterion_holds semisimple '
    'square_is_whole semisimple_criterion_holds')

# Seed for the second dual basis used by casimir.
CASIMIR_SEED = 1729


def _trace_gram(a, op_of):
    n = a.dim
    rows = [[ZERO] * n for _i in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = op_of(a.product(i, j)).trace()
    return linalg.Matrix(rows, ncols=n)


def _require_associative(a, gram, what):
    bad = forms.associativity_violation(a, gram)
    if bad is not None:
        LOG.warning("%s of %s is not associative at %s", what, a.name,
                    bad.index)
        raise exception.VerificationFailed(
            what=what, detail='not associative at %s' % (bad.index,))
    return gram


def albert_form(a):
    """Gram matrix of A(x, y) = tr R_{xy}."""
    return _require_associative(a, _trace_gram(a, a.operator),
                                'Albert form')


def trace_form_of_rep(pi):
    """Gram matrix of B_pi(x, y) = tr pi(xy)."""
    return _require_associative(pi.algebra, _trace_gram(pi.algebra, pi),
                                'trace form')


def radical_and_semisimplicity(a):
    """Radical as ker(Albert form); semisimple iff it is zero.

    The kernel is verified to be a nilpotent ideal.
    """
    radical = albert_form(a).kernel()
    if not algebra.is_ideal(a, radical):
        raise exception.VerificationFailed(
            what='radical', detail='kernel of the Albert form is not an '
                                   'ideal')
    if not radical.is_zero():
        sub = algebra.subalgebra(a, radical).algebra
        if not algebra.is_nilpotent(sub):
            LOG.warning("kernel of the Albert form of %s is not nilpotent",
                        a.name)
            raise exception.VerificationFailed(
                what='radical', detail='kernel of the Albert form is not '
                                       'nilpotent')
    LOG.debug("radical of %s has dimension %d", a.name, radical.dim)
    return Radical(radical, radical.is_zero())


def _casimir_element(p, frame, duals):
    a = p.algebra
    c = linalg.zeros(p.dim)
    for u, v in zip(frame, duals):
        c = linalg.add(c, a.multiply(u, v))
    return c


def _random_change_of_basis(n, rng):
    while True:
        m = linalg.Matrix([[linalg.Fraction(rng.randint(-3, 3))
                            for _j in range(n)] for _i in range(n)],
                          ncols=n)
        if m.is_invertible():
            return m


def casimir(p):
    """c = sum e_i e'_i and R_c, with e'_i the B-dual basis.

    Verified: B(R_c x, y) equals the Albert form, R_c commutes with every
    R_x, and a second pair of dual bases gives the same c.

    :returns: `CasimirData(c, Rc, classification)`
    """
    a = p.algebra
    n = p.dim
    units = [a.unit(i) for i in range(n)]
    c = _casimir_element(p, units, forms.dual_basis(p))
    rc = a.operator(c)
    if rc.transpose() @ p.form != albert_form(a):
        raise exception.VerificationFailed(
            what='Casimir operator', detail='B(R_c x, y) differs from the '
                                            'Albert form')
    for i in range(n):
        if not linalg.commutator(rc, a.basis_operator(i)).is_zero():
            raise exception.VerificationFailed(
                what='Casimir operator',
                detail='does not commute with R_%s' % a.basis[i])
    if n:
        change = _random_change_of_basis(n, random.Random(CASIMIR_SEED))
        frame = change.columns()
        # B(f_i, f'_j) = delta_ij for F' = G^-1 P^-T.
        duals = (p.form.inverse() @ change.inverse().transpose()).columns()
        if _casimir_element(p, frame, duals) != c:
            raise exception.VerificationFailed(
                what='Casimir operator',
                detail='depends on the choice of dual bases')
    if rc.is_invertible():
        classification = INVERTIBLE
    elif rc.is_nilpotent():
        classification = NILPOTENT
    else:
        classification = MIXED
    LOG.debug("Casimir operator of %s is %s", p.name, classification)
    return CasimirData(c, rc, classification)


def is_semisimple_by_casimir(p):
    """Semisimple iff R_c is invertible."""
    return casimir(p).classification == INVERTIBLE


def fitting(p, conf=None):
    """S = Im R_c^n and S_perp = Ker R_c^n.

    Verified: S and S_perp are orthogonal ideals, S is semisimple and the
    Casimir operator of S_perp is nilpotent.
    """
    a = p.algebra
    n = p.dim
    power = casimir(p).Rc.power(n)
    s = power.image()
    s_perp = power.kernel()
    for space in (s, s_perp):
        if not algebra.is_ideal(a, space):
            raise exception.VerificationFailed(
                what='Fitting decomposition', detail='not an ideal')
    if any(p.B(u, v) for u in s.basis for v in s_perp.basis):
        raise exception.VerificationFailed(
            what='Fitting decomposition', detail='S and S_perp not '
                                                 'orthogonal')
    if not s.is_zero():
        sub = forms.restrict_to(p, s, conf=conf)
        if albert_form(sub.algebra).det() == ZERO:
            raise exception.VerificationFailed(
                what='Fitting decomposition', detail='S is not semisimple')
    if not s_perp.is_zero():
        sub = forms.restrict_to(p, s_perp, conf=conf)
        if casimir(sub).classification != NILPOTENT:
            raise exception.VerificationFailed(
                what='Fitting decomposition',
                detail='Casimir operator of S_perp is not nilpotent')
    LOG.debug("Fitting decomposition of %s: %d + %d", p.name, s.dim,
              s_perp.dim)
    return Fitting(s, s_perp)


def index(a):
    """Dimension of the space of symmetric associative bilinear forms."""
    space = forms.associative_forms(a)
    return IndexData(space.forms, len(space.forms), space.unknowns,
                     space.equations)


def _check_components(p, components):
    n = p.dim
    total = linalg.Subspace.zero(n)
    for pos, comp in enumerate(components):
        if comp.ambient_dim != n or comp.is_zero():
            raise exception.BadComponents(
                reason='component %d is empty or in the wrong ambient' % pos)
        if not algebra.is_ideal(p.algebra, comp):
            raise exception.BadComponents(
                reason='component %d is not an ideal' % pos)
        if forms.restrict(p.form, list(comp.basis)).det() == ZERO:
            raise exception.BadComponents(
                reason='component %d is degenerate' % pos)
        for other in components[:pos]:
            if any(p.B(u, v) for u in comp.basis for v in other.basis):
                raise exception.BadComponents(
                    reason='component %d is not orthogonal to the '
                           'others' % pos)
        total = total.sum(comp)
    if not total.is_full():
        raise exception.BadComponents(
            reason='components do not span the algebra')


def reductive_report(p, components, conf=None):
    """Reductivity and the index criteria for an orthogonal decomposition.

    :param components: list of `linalg.Subspace`, the B-irreducible
                       ideals of an orthogonal decomposition of p
    :returns: `ReductiveReport`. criterion_holds says whether
              (reductive and dim Ann <= 1) agrees with ind == r;
              semisimple_criterion_holds whether semisimple agrees with
              (J^2 == J and ind == r).
    """
    _check_components(p, components)
    a = p.algebra
    r = len(components)
    ann = algebra.annihilator(a)
    rad = radical_and_semisimplicity(a)
    reductive = rad.radical == ann
    if reductive:
        s = fitting(p, conf=conf).S
        if not s.sum(ann).is_full() or not (s & ann).is_zero():
            raise exception.VerificationFailed(
                what='reductive decomposition',
                detail='Fitting image and Ann do not split the algebra')
    ind = index(a).index
    square_is_whole = algebra.square_space(a).is_full()
    criterion_holds = (reductive and ann.dim <= 1) == (ind == r)
    semisimple_holds = rad.semisimple == (square_is_whole and ind == r)
    LOG.debug("reductive report for %s: reductive %s, dim Ann %d, "
              "index %d, %d components", p.name, reductive, ann.dim, ind, r)
    return ReductiveReport(reductive, ann.dim, ind, r, criterion_holds,
                           rad.semisimple, square_is_whole,
                           semisimple_holds)


def form_from_intertwiner(a, phi, conf=None):
    """Associative scalar product from an adjoint/coadjoint intertwiner.

    :param phi: invertible Matrix with phi R_x = R_x^T phi; T(x, y) is the
                value of the functional phi(x) at y
    :returns: `forms.PseudoEuclideanAlgebra` with the constructed form
    """
    n = a.dim
    if not isinstance(phi, linalg.Matrix):
        phi = linalg.Matrix(phi)
    if phi.shape != (n, n):
        raise exception.DimensionMismatch(
            reason='map of shape %s on dimension %d' % (phi.shape, n))
    if not phi.is_invertible():
        raise exception.NotAnIntertwiner()
    for i in range(n):
        op = a.basis_operator(i)
        if phi @ op != op.transpose() @ phi:
            raise exception.NotAnIntertwiner()
    t = phi.transpose()
    half = linalg.Fraction(1, 2)
    t_s = (t + t.transpose()).scale(half)
    t_a = (t - t.transpose()).scale(half)
    j_s = t_s.kernel()
    j_a = t_a.kernel()
    if not algebra.square_space(a).issubset(j_a):
        raise exception.VerificationFailed(
            what='intertwiner form', detail='J^2 is not inside J_a')
    # W contains J_a and complements J_s.
    w_vectors = list(j_a.basis) + (j_a + j_s).complement_vectors()
    change = linalg.Matrix.from_columns(w_vectors + list(j_s.basis), n)
    w_gram = forms.restrict(t_s, w_vectors)
    local = linalg.Matrix.block_diagonal(w_gram,
                                         linalg.Matrix.identity(j_s.dim))
    inv = change.inverse()
    gram = inv.transpose() @ local @ inv
    LOG.debug("form from intertwiner on %s: dim J_s %d, dim J_a %d",
              a.name, j_s.dim, j_a.dim)
    try:
        return forms.PseudoEuclideanAlgebra(a, gram, conf=conf)
    except exception.NotPseudoEuclidean as e:
        raise exception.VerificationFailed(what='intertwiner form',
                                           detail=e.message)
