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
Double extensions and generalized double extensions of pseudo-euclidean
Jordan algebras, and the peelers that invert them.

A double extension of (J1, B1) by J2 lives on J2 + J1 + J2* with basis
ordered in that way. A generalized double extension of (J1, B1) by an
admissible pair lives on Ka + J1 + Kb, a first and b last.

Both peelers always verify their output: re-extending the extracted data
must reproduce the input through the returned isometry.

..code:: python

    from jforge import catalog
    from jforge import double_extension

    p = catalog.get('J_2_1').pseudo_euclidean
    peel = double_extension.peel_gde(p, p.algebra.unit('b1'))
    assert peel.W.dim == 0 and peel.pair.k == 1
"""

import collections
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import diagnostics
from jforge import exception
from jforge import extension
from jforge import forms
from jforge import linalg
from jforge import representation

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO
ONE = linalg.ONE
HALF = linalg.Fraction(1, 2)

GdePeel = collections.namedtuple('GdePeel', 'W pair a b isometry')
DePeel = collections.namedtuple(
    'DePeel', 'W V pi gamma isometry spec')


class DoubleExtensionSpec(collections.namedtuple(
        'DoubleExtensionSpec', 'base top pi gamma')):
    """(J1, B1) extended by J2 acting through pi, with the form gamma on J2.
    """

    def __new__(cls, base, top, pi, gamma=None):
        if gamma is None:
            gamma = linalg.Matrix.zeros(top.dim)
        elif not isinstance(gamma, linalg.Matrix):
            gamma = linalg.Matrix(gamma, ncols=top.dim)
        return super(DoubleExtensionSpec, cls).__new__(
            cls, base, top, pi, gamma)


class GdeSpec(collections.namedtuple('GdeSpec', 'base pair')):
    """(J1, B1) with an admissible pair (D, x0) and the scalar k."""

    @property
    def k(self):
        return self.pair.k


def validate_de_spec(spec):
    """Raises SpecInvalid naming the first broken invariant."""
    base, top, pi, gamma = spec
    if pi.algebra != top:
        raise exception.SpecInvalid(
            reason='pi is not a representation of the top algebra')
    if pi.space_dim != base.dim:
        raise exception.SpecInvalid(
            reason='pi acts on dimension %d, base has dimension %d' % (
                pi.space_dim, base.dim))
    if gamma.shape != (top.dim, top.dim):
        raise exception.SpecInvalid(reason='gamma has the wrong shape')
    if not pi.is_symmetric_for(base.form):
        raise exception.SpecInvalid(reason='pi(x) is not B1-symmetric')
    report = representation.check_admissible_representation(
        pi, base.algebra)
    if not report.admissible:
        raise exception.SpecInvalid(
            reason='pi is not admissible: condition %s' %
            report.failed_condition)
    if not gamma.is_symmetric():
        raise exception.SpecInvalid(reason='gamma is not symmetric')
    if forms.associativity_violation(top, gamma) is not None:
        raise exception.SpecInvalid(reason='gamma is not associative')


def double_extension_table(spec):
    base, top, pi, gamma = spec
    m, n = top.dim, base.dim
    size = 2 * m + n
    j1 = base.algebra
    zero = linalg.zeros(size)
    table = [[zero] * size for _i in range(size)]

    def _embed(x=None, y=None, f=None):
        return ((x or linalg.zeros(m)) + (y or linalg.zeros(n)) +
                (f or linalg.zeros(m)))

    # phi(y, y')_k = B1(pi(e_k) y, y')
    sym = [op.transpose() @ base.form for op in pi.action]
    for i in range(m):
        rt = top.basis_operator(i).transpose()
        for j in range(m):
            table[i][j] = _embed(x=top.product(i, j))
        for q in range(n):
            v = _embed(y=pi.action[i].column(q))
            table[i][m + q] = table[m + q][i] = v
        for k in range(m):
            v = _embed(f=rt.column(k))
            table[i][m + n + k] = table[m + n + k][i] = v
    for p in range(n):
        for q in range(n):
            phi = tuple(sym[k][p, q] for k in range(m))
            table[m + p][m + q] = _embed(y=j1.product(p, q), f=phi)
    labels = []
    for b in top.basis:
        labels.append(algebra.fresh_label(b, labels))
    for b in base.basis:
        labels.append(algebra.fresh_label(b, labels))
    for b in top.basis:
        labels.append(algebra.fresh_label(b + '*', labels))
    return table, labels


def double_extension_form(spec, gamma=None):
    """B_gamma = gamma + B1 + the pairing of J2 with J2*."""
    base, top = spec.base, spec.top
    if gamma is None:
        gamma = spec.gamma
    m, n = top.dim, base.dim
    size = 2 * m + n
    rows = [[ZERO] * size for _i in range(size)]
    for i in range(m):
        for j in range(m):
            rows[i][j] = gamma[i, j]
        rows[i][m + n + i] = ONE
        rows[m + n + i][i] = ONE
    for p in range(n):
        for q in range(n):
            rows[m + p][m + q] = base.form[p, q]
    return linalg.Matrix(rows, ncols=size)


def form_difference(spec):
    """Gram of B_gamma - B_0; it is supported on the J2 block."""
    return (double_extension_form(spec) -
            double_extension_form(spec, linalg.Matrix.zeros(spec.top.dim)))


def double_extension(spec, name=None, conf=None):
    """Double extension of spec.base by spec.top by means of spec.pi.

    :param spec: `DoubleExtensionSpec`
    :returns: `forms.PseudoEuclideanAlgebra` on J2 + J1 + J2*
    """
    conf = jconf.get(conf)
    validate_de_spec(spec)
    if spec.top.dim == 0:
        return spec.base
    conf.check_dim(2 * spec.top.dim + spec.base.dim)
    table, labels = double_extension_table(spec)
    alg = algebra.JordanAlgebra(table, basis=labels, name=name)
    LOG.debug("double extension of %s by %s has dimension %d",
              spec.base.name, spec.top.name, alg.dim)
    return forms.PseudoEuclideanAlgebra(alg, double_extension_form(spec),
                                        conf=conf)


def validate_gde_spec(spec):
    base, pair = spec
    n = base.dim
    if pair.D.shape != (n, n) or len(pair.x0) != n:
        raise exception.SpecInvalid(
            reason='pair does not match the base dimension %d' % n)
    report = extension.check_admissible_pair(base, pair.D, pair.x0)
    if not report.admissible:
        raise exception.SpecInvalid(
            reason='pair fails %s' % report.failed_condition)
    if not report.b_symmetric:
        raise exception.SpecInvalid(reason='D is not B1-symmetric')


def gde_table(base, pair, a_label='a', b_label='b'):
    """x*y = xy + B1(Dx,y)b, a*x = D(x) + B1(x0,x)b, a*a = x0 + kb."""
    j1 = base.algebra
    n = j1.dim
    size = n + 2
    D, x0, k = pair
    cols = D.columns()
    zero = linalg.zeros(size)
    table = [[zero] * size for _i in range(size)]
    table[0][0] = (ZERO,) + x0 + (k,)
    for i in range(n):
        ei = j1.unit(i)
        v = (ZERO,) + cols[i] + (base.B(x0, ei),)
        table[0][i + 1] = table[i + 1][0] = v
        for j in range(n):
            table[i + 1][j + 1] = ((ZERO,) + j1.product(i, j) +
                                   (base.B(cols[i], j1.unit(j)),))
    a_name = algebra.fresh_label(a_label, base.basis)
    b_name = algebra.fresh_label(b_label, list(base.basis) + [a_name])
    return table, [a_name] + list(base.basis) + [b_name]


def gde_form(base):
    n = base.dim
    size = n + 2
    rows = [[ZERO] * size for _i in range(size)]
    rows[0][size - 1] = rows[size - 1][0] = ONE
    for p in range(n):
        for q in range(n):
            rows[p + 1][q + 1] = base.form[p, q]
    return linalg.Matrix(rows, ncols=size)


def generalized_double_extension(spec, name=None, a_label='a', b_label='b',
                                 conf=None):
    """Generalized double extension Ka + J1 + Kb.

    :param spec: `GdeSpec`
    :returns: `forms.PseudoEuclideanAlgebra`; b is the last basis vector and
              lies in the annihilator
    """
    conf = jconf.get(conf)
    validate_gde_spec(spec)
    n = spec.base.dim
    conf.check_dim(n + 2)
    table, labels = gde_table(spec.base, spec.pair, a_label, b_label)
    alg = algebra.JordanAlgebra(table, basis=labels, name=name)
    if not algebra.annihilator(alg).contains(linalg.unit(n + 2, n + 1)):
        raise exception.VerificationFailed(
            what='generalized double extension', detail='b is not in Ann')
    LOG.debug("generalized double extension of %s has dimension %d",
              spec.base.name, n + 2)
    return forms.PseudoEuclideanAlgebra(alg, gde_form(spec.base), conf=conf)


def _basis_split(blocks, n):
    """Returns a function mapping a vector to its coordinates in each block
    of a basis of the whole space given as a list of vector lists.
    """
    vectors = [v for block in blocks for v in block]
    if len(vectors) != n:
        raise exception.VerificationFailed(
            what='decomposition', detail='%d vectors for dimension %d' % (
                len(vectors), n))
    inv = linalg.Matrix.from_columns(vectors, n).inverse()
    sizes = [len(block) for block in blocks]

    def split(v):
        coords = inv.apply(v)
        out = []
        start = 0
        for s in sizes:
            out.append(coords[start:start + s])
            start += s
        return out
    return split


def _verify_isometry(extended, p, phi, what):
    if not forms.check_isometry(extended, p, phi):
        LOG.warning("%s does not reproduce the input algebra", what)
        raise exception.VerificationFailed(
            what=what, detail='re-extension is not isometric to the input')


def peel_gde(p, b, a=None, conf=None):
    """Writes p as a generalized double extension along b.

    :param p: `forms.PseudoEuclideanAlgebra`
    :param b: nonzero isotropic vector of the annihilator
    :param a: optional isotropic vector with B(a, b) = 1; one is built from
              the basis when omitted
    :returns: `GdePeel(W, pair, a, b, isometry)`; isometry maps the basis of
              the re-extension (a, W basis, b) onto p
    """
    b = linalg.vector(b)
    a_alg = p.algebra
    n = p.dim
    if len(b) != n:
        raise exception.DimensionMismatch(
            reason='vector of length %d for dimension %d' % (len(b), n))
    if not any(b):
        raise exception.BadDirection(reason='b is zero')
    if not algebra.annihilator(a_alg).contains(b):
        raise exception.BadDirection(reason='b is not in Ann')
    if p.B(b, b) != ZERO:
        raise exception.BadDirection(
            reason='B(b, b) is not zero; b spans a nondegenerate ideal')
    if a is None:
        j = next(j for j in range(n) if p.B(b, a_alg.unit(j)) != ZERO)
        a_prime = linalg.scale(ONE / p.B(b, a_alg.unit(j)), a_alg.unit(j))
        a = linalg.sub(a_prime,
                       linalg.scale(HALF * p.B(a_prime, a_prime), b))
    else:
        a = linalg.vector(a)
        if p.B(a, b) != ONE or p.B(a, a) != ZERO:
            raise exception.BadDirection(
                reason='a must satisfy B(a, b) = 1 and B(a, a) = 0')

    w_space = linalg.Subspace(n, [p.form.apply(a), p.form.apply(b)])
    w_space = w_space.annihilator()
    w_basis = list(w_space.basis)

    def w_part(v):
        alpha = p.B(v, b)
        beta = p.B(v, a)
        return linalg.sub(linalg.sub(v, linalg.scale(alpha, a)),
                          linalg.scale(beta, b))

    def w_coords(v):
        return w_space.coordinates(w_part(v))

    w_alg = algebra.induced_algebra(a_alg, w_basis, w_coords,
                                    name='W', labels=algebra.subspace_labels(
                                        a_alg, w_basis, prefix='w'))
    w_form = forms.restrict(p.form, w_basis)
    W = forms.PseudoEuclideanAlgebra(w_alg, w_form,
                                     conf=jconf.Conf(verify=True,
                                                     max_dim=n))
    D = linalg.Matrix.from_columns(
        [w_coords(a_alg.multiply(a, w)) for w in w_basis], len(w_basis))
    aa = a_alg.multiply(a, a)
    x0 = w_coords(aa)
    k = p.B(aa, a)
    pair = extension.AdmissiblePair(D, x0, k)
    try:
        extended = generalized_double_extension(
            GdeSpec(W, pair), conf=jconf.Conf(verify=True, max_dim=n))
    except exception.SpecInvalid as e:
        raise exception.VerificationFailed(
            what='generalized double extension peel', detail=e.message)
    phi = linalg.Matrix.from_columns([a] + w_basis + [b], n)
    _verify_isometry(extended, p, phi, 'generalized double extension peel')
    LOG.debug("peeled %s along b: W has dimension %d, k = %s", p.name,
              W.dim, k)
    return GdePeel(W, pair, a, b, phi)


def peel_de(p, ideal, conf=None):
    """Writes p as the double extension of I/I^perp by a complement V.

    :param p: `forms.PseudoEuclideanAlgebra`
    :param ideal: `linalg.Subspace` with I^perp in I and I^perp nonzero
    :returns: `DePeel(W, V, pi, gamma, isometry, spec)`; W is realized on the
              orthogonal of I^perp + V, which is isometric to I/I^perp
    """
    a_alg = p.algebra
    n = p.dim
    if not algebra.is_ideal(a_alg, ideal):
        raise exception.NotMaximalComplemented(reason='I is not an ideal')
    perp = forms.orthogonal_complement(p, ideal)
    if (perp & ideal).is_zero():
        raise exception.NondegenerateIdeal()
    if not perp.issubset(ideal):
        raise exception.NotMaximalComplemented(
            reason='I^perp is not contained in I')
    v_vectors = ideal.complement_vectors()
    v_space = linalg.Subspace(n, v_vectors)
    if not algebra.is_subalgebra(a_alg, v_space):
        raise exception.NotMaximalComplemented(
            reason='the echelon complement of I is not a subalgebra')

    perp_basis = list(perp.basis)
    a_space = perp.sum(v_space)
    w_space = forms.orthogonal_complement(p, a_space)
    w_basis = list(w_space.basis)
    split = _basis_split([v_vectors, perp_basis, w_basis], n)

    def w_coords(v):
        return split(v)[2]

    strict = jconf.Conf(verify=True, max_dim=n)
    w_alg = algebra.induced_algebra(
        a_alg, w_basis, w_coords, name='W',
        labels=algebra.subspace_labels(a_alg, w_basis, prefix='w'))
    W = forms.PseudoEuclideanAlgebra(w_alg, forms.restrict(p.form, w_basis),
                                     conf=strict)
    V = algebra.induced_algebra(a_alg, v_vectors,
                                lambda v: split(v)[0], name='V')
    pi = representation.Representation(
        V, [linalg.Matrix.from_columns(
            [w_coords(a_alg.multiply(v, w)) for w in w_basis], len(w_basis))
            for v in v_vectors], len(w_basis), conf=strict)
    gamma = forms.restrict(p.form, v_vectors)

    # Dual vectors of V inside I^perp.
    pairing = linalg.Matrix(
        [[p.B(q, v) for q in perp_basis] for v in v_vectors],
        ncols=len(perp_basis))
    coefficients = pairing.inverse()
    duals = [linalg.combine(coefficients.column(j), perp_basis, n)
             for j in range(len(v_vectors))]

    spec = DoubleExtensionSpec(W, V, pi, gamma)
    try:
        extended = double_extension(spec, conf=strict)
    except exception.SpecInvalid as e:
        raise exception.VerificationFailed(
            what='double extension peel', detail=e.message)
    phi = linalg.Matrix.from_columns(v_vectors + w_basis + duals, n)
    _verify_isometry(extended, p, phi, 'double extension peel')
    LOG.debug("peeled %s along an ideal of dimension %d: V %d, W %d",
              p.name, ideal.dim, V.dim, W.dim)
    return DePeel(W, V, pi, gamma, phi, spec)


def _peelable(p, ideal):
    try:
        if not algebra.is_ideal(p.algebra, ideal) or ideal.is_full():
            return False
        perp = forms.orthogonal_complement(p, ideal)
        if (perp & ideal).is_zero() or not perp.issubset(ideal):
            return False
        v_space = linalg.Subspace(p.dim, ideal.complement_vectors())
        return algebra.is_subalgebra(p.algebra, v_space)
    except exception.JforgeException:
        return False


def candidate_ideals(p):
    """Ideals that satisfy the preconditions of peel_de.

    Tries the radical, the square and the ideal generated by the
    annihilator; the list is never claimed to be complete.
    """
    a_alg = p.algebra
    seeds = [diagnostics.radical_and_semisimplicity(a_alg).radical,
             algebra.square_space(a_alg)]
    ann = algebra.annihilator(a_alg)
    if not ann.is_zero():
        closure = algebra.ideal_closure_space(a_alg, ann)
        seeds.append(forms.orthogonal_complement(p, closure))
    found = []
    for ideal in seeds:
        if ideal not in found and _peelable(p, ideal):
            found.append(ideal)
    return found
