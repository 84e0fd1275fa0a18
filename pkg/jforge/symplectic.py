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
Symplectic structures, r-matrices and the Jordan Yang-Baxter equation.

A symplectic form omega on a Jordan algebra is antisymmetric, nondegenerate
and satisfies omega(xy, z) + omega(yz, x) + omega(zx, y) = 0. On a
pseudo-euclidean algebra it is the same thing as an invertible
B-antisymmetric derivation D with omega(x, y) = B(Dx, y).

An r-matrix is an antisymmetric n x n matrix r, r = sum r_ij e_i (x) e_j.
Its operator is R = r^T on dual coordinates and U = R phi = r^T G where
phi(x) = B(x, .). The Jordan Yang-Baxter tensor is

    C(r) = r12 r13 - r12 r23 + r13 r23

..code:: python

    from jforge import catalog
    from jforge import symplectic

    p = catalog.get('J_2_0').pseudo_euclidean
    bridge = symplectic.derivation_form_bridge(p, omega=[[0, 1], [-1, 0]])
    assert bridge.symplectic
    r = symplectic.rmatrix_from_symplectic(p, [[0, 1], [-1, 0]])
    assert symplectic.ybe_check(p, r).cjr_zero
"""

import collections
import itertools
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import double_extension
from jforge import exception
from jforge import forms
from jforge import linalg

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO
ONE = linalg.ONE
HALF = linalg.Fraction(1, 2)

COND_D_A0 = 'D(a0)'
COND_R_A0 = 'R_a0'
COND_K_LAMBDA = 'k-lambda'
COND_LAMBDA = 'lambda'

SymplecticAlgebra = collections.namedtuple(
    'SymplecticAlgebra', 'p omega derivation')
YbeReport = collections.namedtuple(
    'YbeReport', 'U cjr_zero tensor star_product morphism dual_isomorphic')
ImageReport = collections.namedtuple(
    'ImageReport', 'subalgebra algebra omega')
DrinfeldDouble = collections.namedtuple(
    'DrinfeldDouble', 'delta dual double is_bialgebra')
SymplecticPeel = collections.namedtuple(
    'SymplecticPeel', 'W omega pair a0 lam a b isometry')


class SymplecticReport(collections.namedtuple(
        'SymplecticReport',
        'antisymmetric nondegenerate cyclic first_violation')):

    @property
    def ok(self):
        return self.antisymmetric and self.nondegenerate and self.cyclic


class Bridge(collections.namedtuple(
        'Bridge', 'omega D is_derivation antisymmetric invertible')):

    @property
    def symplectic(self):
        return self.is_derivation and self.antisymmetric and self.invertible


class Comultiplication(object):
    """Delta(e_i) = sum tensor[i][j][k] e_j (x) e_k."""

    def __init__(self, tensor):
        n = len(tensor)
        rows = []
        for plane in tensor:
            if len(plane) != n or any(len(r) != n for r in plane):
                raise exception.DimensionMismatch(
                    reason='comultiplication tensor is not %d^3' % n)
            rows.append(tuple(linalg.vector(r) for r in plane))
        self.dim = n
        self.tensor = tuple(rows)

    @classmethod
    def zero(cls, n):
        return cls([[linalg.zeros(n)] * n for _i in range(n)])

    def __call__(self, x):
        """Coefficient matrix of Delta(x)."""
        n = self.dim
        rows = [[ZERO] * n for _i in range(n)]
        for i, c in enumerate(x):
            if c:
                for j in range(n):
                    for k in range(n):
                        rows[j][k] += c * self.tensor[i][j][k]
        return linalg.Matrix(rows, ncols=n)

    def is_zero(self):
        return not any(v for plane in self.tensor for r in plane for v in r)

    def is_cocommutative(self):
        n = self.dim
        return all(self.tensor[i][j][k] == self.tensor[i][k][j]
                   for i in range(n) for j in range(n) for k in range(n))

    def __eq__(self, other):
        if not isinstance(other, Comultiplication):
            return NotImplemented
        return self.tensor == other.tensor

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash(self.tensor)


def _as_matrix(m):
    if isinstance(m, linalg.Matrix):
        return m
    return linalg.Matrix(m)


def cyclic_violation(a, gram):
    """First triple with omega(xy,z) + omega(yz,x) + omega(zx,y) != 0."""
    n = a.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        total = (forms.value(gram, a.product(i, j), a.unit(k)) +
                 forms.value(gram, a.product(j, k), a.unit(i)) +
                 forms.value(gram, a.product(k, i), a.unit(j)))
        if total:
            return algebra.Violation(
                'cyclic', (a.basis[i], a.basis[j], a.basis[k]), total, ZERO)
    return None


def check_symplectic(a, omega):
    """Antisymmetry, nondegeneracy and the cyclic identity of omega on a.

    :returns: `SymplecticReport`
    """
    gram = forms.as_gram(_as_matrix(omega), a.dim)
    antisymmetric = gram.is_antisymmetric()
    nondegenerate = gram.det() != ZERO
    bad = cyclic_violation(a, gram)
    first = None
    if not antisymmetric:
        i, j = next((i, j) for i in range(a.dim) for j in range(a.dim)
                    if gram[i, j] != -gram[j, i])
        first = algebra.Violation('antisymmetry', (a.basis[i], a.basis[j]),
                                  gram[i, j], -gram[j, i])
    elif not nondegenerate:
        first = algebra.Violation('nondegeneracy', (), ZERO, ZERO)
    elif bad is not None:
        first = bad
    return SymplecticReport(antisymmetric, nondegenerate, bad is None, first)


def derivation_form_bridge(p, omega=None, D=None):
    """Converts between omega and D through omega(x, y) = B(Dx, y).

    Exactly one of omega and D is given. The report says whether D is a
    derivation, B-antisymmetric and invertible; omega is symplectic exactly
    when all three hold.
    """
    if (omega is None) == (D is None):
        raise exception.InvalidInput(reason='give exactly one of omega, D')
    if omega is not None:
        omega = forms.as_gram(_as_matrix(omega), p.dim)
        D = p.form.inverse() @ omega.transpose()
    else:
        D = _as_matrix(D)
        if D.shape != (p.dim, p.dim):
            raise exception.DimensionMismatch(
                reason='operator of shape %s on dimension %d' % (
                    D.shape, p.dim))
        omega = D.transpose() @ p.form
    return Bridge(omega, D, algebra.is_derivation(p.algebra, D),
                  D.transpose() @ p.form == -(p.form @ D),
                  D.is_invertible())


def check_invertible_derivation_nilpotent(a, d):
    """An algebra with an invertible derivation must be nilpotent.

    :returns: the nilpotency class of a
    """
    d = _as_matrix(d)
    bad = algebra.derivation_violation(a, d)
    if bad is not None:
        raise exception.NotADerivation(index=bad)
    if not d.is_invertible():
        raise exception.InvalidInput(reason='derivation is not invertible')
    cls = algebra.nilpotency_class(a)
    if cls is None:
        LOG.warning("%s has an invertible derivation but is not nilpotent",
                    a.name)
        raise exception.VerificationFailed(
            what='nilpotency', detail='algebra with an invertible derivation '
                                      'is not nilpotent')
    return cls


def _require_rmatrix(n, r):
    r = _as_matrix(r)
    if r.shape != (n, n):
        raise exception.DimensionMismatch(
            reason='r-matrix of shape %s on dimension %d' % (r.shape, n))
    if not r.is_antisymmetric():
        raise exception.NotAntisymmetric()
    return r


def u_from_rmatrix(p, r):
    """U = R o phi = r^T G."""
    return _require_rmatrix(p.dim, r).transpose() @ p.form


def rmatrix_from_u(p, u):
    """r with r^T G = U; U must be B-antisymmetric."""
    return _require_rmatrix(p.dim, p.form.inverse() @ _as_matrix(u).T)


def omega_from_u(p, u):
    """omega_U(x, y) = B(U^-1 x, y)."""
    return _as_matrix(u).inverse().transpose() @ p.form


def cjr_tensor(a, r):
    """C(r) as a dense n x n x n tensor."""
    n = a.dim
    c = [[[ZERO] * n for _j in range(n)] for _i in range(n)]
    nz = [(i, j, r[i, j]) for i in range(n) for j in range(n) if r[i, j]]
    for i, j, rij in nz:
        for k, l, rkl in nz:
            w = rij * rkl
            # r12 r13 = (e_i e_k) (x) e_j (x) e_l
            for s, v in enumerate(a.product(i, k)):
                if v:
                    c[s][j][l] += w * v
            # r12 r23 = e_i (x) (e_j e_k) (x) e_l
            for s, v in enumerate(a.product(j, k)):
                if v:
                    c[i][s][l] -= w * v
            # r13 r23 = e_i (x) e_k (x) (e_j e_l)
            for s, v in enumerate(a.product(j, l)):
                if v:
                    c[i][k][s] += w * v
    return tuple(tuple(tuple(row) for row in plane) for plane in c)


def cjr_functional(a, r):
    """<f,R(h)R(l)> + <h,R(l)R(f)> + <l,R(f)R(h)> on dual basis triples."""
    n = a.dim
    images = [r.row(q) for q in range(n)]
    prods = [[a.multiply(images[q], images[s]) for s in range(n)]
             for q in range(n)]
    return tuple(tuple(tuple(prods[q][s][p] + prods[s][p][q] +
                             prods[p][q][s]
                             for s in range(n))
                       for q in range(n))
                 for p in range(n))


def star_table(a, u):
    """x * y = U(x) y + x U(y) on basis vectors."""
    n = a.dim
    cols = u.columns()
    return [[linalg.add(a.multiply(cols[i], a.unit(j)),
                        a.multiply(a.unit(i), cols[j]))
             for j in range(n)] for i in range(n)]


def delta_from_rmatrix(a, r):
    """Delta_r(x) = sum a_i x (x) b_i - a_i (x) x b_i."""
    n = a.dim
    r = _require_rmatrix(n, r)
    t = [[[ZERO] * n for _j in range(n)] for _i in range(n)]
    for i in range(n):
        for p in range(n):
            pi = a.product(p, i)
            for j in range(n):
                if pi[j]:
                    for k in range(n):
                        t[i][j][k] += r[p, k] * pi[j]
        for q in range(n):
            iq = a.product(i, q)
            for k in range(n):
                if iq[k]:
                    for j in range(n):
                        t[i][j][k] -= r[j, q] * iq[k]
    return Comultiplication(t)


def dual_table(delta):
    """Product on V* with <fg, v> = <f (x) g, Delta(v)>."""
    n = delta.dim
    return [[tuple(delta.tensor[i][j][k] for i in range(n))
             for k in range(n)] for j in range(n)]


def double_table(a, delta):
    """(v+f)(w+g) = (vw + f.w + v.g) + (fg + f*w + v*g) on V + V*."""
    n = a.dim
    t = delta.tensor
    size = 2 * n
    table = [[None] * size for _i in range(size)]
    for i in range(n):
        for j in range(n):
            table[i][j] = a.product(i, j) + linalg.zeros(n)
            table[n + i][n + j] = linalg.zeros(n) + tuple(
                t[m][i][j] for m in range(n))
    for i in range(n):
        for k in range(n):
            # e_i . e_k* and e_i * e_k*
            left = tuple(t[i][k][m] for m in range(n))
            star = tuple(a.product(w, i)[k] for w in range(n))
            table[i][n + k] = left + star
            # e_k* . e_i and e_k* * e_i
            right = tuple(t[i][j][k] for j in range(n))
            star = tuple(a.product(i, w)[k] for w in range(n))
            table[n + k][i] = right + star
    return table


def _dual_labels(a):
    labels = list(a.basis)
    for b in a.basis:
        labels.append(algebra.fresh_label(b + '*', labels))
    return labels


def delta_r_and_double(v, r=None, delta=None, name=None):
    """Comultiplication Delta (given or from r), the dual algebra and the
    double D(V) = V + V*.

    :returns: `DrinfeldDouble(delta, dual, double, is_bialgebra)`; double is
              a `JordanAlgebra` when is_bialgebra and a raw
              `StructureTable` otherwise
    """
    if (r is None) == (delta is None):
        raise exception.InvalidInput(reason='give exactly one of r, delta')
    if r is not None:
        delta = delta_from_rmatrix(v, r)
    elif not isinstance(delta, Comultiplication):
        delta = Comultiplication(delta)
    if delta.dim != v.dim:
        raise exception.DimensionMismatch(
            reason='comultiplication of dimension %d on %d' % (
                delta.dim, v.dim))
    dual = algebra.StructureTable(
        dual_table(delta), basis=_dual_labels(v)[v.dim:])
    table = double_table(v, delta)
    labels = _dual_labels(v)
    report = algebra.check_jordan(algebra.StructureTable(table,
                                                         basis=labels))
    if report.jordan:
        double = algebra.JordanAlgebra(table, basis=labels, name=name)
    else:
        LOG.debug("double of %s fails %s at %s", v.name,
                  report.first_violation.identity,
                  report.first_violation.index)
        double = algebra.StructureTable(table, basis=labels, name=name)
    return DrinfeldDouble(delta, dual, double, report.jordan)


def ybe_check(p, r):
    """Evaluates C(r) and, when it vanishes, the product U(x)y + xU(y).

    The tensor and the functional evaluation of C(r) must agree. When
    C(r) = 0 the star product is verified to be Jordan, U to be a morphism
    onto the original product, and -phi to be an isomorphism onto the dual
    algebra of Delta_r.

    :returns: `YbeReport`
    """
    a = p.algebra
    r = _require_rmatrix(p.dim, r)
    tensor = cjr_tensor(a, r)
    if tensor != cjr_functional(a, r):
        raise exception.VerificationFailed(
            what='C(r)', detail='tensor and functional evaluations disagree')
    cjr_zero = not any(v for plane in tensor for row in plane for v in row)
    u = u_from_rmatrix(p, r)
    if u.transpose() @ p.form != -(p.form @ u):
        raise exception.VerificationFailed(
            what='U', detail='not B-antisymmetric')
    if not cjr_zero:
        LOG.debug("C(r) does not vanish on %s", p.name)
        return YbeReport(u, False, tensor, None, None, None)
    table = star_table(a, u)
    report = algebra.check_jordan(table)
    if not report.jordan:
        raise exception.VerificationFailed(
            what='star product', detail='not a Jordan product')
    star = algebra.JordanAlgebra(table, basis=a.basis,
                                 name='%s*' % (p.name or 'J'))
    cols = u.columns()
    for i in range(p.dim):
        for j in range(i, p.dim):
            if u.apply(star.product(i, j)) != a.multiply(cols[i], cols[j]):
                raise exception.VerificationFailed(
                    what='U', detail='not a morphism from the star product')
    dual = delta_r_and_double(a, r=r).dual
    iso = algebra.check_isomorphism(star, dual, p.form.scale(-ONE))
    if not iso:
        raise exception.VerificationFailed(
            what='star product', detail='not isomorphic to the dual algebra')
    return YbeReport(u, True, tensor, star, True, iso)


def image_u_symplectic(p, r):
    """Im(U) with omega(Ux, Uy) = B(Ux, y).

    :returns: `ImageReport(subalgebra, algebra, omega)`; omega is the Gram
              matrix on the echelon basis of the image
    """
    report = ybe_check(p, r)
    if not report.cjr_zero:
        raise exception.YbeFails()
    u = report.U
    image = u.image()
    if not algebra.is_subalgebra(p.algebra, image):
        raise exception.VerificationFailed(
            what='Im(U)', detail='not a subalgebra')
    vectors = list(image.basis)
    preimages = [linalg.solve_and_kernel(u, v).solution for v in vectors]
    gram = linalg.Matrix([[p.B(x, y) for y in preimages] for x in vectors],
                         ncols=len(vectors))
    sub = algebra.subalgebra(p.algebra, image, name='Im(U)').algebra
    check = check_symplectic(sub, gram)
    if not check.ok:
        raise exception.VerificationFailed(
            what='omega on Im(U)', detail='fails %s' % (
                check.first_violation.identity,))
    return ImageReport(image, sub, gram)


def rmatrix_from_symplectic(p, omega):
    """Nondegenerate r-matrix of a symplectic form: r = omega^-1, so that
    U^-1 is the derivation of omega.
    """
    bridge = derivation_form_bridge(p, omega=omega)
    if not bridge.symplectic:
        raise exception.InvalidInput(reason='omega is not symplectic')
    r = bridge.omega.inverse()
    report = ybe_check(p, r)
    if not report.cjr_zero:
        raise exception.VerificationFailed(
            what='r-matrix', detail='C(r) does not vanish')
    if report.U.inverse() != bridge.D:
        raise exception.VerificationFailed(
            what='r-matrix', detail='U^-1 differs from the derivation')
    return r


def _require_symplectic(p, omega):
    bridge = derivation_form_bridge(p, omega=omega)
    if not bridge.symplectic:
        raise exception.InvalidInput(
            reason='omega is not a symplectic form on %s' % p.name)
    return bridge


def extended_derivation(p1, delta, a0, lam):
    """Delta(b) = lam b, Delta(x) = delta(x) - B1(a0, x) b,
    Delta(a) = a0 - lam a on Ka + J1 + Kb.
    """
    n = p1.dim
    cols = [(-lam,) + tuple(a0) + (ZERO,)]
    for i, col in enumerate(delta.columns()):
        cols.append((ZERO,) + col + (-p1.B(a0, p1.algebra.unit(i)),))
    cols.append(linalg.scale(lam, linalg.unit(n + 2, n + 1)))
    return linalg.Matrix.from_columns(cols, n + 2)


def symplectic_double_extension(s1, pair, a0, lam, name=None, conf=None):
    """Symplectic double extension of (P1, omega1) by (D, x0, k), a0, lam.

    :param s1: (P1, omega1)
    :param pair: `extension.AdmissiblePair` with D B1-symmetric
    :returns: `SymplecticAlgebra(p, omega, derivation)`
    :raises: CompatibilityFails naming the failing condition
    """
    p1, omega1 = s1
    delta = _require_symplectic(p1, omega1).D
    a = p1.algebra
    a0 = linalg.vector(a0)
    lam = linalg.to_fraction(lam)
    D, x0, k = pair
    if len(a0) != p1.dim:
        raise exception.DimensionMismatch(
            reason='a0 of length %d for dimension %d' % (len(a0), p1.dim))
    double_extension.validate_gde_spec(double_extension.GdeSpec(p1, pair))
    checks = (
        (COND_LAMBDA, lam != ZERO),
        (COND_D_A0, D.apply(a0) == linalg.add(
            linalg.scale(lam, x0), linalg.scale(HALF, delta.apply(x0)))),
        (COND_R_A0, a.operator(a0) ==
            delta @ D - D @ delta + D.scale(lam)),
        (COND_K_LAMBDA, k * lam == p1.B(a0, x0)),
    )
    for condition, ok in checks:
        if not ok:
            LOG.warning("symplectic double extension: %s fails", condition)
            raise exception.CompatibilityFails(condition=condition)
    p = double_extension.generalized_double_extension(
        double_extension.GdeSpec(p1, pair), name=name, conf=conf)
    big = extended_derivation(p1, delta, a0, lam)
    bridge = derivation_form_bridge(p, D=big)
    if not bridge.symplectic:
        raise exception.VerificationFailed(
            what='symplectic double extension',
            detail='extended derivation is not an invertible '
                   'B-antisymmetric derivation')
    report = check_symplectic(p.algebra, bridge.omega)
    if not report.ok:
        raise exception.VerificationFailed(
            what='symplectic double extension',
            detail='omega fails %s' % report.first_violation.identity)
    check_invertible_derivation_nilpotent(p.algebra, big)
    LOG.debug("symplectic double extension of %s has dimension %d",
              p1.name, p.dim)
    return SymplecticAlgebra(p, bridge.omega, big)


def restricted_eigenvector(op, space):
    """An eigenvector of op inside an op-stable subspace.

    The smallest rational eigenvalue is used.

    :returns: (vector, eigenvalue)
    :raises: SplitFailure when op restricted to space has no rational
             splitting
    """
    try:
        cols = [space.coordinates(op.apply(v)) for v in space.basis]
    except exception.InvalidInput:
        raise exception.VerificationFailed(
            what='eigenvector search', detail='subspace is not stable')
    if not cols:
        raise exception.NoEigenvector(where='the zero subspace')
    local = linalg.Matrix.from_columns(cols, space.dim)
    spaces = linalg.rational_spectral(local)
    lam = spaces[0].value
    shifted = local - linalg.Matrix.identity(space.dim).scale(lam)
    coords = shifted.kernel().basis[0]
    return linalg.combine(coords, space.basis, space.ambient_dim), lam


def peel_symplectic_double_extension(p, omega, b=None, a=None, conf=None):
    """Writes (p, omega) as a symplectic double extension.

    :param b: optional eigenvector of the derivation in Ann; found by
              `restricted_eigenvector` when omitted
    :param a: optional isotropic vector with B(a, b) = 1
    :returns: `SymplecticPeel(W, omega, pair, a0, lam, a, b, isometry)`
    """
    if p.dim == 0:
        raise exception.ZeroAlgebra()
    big = _require_symplectic(p, omega).D
    omega = forms.as_gram(_as_matrix(omega), p.dim)
    check_invertible_derivation_nilpotent(p.algebra, big)
    ann = algebra.annihilator(p.algebra)
    if b is None:
        b, lam = restricted_eigenvector(big, ann)
    else:
        b = linalg.vector(b)
        if not any(b):
            raise exception.BadDirection(reason='b is zero')
        image = big.apply(b)
        k = next(i for i, c in enumerate(b) if c)
        lam = image[k] / b[k]
        if image != linalg.scale(lam, b):
            raise exception.BadDirection(reason='b is not an eigenvector')
    peel = double_extension.peel_gde(p, b, a=a, conf=conf)
    phi = peel.isometry
    local = phi.inverse() @ big @ phi
    m = peel.W.dim
    size = m + 2

    def fail(detail):
        raise exception.VerificationFailed(
            what='symplectic double extension peel', detail=detail)

    if local.column(size - 1) != linalg.scale(lam, linalg.unit(size,
                                                               size - 1)):
        fail('Delta(b) is not lam b')
    col_a = local.column(0)
    if col_a[0] != -lam or col_a[size - 1] != ZERO:
        fail('Delta(a) is not a0 - lam a')
    a0 = col_a[1:size - 1]
    for i in range(m):
        col = local.column(i + 1)
        expected = -peel.W.B(a0, peel.W.algebra.unit(i))
        if col[0] != ZERO or col[size - 1] != expected:
            fail('Delta does not preserve W + Kb')
    delta = linalg.Matrix(
        [local.row(i + 1)[1:size - 1] for i in range(m)], ncols=m)
    w_omega = delta.transpose() @ peel.W.form
    try:
        rebuilt = symplectic_double_extension(
            (peel.W, w_omega), peel.pair, a0, lam,
            conf=jconf.Conf(verify=True, max_dim=max(p.dim, 1)))
    except (exception.CompatibilityFails, exception.SpecInvalid,
            exception.InvalidInput) as e:
        fail(e.message)
    if not forms.check_isometry(rebuilt.p, p, phi):
        fail('re-extension is not isometric to the input')
    if phi.transpose() @ omega @ phi != rebuilt.omega:
        fail('re-extension does not carry omega')
    LOG.debug("peeled %s symplectically: W has dimension %d, lambda = %s",
              p.name, m, lam)
    return SymplecticPeel(peel.W, w_omega, peel.pair, a0, lam, peel.a,
                          peel.b, phi)


def symplectic_from_derivation(p, d):
    """SymplecticAlgebra for an invertible B-antisymmetric derivation."""
    bridge = derivation_form_bridge(p, D=d)
    if not bridge.symplectic:
        raise exception.InvalidInput(
            reason='operator is not an invertible B-antisymmetric '
                   'derivation')
    check_invertible_derivation_nilpotent(p.algebra, bridge.D)
    return SymplecticAlgebra(p, bridge.omega, bridge.D)
