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
Jordan-Manin triples.

A Manin triple (P, U, V) splits a pseudo-euclidean algebra into two totally
isotropic subalgebras. With a symplectic form omega for which U and V are
also omega-isotropic the triple is symplectic.

Double extensions keep the splitting: U' = U + Kb and V' = V + Ka. The
peelers go the other way along a vector b of the annihilator lying in U
(or in V, with the roles of U and V exchanged).

..code:: python

    from jforge import catalog
    from jforge import linalg
    from jforge import manin

    p = catalog.get('J_2_0').pseudo_euclidean
    m = manin.ManinTriple(p, linalg.Subspace(2, [[1, 0]]),
                          linalg.Subspace(2, [[0, 1]]))
    assert manin.check_manin(*m).ok
"""

import collections
import logging

from jforge import algebra
from jforge import conf as jconf
from jforge import double_extension
from jforge import exception
from jforge import forms
from jforge import linalg
from jforge import symplectic

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO
ONE = linalg.ONE

U_SUBALGEBRA = 'U subalgebra'
V_SUBALGEBRA = 'V subalgebra'
U_ISOTROPIC = 'U isotropic'
V_ISOTROPIC = 'V isotropic'
DIRECT_SUM = 'U + V direct'
OMEGA_SYMPLECTIC = 'omega symplectic'
U_OMEGA_ISOTROPIC = 'U omega-isotropic'
V_OMEGA_ISOTROPIC = 'V omega-isotropic'

D_STABLE = 'D(V) in V'
X0_IN_V = 'x0 in V'
A0_IN_V = 'a0 in V'
K_ZERO = 'k = 0'

ManinReport = collections.namedtuple('ManinReport', 'ok failed_condition')
AnnIntersections = collections.namedtuple('AnnIntersections', 'U V')
ManinPeel = collections.namedtuple(
    'ManinPeel', 'triple pair a b isometry swapped')
SymplecticManinPeel = collections.namedtuple(
    'SymplecticManinPeel', 'triple pair a0 lam a b isometry swapped')


class ManinTriple(collections.namedtuple('ManinTriple', 'p U V omega')):
    """(P, U, V) with an optional symplectic Gram matrix omega."""

    def __new__(cls, p, U, V, omega=None):
        if omega is not None:
            if not isinstance(omega, linalg.Matrix):
                omega = linalg.Matrix(omega, ncols=p.dim)
            omega = forms.as_gram(omega, p.dim)
        return super(ManinTriple, cls).__new__(cls, p, U, V, omega)

    def swapped(self):
        return ManinTriple(self.p, self.V, self.U, self.omega)


def check_manin(p, U, V, omega=None):
    """Evaluates every Manin triple condition; the first failing one is
    named in the report.
    """
    n = p.dim
    for space in (U, V):
        if space.ambient_dim != n:
            raise exception.DimensionMismatch(
                reason='subspace in ambient %d for dimension %d' % (
                    space.ambient_dim, n))
    checks = [
        (U_SUBALGEBRA, lambda: algebra.is_subalgebra(p.algebra, U)),
        (V_SUBALGEBRA, lambda: algebra.is_subalgebra(p.algebra, V)),
        (U_ISOTROPIC, lambda: forms.is_isotropic(p.form, U)),
        (V_ISOTROPIC, lambda: forms.is_isotropic(p.form, V)),
        (DIRECT_SUM, lambda: U.dim + V.dim == n and U.sum(V).is_full()),
    ]
    if omega is not None:
        gram = forms.as_gram(
            omega if isinstance(omega, linalg.Matrix)
            else linalg.Matrix(omega, ncols=n), n)
        checks.extend([
            (OMEGA_SYMPLECTIC,
             lambda: symplectic.check_symplectic(p.algebra, gram).ok),
            (U_OMEGA_ISOTROPIC, lambda: forms.is_isotropic(gram, U)),
            (V_OMEGA_ISOTROPIC, lambda: forms.is_isotropic(gram, V)),
        ])
    for condition, check in checks:
        if not check():
            LOG.debug("Manin triple on %s fails %s", p.name, condition)
            return ManinReport(False, condition)
    return ManinReport(True, None)


def _require_manin(m, what):
    report = check_manin(*m)
    if not report.ok:
        LOG.warning("%s: %s fails", what, report.failed_condition)
        raise exception.VerificationFailed(
            what=what, detail='%s fails' % report.failed_condition)


def ann_intersections(m):
    """U and V intersected with the annihilator."""
    ann = algebra.annihilator(m.p.algebra)
    return AnnIntersections(m.U & ann, m.V & ann)


def _extended_subspaces(n, U, V):
    """U + Kb and V + Ka inside Ka + J + Kb."""
    size = n + 2

    def embed(v):
        return (ZERO,) + tuple(v) + (ZERO,)

    u_ext = linalg.Subspace(size, [embed(u) for u in U.basis] +
                            [linalg.unit(size, size - 1)])
    v_ext = linalg.Subspace(size, [embed(v) for v in V.basis] +
                            [linalg.unit(size, 0)])
    return u_ext, v_ext


def _manin_violation(V, pair):
    D, x0, k = pair
    if not V.image_under(D).issubset(V):
        return D_STABLE
    if not V.contains(x0):
        return X0_IN_V
    if k != ZERO:
        return K_ZERO
    return None


def manin_double_extension(m, pair, name=None, conf=None):
    """Generalized double extension of a Manin triple with k = 0.

    :param m: `ManinTriple`; omega is ignored
    :param pair: `extension.AdmissiblePair` with D(V) in V and x0 in V
    :returns: `ManinTriple(P', U + Kb, V + Ka)`
    :raises: SpecInvalid naming the failing precondition
    """
    spec = double_extension.GdeSpec(m.p, pair)
    double_extension.validate_gde_spec(spec)
    bad = _manin_violation(m.V, pair)
    if bad is not None:
        LOG.warning("Manin double extension: %s fails", bad)
        raise exception.SpecInvalid(reason='%s fails' % bad)
    p = double_extension.generalized_double_extension(spec, name=name,
                                                      conf=conf)
    u_ext, v_ext = _extended_subspaces(m.p.dim, m.U, m.V)
    out = ManinTriple(p, u_ext, v_ext)
    _require_manin(out, 'Manin double extension')
    LOG.debug("Manin double extension of %s has dimension %d", m.p.name,
              p.dim)
    return out


def _isotropic_partner(p, V, b):
    """a in V with B(a, b) = 1."""
    for v in V.basis:
        c = p.B(v, b)
        if c:
            return linalg.scale(ONE / c, v)
    raise exception.VerificationFailed(
        what='Manin peel', detail='V is orthogonal to b')


def _w_subspace(phi_inv, space, m):
    """space, contained in W, in the coordinates of the W basis."""
    vectors = []
    for v in space.basis:
        coords = phi_inv.apply(v)
        if coords[0] or coords[m + 1]:
            raise exception.VerificationFailed(
                what='Manin peel', detail='subspace leaves W')
        vectors.append(coords[1:m + 1])
    return linalg.Subspace(m, vectors)


def _orient(m, ann_u, ann_v, error):
    if not ann_u.is_zero():
        return m, ann_u, False
    if not ann_v.is_zero():
        return m.swapped(), ann_v, True
    raise error


def _peeled_subspaces(m, peel_space, isometry, dim_w):
    """U' = U & W and V' = V & b^perp in W coordinates."""
    w_space = linalg.Subspace(m.p.dim, isometry.columns()[1:dim_w + 1])
    phi_inv = isometry.inverse()
    return (_w_subspace(phi_inv, m.U & w_space, dim_w),
            _w_subspace(phi_inv, m.V & peel_space, dim_w))


def _b_perp(p, b):
    return linalg.Subspace(p.dim, [p.form.apply(b)]).annihilator()


def _check_round_trip(rebuilt, m, isometry, what):
    if not forms.check_isometry(rebuilt.p, m.p, isometry):
        raise exception.VerificationFailed(
            what=what, detail='re-extension is not isometric to the input')
    if (rebuilt.U.image_under(isometry) != m.U or
            rebuilt.V.image_under(isometry) != m.V):
        raise exception.VerificationFailed(
            what=what, detail='re-extension does not carry U and V')


def peel_manin(m, conf=None):
    """Writes a Manin triple as a Manin double extension.

    b is taken from U & Ann when it is nonzero, otherwise from V & Ann
    with the roles of U and V exchanged (swapped is then True and the
    returned triple and pair are in the exchanged orientation).

    :returns: `ManinPeel(triple, pair, a, b, isometry, swapped)`
    :raises: NoIsotropicAnnDirection
    """
    ann = ann_intersections(m)
    m, space, swapped = _orient(m, ann.U, ann.V,
                                exception.NoIsotropicAnnDirection())
    p = m.p
    b = space.basis[0]
    a = _isotropic_partner(p, m.V, b)
    peel = double_extension.peel_gde(p, b, a=a, conf=conf)
    dim_w = peel.W.dim
    u_w, v_w = _peeled_subspaces(m, _b_perp(p, b), peel.isometry, dim_w)
    bad = _manin_violation(v_w, peel.pair)
    if bad is not None:
        raise exception.VerificationFailed(
            what='Manin peel', detail='%s fails' % bad)
    triple = ManinTriple(peel.W, u_w, v_w)
    _require_manin(triple, 'Manin peel')
    rebuilt = manin_double_extension(
        triple, peel.pair, conf=jconf.Conf(verify=True, max_dim=p.dim))
    _check_round_trip(rebuilt, m, peel.isometry, 'Manin peel')
    LOG.debug("peeled Manin triple on %s (swapped %s): W has dimension %d",
              p.name, swapped, dim_w)
    return ManinPeel(triple, peel.pair, a, b, peel.isometry, swapped)


def spectral_split(p, omega):
    """U and V from the positive and negative generalized eigenspaces of
    the derivation of omega.

    :returns: `ManinTriple(p, U, V, omega)`
    :raises: SplitFailure, ZeroEigenvalue
    """
    bridge = symplectic.derivation_form_bridge(p, omega=omega)
    if not (bridge.is_derivation and bridge.antisymmetric):
        raise exception.InvalidInput(
            reason='omega does not come from a B-antisymmetric derivation')
    spaces = linalg.rational_spectral(bridge.D)
    if any(s.value == ZERO for s in spaces):
        LOG.warning("derivation of omega on %s has eigenvalue 0", p.name)
        raise exception.ZeroEigenvalue()
    by_value = dict((s.value, s.space) for s in spaces)
    n = p.dim
    for lam, first in by_value.items():
        for mu, second in by_value.items():
            target = by_value.get(lam + mu, linalg.Subspace.zero(n))
            product = algebra.product_space(p.algebra, first, second)
            if not product.issubset(target):
                raise exception.VerificationFailed(
                    what='spectral split',
                    detail='J(%s) J(%s) is not in J(%s)' % (lam, mu,
                                                            lam + mu))
            if lam + mu != ZERO and any(p.B(x, y) for x in first.basis
                                        for y in second.basis):
                raise exception.VerificationFailed(
                    what='spectral split',
                    detail='B(J(%s), J(%s)) is not zero' % (lam, mu))
    U = linalg.Subspace.zero(n)
    V = linalg.Subspace.zero(n)
    for lam, space in by_value.items():
        if lam > ZERO:
            U = U.sum(space)
        else:
            V = V.sum(space)
    out = ManinTriple(p, U, V, bridge.omega)
    _require_manin(out, 'spectral split')
    LOG.debug("spectral split of %s: eigenvalues %s", p.name,
              ', '.join(str(v) for v in sorted(by_value)))
    return out


def _require_omega(m):
    if m.omega is None:
        raise exception.InvalidInput(reason='triple carries no omega')


def symplectic_manin_double_extension(m, pair, a0, lam, name=None,
                                      conf=None):
    """Symplectic double extension of a symplectic Manin triple.

    :param m: `ManinTriple` with omega
    :param pair: `extension.AdmissiblePair` with D(V) in V, x0 in V, k = 0
    :param a0: vector of V
    :returns: `ManinTriple(P', U + Kb, V + Ka, omega')`
    :raises: CompatibilityFails naming the failing condition
    """
    _require_omega(m)
    a0 = linalg.vector(a0)
    bad = _manin_violation(m.V, pair)
    if bad is None and not m.V.contains(a0):
        bad = A0_IN_V
    if bad is not None:
        LOG.warning("symplectic Manin double extension: %s fails", bad)
        raise exception.CompatibilityFails(condition=bad)
    s = symplectic.symplectic_double_extension(
        (m.p, m.omega), pair, a0, lam, name=name, conf=conf)
    u_ext, v_ext = _extended_subspaces(m.p.dim, m.U, m.V)
    for space in (u_ext, v_ext):
        if not space.image_under(s.derivation).issubset(space):
            raise exception.VerificationFailed(
                what='symplectic Manin double extension',
                detail='derivation does not stabilize U and V')
    out = ManinTriple(s.p, u_ext, v_ext, s.omega)
    _require_manin(out, 'symplectic Manin double extension')
    return out


def peel_symplectic_manin(m, conf=None):
    """Writes a symplectic Manin triple as a symplectic Manin double
    extension.

    The eigenvector b of the derivation is taken in Ann & U when it is
    nonzero, otherwise in Ann & V with U and V exchanged.

    :returns: `SymplecticManinPeel`
    :raises: NoEigenvector, SplitFailure
    """
    _require_omega(m)
    ann = ann_intersections(m)
    m, space, swapped = _orient(
        m, ann.U, ann.V, exception.NoEigenvector(where='Ann & U + Ann & V'))
    p = m.p
    bridge = symplectic.derivation_form_bridge(p, omega=m.omega)
    if not bridge.symplectic:
        raise exception.InvalidInput(reason='omega is not symplectic')
    b, _lam = symplectic.restricted_eigenvector(bridge.D, space)
    a = _isotropic_partner(p, m.V, b)
    peel = symplectic.peel_symplectic_double_extension(p, m.omega, b=b, a=a,
                                                       conf=conf)
    dim_w = peel.W.dim
    u_w, v_w = _peeled_subspaces(m, _b_perp(p, b), peel.isometry, dim_w)
    bad = _manin_violation(v_w, peel.pair)
    if bad is None and not v_w.contains(peel.a0):
        bad = A0_IN_V
    if bad is not None:
        raise exception.VerificationFailed(
            what='symplectic Manin peel', detail='%s fails' % bad)
    triple = ManinTriple(peel.W, u_w, v_w, peel.omega)
    _require_manin(triple, 'symplectic Manin peel')
    rebuilt = symplectic_manin_double_extension(
        triple, peel.pair, peel.a0, peel.lam,
        conf=jconf.Conf(verify=True, max_dim=p.dim))
    _check_round_trip(rebuilt, m, peel.isometry, 'symplectic Manin peel')
    if peel.isometry.transpose() @ m.omega @ peel.isometry != rebuilt.omega:
        raise exception.VerificationFailed(
            what='symplectic Manin peel',
            detail='re-extension does not carry omega')
    LOG.debug("peeled symplectic Manin triple on %s (swapped %s), "
              "lambda = %s", p.name, swapped, peel.lam)
    return SymplecticManinPeel(triple, peel.pair, peel.a0, peel.lam, a, b,
                               peel.isometry, swapped)
