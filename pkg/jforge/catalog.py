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
Catalog of small Jordan algebras.

The nilpotent pseudo-euclidean algebras of dimension at most 5 are built as
generalized double extensions, each one of the next smaller entry, so their
structure constants come out of `double_extension.gde_table`:

* J_1_1: Ka with aa = 0;
* J_2_0, J_2_lambda: a1a1 = lambda b1;
* J_3_0_k, J_3_alpha_k: Ka2 + Ka + Kb2 with a2a2 = alpha a + k b2,
  a2a = alpha b2;
* J_4_0_A, J_4_0_B, J_4_1: Ka3 + J_2 + Kb3;
* J_5_0_1, J_5_1_0 and the non-associative NONASSOC_5: Ka4 + J_3 + Kb4.

Beside them: UNIT_1 (e e = e), SPIN(q), H_n (symmetric n x n matrices),
TENSOR(J, n) (J (x) XK[X]/X^(n+1)) and TSTAR0(J).

..code:: python

    from jforge import catalog

    entry = catalog.get('J_3_alpha_k', alpha=2, k=3)
    assert entry.pseudo_euclidean.dim == 3
    assert catalog.get('H_2').algebra.basis == ('E11', 'E22', 'E12')
"""

import collections
import logging
import re

from jforge import algebra
from jforge import conf as jconf
from jforge import double_extension
from jforge import exception
from jforge import extension
from jforge import forms
from jforge import linalg
from jforge import symplectic
from jforge import tkk

LOG = logging.getLogger(__name__)

ZERO = linalg.ZERO
ONE = linalg.ONE
HALF = linalg.Fraction(1, 2)

MAX_MATRIX_SIZE = 4

Param = collections.namedtuple('Param', 'name default domain')
Properties = collections.namedtuple(
    'Properties', 'nilpotent associative has_form')
TensorExample = collections.namedtuple('TensorExample', 'P Dbar base')


class CatalogEntry(collections.namedtuple(
        'CatalogEntry', 'name params algebra form notes properties')):
    """A built catalog algebra. form is None when no scalar product is
    attached to the entry.
    """

    @property
    def pseudo_euclidean(self):
        if self.form is None:
            return None
        return forms.PseudoEuclideanAlgebra(
            self.algebra, self.form,
            conf=jconf.Conf(verify=False, max_dim=self.algebra.dim))


_Recipe = collections.namedtuple('_Recipe', 'builder params description')

_REGISTRY = collections.OrderedDict()


def _register(name, params=(), description=''):
    def decorator(func):
        _REGISTRY[name] = _Recipe(func, tuple(params), description)
        return func
    return decorator


def _scalar(params, key):
    try:
        return linalg.to_fraction(params[key])
    except exception.InvalidInput as e:
        raise exception.BadParams(name=key, reason=e.message)


def _gde(base, D, x0, k, a_label, b_label, name):
    pair = extension.AdmissiblePair(linalg.Matrix(D, ncols=base.dim),
                                    linalg.vector(x0), k)
    try:
        return double_extension.generalized_double_extension(
            double_extension.GdeSpec(base, pair), name=name,
            a_label=a_label, b_label=b_label,
            conf=jconf.Conf(verify=True, max_dim=base.dim + 2))
    except exception.SpecInvalid as e:
        raise exception.BadParams(name=name, reason=e.message)


def _zero_pe():
    return forms.PseudoEuclideanAlgebra(
        algebra.JordanAlgebra.zero(0, name='0'), linalg.Matrix.zeros(0))


def _one_dim_zero():
    a = algebra.JordanAlgebra.zero(1, basis=['a'], name='J_1_1')
    return forms.PseudoEuclideanAlgebra(a, [[1]])


def _two_dim(lam, name):
    base = _zero_pe()
    return _gde(base, [], [], lam, 'a1', 'b1', name)


def _three_dim(alpha, k, name):
    return _gde(_one_dim_zero(), [[0]], [alpha], k, 'a2', 'b2', name)


@_register('J_1_1', description='Ka, aa = 0')
def _j_1_1(params):
    return _one_dim_zero(), [], Properties(True, True, True)


@_register('J_2_0', description='Ka1 + Kb1 with zero product')
def _j_2_0(params):
    return _two_dim(ZERO, 'J_2_0'), [], Properties(True, True, True)


@_register('J_2_lambda', [Param('lambda', 1, 'rational')],
           'a1a1 = lambda b1')
def _j_2_lambda(params):
    lam = _scalar(params, 'lambda')
    return (_two_dim(lam, 'J_2_%s' % lam), [],
            Properties(True, True, True))


@_register('J_3_0_k', [Param('k', 0, 'rational')],
           'a2a2 = k b2; a and b2 in Ann')
def _j_3_0_k(params):
    k = _scalar(params, 'k')
    notes = ['basis a2, a, b2 with B(a2, b2) = B(a, a) = 1; a2 is the '
             'vector squared to k b2']
    return (_three_dim(ZERO, k, 'J_3_0_%s' % k), notes,
            Properties(True, True, True))


@_register('J_3_alpha_k', [Param('alpha', 1, 'nonzero rational'),
                           Param('k', 0, 'rational')],
           'a2a2 = alpha a + k b2, a2a = alpha b2')
def _j_3_alpha_k(params):
    alpha = _scalar(params, 'alpha')
    k = _scalar(params, 'k')
    if alpha == ZERO:
        raise exception.BadParams(name='J_3_alpha_k',
                                  reason='alpha must be nonzero; use J_3_0_k')
    return (_three_dim(alpha, k, 'J_3_%s_%s' % (alpha, k)), [],
            Properties(True, True, True))


_J4_PARAMS = [Param('alpha', 0, 'rational'), Param('eta', 0, 'rational'),
              Param('epsilon', 0, 'rational'), Param('k', 0, 'rational')]


@_register('J_4_0_A', _J4_PARAMS,
           'J_2_0 extended by D(a1) = alpha b1, x0 = eta a1 + epsilon b1')
def _j_4_0_a(params):
    alpha, eta, eps, k = [_scalar(params, p.name) for p in _J4_PARAMS]
    p = _gde(_two_dim(ZERO, 'J_2_0'), [[0, 0], [alpha, 0]], [eta, eps], k,
             'a3', 'b3', 'J_4_0_A')
    notes = ['a1a1 = alpha b3: the displayed a1a1 = b1 + alpha b3 would '
             'square a1 in J_2_1, not in J_2_0']
    return p, notes, Properties(True, True, True)


@_register('J_4_0_B', _J4_PARAMS,
           'J_2_0 extended by D(b1) = alpha a1, x0 = eta a1 + epsilon b1')
def _j_4_0_b(params):
    alpha, eta, eps, k = [_scalar(params, p.name) for p in _J4_PARAMS]
    p = _gde(_two_dim(ZERO, 'J_2_0'), [[0, alpha], [0, 0]], [eta, eps], k,
             'a3', 'b3', 'J_4_0_B')
    notes = ['a1a1 = 0: the displayed a1a1 = b1 would square a1 in J_2_1, '
             'not in J_2_0']
    return p, notes, Properties(True, True, True)


_J41_PARAMS = [Param('beta', 0, 'rational'), Param('epsilon', 0, 'rational'),
               Param('k', 0, 'rational')]


@_register('J_4_1', _J41_PARAMS,
           'J_2_1 extended by D(a1) = beta b1, x0 = epsilon b1')
def _j_4_1(params):
    beta, eps, k = [_scalar(params, p.name) for p in _J41_PARAMS]
    p = _gde(_two_dim(ONE, 'J_2_1'), [[0, 0], [beta, 0]], [0, eps], k,
             'a3', 'b3', 'J_4_1')
    return p, [], Properties(True, True, True)


_J5_PARAMS = [Param('alpha', 0, 'rational'), Param('beta', 0, 'rational'),
              Param('eta1', 0, '0 or alpha^2'), Param('eta2', 0, 'rational'),
              Param('eta3', 0, 'rational'), Param('k', 0, 'rational')]


@_register('J_5_0_1', _J5_PARAMS,
           'J_3_0_1 extended by D(a2) = alpha a + beta b2, D(a) = alpha b2, '
           'x0 = eta1 a2 + eta2 a + eta3 b2')
def _j_5_0_1(params):
    alpha, beta, eta1, eta2, eta3, k = [_scalar(params, p.name)
                                        for p in _J5_PARAMS]
    if eta1 not in (ZERO, alpha * alpha):
        raise exception.BadParams(name='J_5_0_1',
                                  reason='eta1 must be 0 or alpha^2')
    D = [[0, 0, 0], [alpha, 0, 0], [beta, alpha, 0]]
    p = _gde(_three_dim(ZERO, ONE, 'J_3_0_1'), D, [eta1, eta2, eta3], k,
             'a4', 'b4', 'J_5_0_1')
    notes = ['D(a) = alpha b2 is forced by B-symmetry of D',
             'products follow the extension; the display mixes the names '
             'alpha_2, alpha_3 for alpha, beta']
    return p, notes, Properties(True, None, True)


_J510_PARAMS = [Param('alpha', 0, 'rational'), Param('beta', 0, 'rational'),
                Param('epsilon', 0, 'rational'), Param('eta', 0, 'rational'),
                Param('k', 0, 'rational')]


def _j_5_1_0_algebra(alpha, beta, eps, eta, k, name):
    D = [[0, 0, 0], [alpha, 0, 0], [beta, alpha, 0]]
    return _gde(_three_dim(ONE, ZERO, 'J_3_1_0'), D, [0, eps, eta], k,
                'a4', 'b4', name)


@_register('J_5_1_0', _J510_PARAMS,
           'J_3_1_0 extended by D(a2) = alpha a + beta b2, D(a) = alpha b2, '
           'x0 = epsilon a + eta b2')
def _j_5_1_0(params):
    args = [_scalar(params, p.name) for p in _J510_PARAMS]
    p = _j_5_1_0_algebra(*(args + ['J_5_1_0']))
    notes = ['D(a) = alpha b2 is forced by B-symmetry of D',
             'a2a2 = a + beta b4 and a2a = b2 + alpha b4 as in J_3_1_0; the '
             'display writes the J_3_0_1 products']
    return p, notes, Properties(True, None, True)


@_register('NONASSOC_5', description='J_5_1_0 with alpha = 1 and the other '
                                     'parameters 0')
def _nonassoc_5(params):
    p = _j_5_1_0_algebra(ONE, ZERO, ZERO, ZERO, ZERO, 'NONASSOC_5')
    notes = ['a2(a2a4) - (a2a2)a4 = b4']
    return p, notes, Properties(True, False, True)


@_register('UNIT_1', description='Ke, ee = e')
def _unit_1(params):
    a = algebra.JordanAlgebra([[[1]]], basis=['e'], name='UNIT_1')
    return forms.PseudoEuclideanAlgebra(a, [[1]]), [], Properties(
        False, True, True)


def _parse_q(value):
    if isinstance(value, str):
        value = [v for v in value.split(',') if v.strip()]
    try:
        q = linalg.vector(value)
    except (exception.InvalidInput, TypeError):
        raise exception.BadParams(name='SPIN', reason='q is not a list of '
                                                      'scalars')
    if ZERO in q:
        raise exception.BadParams(name='SPIN', reason='q is degenerate')
    return q


@_register('SPIN', [Param('q', '1', 'nonzero rationals, comma separated')],
           'K1 + V, (a1+v)(b1+w) = (ab + q(v,w))1 + aw + bv')
def _spin(params):
    q = _parse_q(params['q'])
    m = len(q)
    size = m + 1
    products = {(0, 0): linalg.unit(size, 0)}
    for i in range(m):
        products[(0, i + 1)] = linalg.unit(size, i + 1)
        products[(i + 1, i + 1)] = linalg.scale(q[i], linalg.unit(size, 0))
    labels = ['u'] + ['v%d' % (i + 1) for i in range(m)]
    a = algebra.JordanAlgebra.from_products(
        labels, products, name='SPIN(%s)' % ','.join(str(v) for v in q))
    form = linalg.Matrix.diagonal((ONE,) + q)
    return forms.PseudoEuclideanAlgebra(a, form), [], Properties(
        False, m <= 1, True)


def _matrix_basis(n):
    """(label, set of (row, col) positions) for a basis of symmetric
    matrices.
    """
    basis = [('E%d%d' % (i + 1, i + 1), ((i, i),)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(('E%d%d' % (i + 1, j + 1), ((i, j), (j, i))))
    return basis


def _mat(n, positions):
    rows = [[ZERO] * n for _i in range(n)]
    for i, j in positions:
        rows[i][j] = ONE
    return linalg.Matrix(rows, ncols=n)


@_register('H_n', [Param('n', 2, '1 <= n <= %d' % MAX_MATRIX_SIZE)],
           'symmetric n x n matrices with x o y = (xy + yx)/2')
def _h_n(params):
    try:
        n = int(params['n'])
    except (TypeError, ValueError):
        raise exception.BadParams(name='H_n', reason='n is not an integer')
    if not 1 <= n <= MAX_MATRIX_SIZE:
        raise exception.BadParams(
            name='H_n', reason='n must be between 1 and %d' %
                               MAX_MATRIX_SIZE)
    basis = _matrix_basis(n)
    mats = [_mat(n, pos) for _label, pos in basis]
    frame = linalg.Frame(n * n, [m.flatten() for m in mats])
    size = len(basis)
    table = [[None] * size for _i in range(size)]
    for i in range(size):
        for j in range(i, size):
            prod = (mats[i] @ mats[j] + mats[j] @ mats[i]).scale(HALF)
            table[i][j] = table[j][i] = frame.coordinates(prod.flatten())
    a = algebra.JordanAlgebra(table, basis=[b[0] for b in basis],
                              name='H_%d' % n)
    gram = linalg.Matrix(
        [[(mats[i] @ mats[j]).trace() for j in range(size)]
         for i in range(size)], ncols=size)
    return forms.PseudoEuclideanAlgebra(a, gram), [], Properties(
        False, n == 1, True)


def _resolve_algebra(value, what):
    if isinstance(value, forms.PseudoEuclideanAlgebra):
        return value.algebra
    if isinstance(value, algebra.StructureTable):
        return value
    if isinstance(value, str):
        return get(value).algebra
    raise exception.BadParams(name=what, reason='J is not an algebra or a '
                                                'catalog name')


def tensor_algebra(a, n, name=None):
    """J (x) XK[X]/X^(n+1): basis x (x) X^i for i = 1..n."""
    if n < 1:
        raise exception.BadParams(name='TENSOR', reason='n must be >= 1')
    d = a.dim
    size = d * n
    labels = ['%sX%d' % (b, i) for i in range(1, n + 1) for b in a.basis]

    def index(i, p):
        return (i - 1) * d + p

    table = [[linalg.zeros(size)] * size for _r in range(size)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j > n:
                continue
            for p in range(d):
                for q in range(d):
                    v = [ZERO] * size
                    for s, c in enumerate(a.product(p, q)):
                        v[index(i + j, s)] = c
                    table[index(i, p)][index(j, q)] = tuple(v)
    return algebra.JordanAlgebra(
        table, basis=labels,
        name=name or 'TENSOR(%s,%d)' % (a.name or 'J', n))


def grading_derivation(a, n):
    """D(x (x) X^i) = i x (x) X^i on `tensor_algebra(a, n)`."""
    return linalg.Matrix.diagonal(
        [i for i in range(1, n + 1) for _p in range(a.dim)])


@_register('TENSOR', [Param('J', 'UNIT_1', 'catalog name'),
                      Param('n', 2, 'n >= 1')],
           'J (x) XK[X]/X^(n+1)')
def _tensor(params):
    a = _resolve_algebra(params['J'], 'TENSOR')
    try:
        n = int(params['n'])
    except (TypeError, ValueError):
        raise exception.BadParams(name='TENSOR', reason='n is not an integer')
    t = tensor_algebra(a, n)
    assoc = algebra.associator_space(a).is_zero() or None
    return t, [], Properties(True, assoc, False)


@_register('TSTAR0', [Param('J', 'J_2_1', 'catalog name')],
           'T*_0 J on J + J* with the hyperbolic form')
def _tstar0(params):
    a = _resolve_algebra(params['J'], 'TSTAR0')
    p = extension.tstar_extension(a)
    return p, [], Properties(None, None, True)


_ALIASES = {
    'J_2_1': ('J_2_lambda', {'lambda': 1}),
    'J_3_0_0': ('J_3_0_k', {'k': 0}),
    'J_3_0_1': ('J_3_0_k', {'k': 1}),
    'J_3_1_0': ('J_3_alpha_k', {'alpha': 1, 'k': 0}),
}
_H_RE = re.compile(r'^H_(\d+)$')


def _fix_param(name, params, key, value):
    if key in params:
        try:
            same = linalg.to_fraction(params[key]) == value
        except exception.InvalidInput:
            same = False
        if not same:
            raise exception.BadParams(
                name=name, reason='%s is fixed to %s by the name' % (
                    key, value))
    params[key] = value


def _resolve_name(name, params):
    params = dict(params)
    if name in _ALIASES:
        canonical, fixed = _ALIASES[name]
        for key, value in sorted(fixed.items()):
            _fix_param(name, params, key, value)
        return canonical, params
    match = _H_RE.match(name)
    if match and name != 'H_n':
        _fix_param(name, params, 'n', int(match.group(1)))
        return 'H_n', params
    return name, params


def _param_text(value):
    if isinstance(value, forms.PseudoEuclideanAlgebra):
        value = value.algebra
    if isinstance(value, algebra.StructureTable):
        return value.name or 'J'
    if isinstance(value, (list, tuple)):
        return ','.join(str(linalg.to_fraction(v)) for v in value)
    return str(value)


def _check_properties(entry):
    a = entry.algebra
    a.verify()
    props = entry.properties
    if entry.form is not None:
        report = forms.check_pep(a, entry.form)
        if not report.ok:
            raise exception.VerificationFailed(
                what=entry.name, detail='form fails %s' %
                                        report.first_violation.identity)
    if props.nilpotent is not None:
        if algebra.is_nilpotent(a) != props.nilpotent:
            raise exception.VerificationFailed(
                what=entry.name, detail='nilpotency differs from the '
                                        'declared value')
    if props.associative is not None:
        if algebra.associator_space(a).is_zero() != props.associative:
            raise exception.VerificationFailed(
                what=entry.name, detail='associativity differs from the '
                                        'declared value')


def get(name, **params):
    """Builds a catalog entry.

    Aliases J_2_1, J_3_0_0, J_3_0_1, J_3_1_0 and H_1 .. H_4 fix the
    parameters in the name.

    :returns: `CatalogEntry`
    :raises: UnknownName, BadParams
    """
    canonical, params = _resolve_name(name, params)
    try:
        recipe = _REGISTRY[canonical]
    except KeyError:
        raise exception.UnknownName(name=name)
    known = set(p.name for p in recipe.params)
    unknown = sorted(set(params) - known)
    if unknown:
        raise exception.BadParams(
            name=name, reason='unknown parameters %s' % ', '.join(unknown))
    values = dict((p.name, p.default) for p in recipe.params)
    values.update(params)
    built, notes, props = recipe.builder(values)
    if isinstance(built, forms.PseudoEuclideanAlgebra):
        a, form = built.algebra, built.form
    else:
        a, form = built, None
    if name != canonical or a.name is None:
        a = a.relabel(name=name)
    shown = dict((k, _param_text(v)) for k, v in values.items())
    entry = CatalogEntry(name, shown, a, form, tuple(notes), props)
    _check_properties(entry)
    LOG.debug("built catalog entry %s of dimension %d", name, a.dim)
    return entry


def list_entries():
    """Inventory: name, parameters with domains, description and the
    declared properties of the default instance.
    """
    out = []
    for name, recipe in _REGISTRY.items():
        entry = get(name)
        out.append({
            'name': name,
            'description': recipe.description,
            'params': [{'name': p.name, 'default': str(p.default),
                        'domain': p.domain} for p in recipe.params],
            'nilpotent': entry.properties.nilpotent,
            'associative': entry.properties.associative,
            'has_form': entry.properties.has_form,
            'dim': entry.algebra.dim,
        })
    return out


def names():
    return list(_REGISTRY)


def phi_2(lam):
    """J_2_lambda -> J_2_1: a1 -> a1, b1 -> b1 / lambda."""
    lam = linalg.to_fraction(lam)
    return linalg.Matrix([[1, 0], [0, ONE / lam]])


def phi_3(k):
    """J_3_0_k -> J_3_0_1: a2 -> a2, a -> a, b2 -> b2 / k."""
    k = linalg.to_fraction(k)
    return linalg.Matrix.diagonal([1, 1, ONE / k])


def phi_alpha_k(alpha, k):
    """J_3_alpha_k -> J_3_1_0: a2 -> alpha a2 + k/2 a, a -> alpha a,
    b2 -> alpha b2.
    """
    alpha = linalg.to_fraction(alpha)
    k = linalg.to_fraction(k)
    return linalg.Matrix.from_columns(
        [[alpha, k * HALF, 0], [0, alpha, 0], [0, 0, alpha]])


def tensor_symplectic_example(a, n, conf=None):
    """T*_0 of the graded algebra J (x) XK[X]/X^(n+1) with the derivation
    Dbar(x + f) = D(x) - f o D, D the grading derivation.

    Dbar is verified to be an invertible B-antisymmetric derivation, the
    algebra to be nilpotent and Dbar to satisfy condition d1.

    :returns: `TensorExample(P, Dbar, base)`
    """
    a = _resolve_algebra(a, 'tensor_symplectic_example')
    base = tensor_algebra(a, n)
    d = grading_derivation(a, n)
    if not algebra.is_derivation(base, d):
        raise exception.VerificationFailed(
            what='grading derivation', detail='not a derivation')
    p = extension.tstar_extension(base, conf=conf)
    dbar = linalg.Matrix.block_diagonal(d, d.transpose().scale(-ONE))
    bridge = symplectic.derivation_form_bridge(p, D=dbar)
    if not bridge.symplectic:
        raise exception.VerificationFailed(
            what='tensor example', detail='Dbar is not an invertible '
                                          'B-antisymmetric derivation')
    symplectic.check_invertible_derivation_nilpotent(p.algebra, dbar)
    if not tkk.check_condition_d1(p, dbar):
        raise exception.VerificationFailed(
            what='tensor example', detail='condition d1 fails')
    LOG.debug("tensor symplectic example of %s, n = %d: dimension %d",
              a.name, n, p.dim)
    return TensorExample(p, dbar, base)
