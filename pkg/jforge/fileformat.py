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
JSON documents read and written by the command line.

An algebra file looks like this; scalars are "p/q" strings and every
sparse map names basis vectors by label:

..code:: json

    {
      "name": "J_2_1",
      "dim": 2,
      "basis": ["a1", "b1"],
      "mul": {"a1.a1": {"b1": "1"}},
      "form": {"a1.b1": "1"},
      "omega": {"a1.b1": "1"},
      "subspaces": {"U": [{"a1": "1"}], "V": [{"b1": "1"}]}
    }

"mul" and "form" are completed symmetrically, "omega" antisymmetrically.
Operators (derivations, pair files) map each basis label to its image:
``{"a1": {"b1": "2"}}`` is D(a1) = 2 b1.
"""

import collections
import json
import logging

from jforge import algebra
from jforge import exception
from jforge import forms
from jforge import linalg

LOG = logging.getLogger(__name__)

ALGEBRA_KEYS = frozenset(
    ['name', 'dim', 'basis', 'mul', 'form', 'omega', 'subspaces'])
PAIR_KEYS = frozenset(['D', 'x0', 'k', 'a0', 'lambda'])

AlgebraFile = collections.namedtuple(
    'AlgebraFile', 'name algebra form omega subspaces')
PairFile = collections.namedtuple('PairFile', 'pair a0 lam')


class _Reader(object):
    """Field-aware accessors raising AlgebraFileError."""

    def __init__(self, path):
        self.path = path

    def fail(self, field, reason):
        LOG.warning("%s: %s: %s", self.path, field, reason)
        raise exception.AlgebraFileError(path=self.path, field=field,
                                         reason=reason)

    def scalar(self, value, field):
        if isinstance(value, float):
            self.fail(field, 'floating point scalar %r; use "p/q"' % value)
        try:
            return linalg.to_fraction(value)
        except exception.InvalidInput as e:
            self.fail(field, e.message)

    def mapping(self, value, field):
        if not isinstance(value, dict):
            self.fail(field, 'expected an object')
        return value

    def label(self, basis, label, field):
        if label not in basis:
            self.fail(field, 'unknown basis label %r' % label)
        return basis.index(label)

    def pair_key(self, basis, key, field):
        parts = key.split('.')
        if len(parts) != 2:
            self.fail(field, 'key %r is not of the form "x.y"' % key)
        return tuple(self.label(basis, p, '%s.%s' % (field, key))
                     for p in parts)

    def vector(self, basis, value, field):
        v = [linalg.ZERO] * len(basis)
        for label, c in sorted(self.mapping(value, field).items()):
            sub = '%s.%s' % (field, label)
            v[self.label(basis, label, sub)] += self.scalar(c, sub)
        return tuple(v)

    def gram(self, basis, value, field, sign):
        n = len(basis)
        rows = [[linalg.ZERO] * n for _i in range(n)]
        seen = {}
        for key, c in sorted(self.mapping(value, field).items()):
            i, j = self.pair_key(basis, key, field)
            c = self.scalar(c, '%s.%s' % (field, key))
            for p, q, v in ((i, j, c), (j, i, sign * c)):
                if (p, q) in seen and seen[(p, q)] != v:
                    self.fail(field, 'conflicting entries for %s' % key)
                seen[(p, q)] = v
                rows[p][q] = v
        if sign < 0 and any(rows[i][i] for i in range(n)):
            self.fail(field, 'antisymmetric form with a diagonal entry')
        return linalg.Matrix(rows, ncols=n)

    def operator(self, basis, value, field, target=None):
        """Matrix whose column for a source label is its image."""
        target = basis if target is None else target
        cols = [linalg.zeros(len(target)) for _b in basis]
        for label, image in sorted(self.mapping(value, field).items()):
            sub = '%s.%s' % (field, label)
            cols[self.label(basis, label, sub)] = self.vector(
                target, image, sub)
        return linalg.Matrix.from_columns(cols, len(target))


def load_json(path):
    """Reads a JSON document; syntax errors name the line and column."""
    try:
        with open(path) as f:
            return json.load(f)
    except IOError as e:
        raise exception.AlgebraFileError(path=path, field='-',
                                         reason=e.strerror or str(e))
    except ValueError as e:
        where = 'line %s column %s' % (getattr(e, 'lineno', '?'),
                                       getattr(e, 'colno', '?'))
        raise exception.AlgebraFileError(path=path, field=where,
                                         reason=getattr(e, 'msg', str(e)))


def parse_algebra(doc, path='<input>', verify=True):
    """Builds an `AlgebraFile` from a decoded JSON document.

    With verify set the product must pass `algebra.check_jordan`; without
    it a non-commutative table comes back as a `algebra.StructureTable`.
    """
    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    unknown = sorted(set(doc) - ALGEBRA_KEYS)
    if unknown:
        r.fail(unknown[0], 'unknown key')
    if 'basis' not in doc:
        r.fail('basis', 'missing')
    basis = doc['basis']
    if not isinstance(basis, list) or not all(
            isinstance(b, str) and b and '.' not in b for b in basis):
        r.fail('basis', 'expected a list of labels without "."')
    if len(set(basis)) != len(basis):
        r.fail('basis', 'duplicate labels')
    n = len(basis)
    if 'dim' in doc and doc['dim'] != n:
        r.fail('dim', 'is %r but the basis has %d labels' % (doc['dim'], n))
    zero = linalg.zeros(n)
    table = [[zero] * n for _i in range(n)]
    given = {}
    for key, value in sorted(r.mapping(doc.get('mul', {}), 'mul').items()):
        i, j = r.pair_key(basis, key, 'mul')
        v = r.vector(basis, value, 'mul.%s' % key)
        for p, q in ((i, j), (j, i)):
            if (p, q) in given and given[(p, q)] != v:
                r.fail('mul', 'conflicting products for %s' % key)
            given[(p, q)] = v
            table[p][q] = v
    name = doc.get('name')
    if name is not None and not isinstance(name, str):
        r.fail('name', 'expected a string')
    try:
        a = algebra.JordanAlgebra(table, basis=basis, name=name)
    except exception.NotJordanAlgebra as e:
        if verify:
            r.fail('mul', e.message)
        a = algebra.StructureTable(table, basis=basis, name=name)
    if verify:
        report = algebra.check_jordan(a)
        if not report.jordan:
            r.fail('mul', 'Jordan identity fails at %s' % (
                ', '.join(str(i) for i in report.first_violation.index),))
    form = None
    if 'form' in doc:
        form = r.gram(basis, doc['form'], 'form', 1)
    omega = None
    if 'omega' in doc:
        omega = r.gram(basis, doc['omega'], 'omega', -1)
    subspaces = {}
    for sname, vectors in sorted(
            r.mapping(doc.get('subspaces', {}), 'subspaces').items()):
        field = 'subspaces.%s' % sname
        if not isinstance(vectors, list):
            r.fail(field, 'expected a list of vectors')
        subspaces[sname] = linalg.Subspace(
            n, [r.vector(basis, v, field) for v in vectors])
    LOG.debug("parsed %s: dimension %d", path, n)
    return AlgebraFile(name, a, form, omega, subspaces)


def parse_algebra_file(path, verify=True):
    return parse_algebra(load_json(path), path=path, verify=verify)


def parse_operator(doc, basis, path='<input>', field='operator',
                   target=None):
    return _Reader(path).operator(list(basis), doc, field,
                                  target=None if target is None
                                  else list(target))


def parse_operator_file(path, basis, key='D'):
    """An operator stored under key in a JSON document."""
    doc = load_json(path)
    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    if key not in doc:
        r.fail(key, 'missing')
    return r.operator(list(basis), doc[key], key)


def parse_pair(doc, basis, path='<input>'):
    """(D, x0, k) plus the optional a0 and lambda of symplectic
    extensions.
    """
    from jforge import extension

    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    unknown = sorted(set(doc) - PAIR_KEYS)
    if unknown:
        r.fail(unknown[0], 'unknown key')
    basis = list(basis)
    D = r.operator(basis, doc.get('D', {}), 'D')
    x0 = r.vector(basis, doc.get('x0', {}), 'x0')
    k = r.scalar(doc.get('k', '0'), 'k')
    a0 = r.vector(basis, doc['a0'], 'a0') if 'a0' in doc else None
    lam = r.scalar(doc['lambda'], 'lambda') if 'lambda' in doc else None
    return PairFile(extension.AdmissiblePair(D, x0, k), a0, lam)


def parse_pair_file(path, basis):
    return parse_pair(load_json(path), basis, path=path)


def parse_rmatrix(doc, basis, path='<input>'):
    """{"r": {"x.y": scalar}}, completed antisymmetrically."""
    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    if 'r' not in doc:
        r.fail('r', 'missing')
    return r.gram(list(basis), doc['r'], 'r', -1)


def parse_comultiplication(doc, basis, path='<input>'):
    """{"delta": {"x": {"y.z": scalar}}} for Delta(x) = sum c y (x) z."""
    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    basis = list(basis)
    n = len(basis)
    t = [[[linalg.ZERO] * n for _j in range(n)] for _i in range(n)]
    for label, terms in sorted(r.mapping(doc.get('delta', {}),
                                         'delta').items()):
        i = r.label(basis, label, 'delta.%s' % label)
        for key, c in sorted(r.mapping(terms, 'delta.%s' % label).items()):
            j, k = r.pair_key(basis, key, 'delta.%s' % label)
            t[i][j][k] = r.scalar(c, 'delta.%s.%s' % (label, key))
    return t


def parse_action(doc, top_basis, base_basis, path='<input>'):
    """{"action": {"x": operator on the base labels}}: pi(x) per top
    basis vector.
    """
    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    action = r.mapping(doc.get('action', {}), 'action')
    for label in action:
        r.label(list(top_basis), label, 'action.%s' % label)
    base_basis = list(base_basis)
    return [r.operator(base_basis, action.get(label, {}),
                       'action.%s' % label) for label in top_basis]


def parse_cocycle(doc, basis, value_labels, path='<input>'):
    """{"cocycle": {"x.y": {value label: scalar}}} as a dense table."""
    r = _Reader(path)
    doc = r.mapping(doc, '<root>')
    basis = list(basis)
    n = len(basis)
    entries = {}
    for key, value in sorted(r.mapping(doc.get('cocycle', {}),
                                       'cocycle').items()):
        i, j = r.pair_key(basis, key, 'cocycle')
        entries[(i, j)] = r.vector(list(value_labels), value,
                                   'cocycle.%s' % key)
    return n, entries


def _sparse_vector(basis, v):
    return dict((basis[i], str(c)) for i, c in enumerate(v) if c)


def _sparse_gram(basis, gram, antisymmetric=False):
    out = {}
    n = len(basis)
    for i in range(n):
        for j in range(i if not antisymmetric else i + 1, n):
            if gram[i, j]:
                out['%s.%s' % (basis[i], basis[j])] = str(gram[i, j])
    return out


def dump_algebra(a, form=None, omega=None, subspaces=None, name=None):
    """Algebra file document; form, omega and subspaces are optional."""
    basis = list(a.basis)
    mul = {}
    for i in range(a.dim):
        for j in range(i, a.dim):
            v = a.product(i, j)
            if any(v):
                mul['%s.%s' % (basis[i], basis[j])] = _sparse_vector(basis,
                                                                     v)
    doc = {
        'name': name or a.name or 'J',
        'dim': a.dim,
        'basis': basis,
        'mul': mul,
    }
    if form is not None:
        doc['form'] = _sparse_gram(basis, forms.as_gram(form, a.dim))
    if omega is not None:
        doc['omega'] = _sparse_gram(basis, forms.as_gram(omega, a.dim),
                                    antisymmetric=True)
    if subspaces:
        doc['subspaces'] = dict(
            (sname, [_sparse_vector(basis, v) for v in space.basis])
            for sname, space in subspaces.items())
    return doc


def dump_operator(basis, m):
    basis = list(basis)
    return dict((basis[j], _sparse_vector(basis, m.column(j)))
                for j in range(m.ncols) if any(m.column(j)))


def dump_pair(basis, pair, a0=None, lam=None):
    doc = {
        'D': dump_operator(basis, pair.D),
        'x0': _sparse_vector(list(basis), pair.x0),
        'k': str(pair.k),
    }
    if a0 is not None:
        doc['a0'] = _sparse_vector(list(basis), a0)
    if lam is not None:
        doc['lambda'] = str(lam)
    return doc


def to_json(value):
    """Plain JSON value for reports: scalars become strings, matrices lists
    of rows, subspaces their echelon bases.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, linalg.Fraction):
        return str(value)
    if isinstance(value, linalg.Matrix):
        return [[str(c) for c in row] for row in value.rows]
    if isinstance(value, linalg.Subspace):
        return {'dim': value.dim,
                'basis': [[str(c) for c in v] for v in value.basis]}
    if isinstance(value, forms.PseudoEuclideanAlgebra):
        return dump_algebra(value.algebra, form=value.form)
    if isinstance(value, algebra.StructureTable):
        return dump_algebra(value)
    if hasattr(value, '_asdict'):
        return dict((k, to_json(v)) for k, v in value._asdict().items())
    if isinstance(value, dict):
        return dict((str(k), to_json(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return str(value)


def emit_report(doc):
    """Canonical text: sorted keys, two space indent, trailing newline."""
    return json.dumps(to_json(doc), sort_keys=True, indent=2) + '\n'


def write(doc, path):
    with open(path, 'w') as f:
        f.write(emit_report(doc))
