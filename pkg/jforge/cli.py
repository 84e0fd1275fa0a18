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
The jforge command line.

Every command prints one JSON document on stdout. Exit codes:

  0  all requested predicates hold
  1  a checked property fails or a construction is refused; the report
     says which
  2  bad input (unreadable or malformed file, unknown name, bad option)

..code:: bash

    jforge catalog get J_3_0_1 -o j301.json
    jforge construct gde --base j301.json --pair pair.json -o out.json
    jforge check --jordan --pe out.json
"""

import logging
import sys

import click

from jforge import algebra
from jforge import catalog
from jforge import conf as jconf
from jforge import diagnostics
from jforge import double_extension
from jforge import exception
from jforge import extension
from jforge import fileformat
from jforge import forms
from jforge import manin
from jforge import representation
from jforge import symplectic
from jforge import tkk

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s %(message)s'


def _error_report(e):
    return {'error': {
        'type': type(e).__name__,
        'message': e.message,
        'data': e.kwargs,
    }}


class _Group(click.Group):
    """Maps jforge exceptions onto the exit code contract."""

    def invoke(self, ctx):
        try:
            return super(_Group, self).invoke(ctx)
        except exception.InvalidInput as e:
            click.echo(fileformat.emit_report(_error_report(e)), nl=False)
            ctx.exit(EXIT_BAD_INPUT)
        except exception.JforgeException as e:
            click.echo(fileformat.emit_report(_error_report(e)), nl=False)
            ctx.exit(EXIT_FAILED)


def _echo(doc):
    click.echo(fileformat.emit_report(doc), nl=False)


def _conf(ctx):
    return ctx.find_root().obj


def _load(ctx, path, verify=None):
    c = _conf(ctx)
    LOG.debug("loading %s", path)
    return fileformat.parse_algebra_file(
        path, verify=c.verify if verify is None else verify)


def _require(af, path, field):
    value = getattr(af, field)
    if value is None:
        raise exception.AlgebraFileError(path=path, field=field,
                                         reason='missing')
    return value


def _subspace(af, path, name):
    try:
        return af.subspaces[name]
    except KeyError:
        raise exception.AlgebraFileError(
            path=path, field='subspaces.%s' % name, reason='missing')


def _pe(ctx, af, path):
    return forms.PseudoEuclideanAlgebra(af.algebra, _require(af, path, 'form'),
                                        conf=_conf(ctx))


def _triple(ctx, af, path, with_omega=False):
    p = _pe(ctx, af, path)
    omega = _require(af, path, 'omega') if with_omega else af.omega
    return manin.ManinTriple(p, _subspace(af, path, 'U'),
                             _subspace(af, path, 'V'), omega)


def _result(doc, output, ok=True):
    """Writes doc to output when given, echoes it otherwise."""
    if output:
        fileformat.write(doc, output)
        _echo({'output': output, 'ok': ok})
    else:
        _echo(doc)


def _dump_pe(p, omega=None, subspaces=None):
    return fileformat.dump_algebra(p.algebra, form=p.form, omega=omega,
                                   subspaces=subspaces)


def _vector_text(basis, v):
    return dict((basis[i], str(c)) for i, c in enumerate(v) if c)


@click.group(cls=_Group)
@click.option('--debug/--no-debug', default=None,
              help='Log at DEBUG on stderr (default from JFORGE_DEBUG).')
@click.option('--no-verify', is_flag=True,
              help='Skip post-construction verification.')
@click.option('--max-dim', type=int, default=None,
              help='Largest dimension to build (default from '
                   'JFORGE_MAX_DIM).')
@click.pass_context
def jforge(ctx, debug, no_verify, max_dim):
    """Exact rational toolkit for Jordan algebras."""
    overrides = {}
    if debug is not None:
        overrides['debug'] = debug
    if no_verify:
        overrides['verify'] = False
    if max_dim is not None:
        overrides['max_dim'] = max_dim
    ctx.obj = jconf.Conf(**overrides)
    logging.getLogger('jforge').setLevel(
        logging.DEBUG if ctx.obj.debug else logging.WARNING)


@jforge.command()
@click.option('--jordan', is_flag=True, help='Jordan identity.')
@click.option('--pe', is_flag=True, help='Associative scalar product.')
@click.option('--symplectic', 'symp', is_flag=True,
              help='Symplectic form (file key omega).')
@click.option('--manin', 'man', is_flag=True,
              help='Manin triple (subspaces U and V).')
@click.argument('path', type=click.Path())
@click.pass_context
def check(ctx, jordan, pe, symp, man, path):
    """Evaluates predicates on an algebra file."""
    af = _load(ctx, path, verify=False)
    a = af.algebra
    if not (jordan or pe or symp or man):
        jordan = True
    checks = {}
    report = algebra.check_jordan(a)
    if jordan:
        checks['jordan'] = {
            'ok': report.jordan,
            'commutative': report.commutative,
            'first_violation': report.first_violation,
        }
    if pe:
        pep = forms.check_pep(a, _require(af, path, 'form'))
        checks['pe'] = {
            'ok': report.jordan and pep.ok,
            'symmetric': pep.symmetric,
            'nondegenerate': pep.nondegenerate,
            'associative': pep.associative,
            'first_violation': pep.first_violation,
        }
    if symp:
        sr = symplectic.check_symplectic(a, _require(af, path, 'omega'))
        checks['symplectic'] = {
            'ok': sr.ok,
            'antisymmetric': sr.antisymmetric,
            'nondegenerate': sr.nondegenerate,
            'cyclic': sr.cyclic,
            'first_violation': sr.first_violation,
        }
        if (report.jordan and af.form is not None and
                forms.check_pep(a, af.form).ok and sr.antisymmetric):
            p = forms.PseudoEuclideanAlgebra(
                a, af.form, conf=jconf.Conf(verify=False, max_dim=a.dim))
            bridge = symplectic.derivation_form_bridge(p, omega=af.omega)
            checks['symplectic']['bridge'] = {
                'D': fileformat.dump_operator(a.basis, bridge.D),
                'is_derivation': bridge.is_derivation,
                'antisymmetric': bridge.antisymmetric,
                'invertible': bridge.invertible,
            }
    if man:
        if not report.jordan:
            mr = manin.ManinReport(False, 'jordan')
        else:
            p = forms.PseudoEuclideanAlgebra(
                a, _require(af, path, 'form'),
                conf=jconf.Conf(verify=False, max_dim=a.dim))
            mr = manin.check_manin(p, _subspace(af, path, 'U'),
                                   _subspace(af, path, 'V'), af.omega)
        checks['manin'] = {'ok': mr.ok,
                           'failed_condition': mr.failed_condition}
    ok = all(c['ok'] for c in checks.values())
    _echo({'name': af.name or a.name, 'checks': checks, 'ok': ok})
    if not ok:
        ctx.exit(EXIT_FAILED)


@jforge.command()
@click.option('--albert', is_flag=True, help='Albert form tr R_{xy}.')
@click.option('--casimir', 'cas', is_flag=True,
              help='Casimir element and R_c.')
@click.option('--radical', is_flag=True,
              help='Radical of the Albert form.')
@click.option('--index', 'idx', is_flag=True,
              help='Dimension of the space of associative forms.')
@click.option('--fitting', 'fit', is_flag=True,
              help='Fitting decomposition of R_c.')
@click.option('--reductive', is_flag=True,
              help='Reductive criterion; needs --component.')
@click.option('--component', multiple=True,
              help='Subspace name of a B-irreducible component.')
@click.argument('path', type=click.Path())
@click.pass_context
def analyze(ctx, albert, cas, radical, idx, fit, reductive, component, path):
    """Semisimplicity diagnostics of an algebra file."""
    if not (albert or cas or radical or idx or fit or reductive):
        raise click.UsageError('choose at least one analysis')
    af = _load(ctx, path)
    a = af.algebra
    out = {}
    if albert:
        out['albert'] = diagnostics.albert_form(a)
    if radical:
        out['radical'] = diagnostics.radical_and_semisimplicity(a)
    if idx:
        out['index'] = diagnostics.index(a).index
    if cas or fit or reductive:
        p = _pe(ctx, af, path)
        if cas:
            out['casimir'] = diagnostics.casimir(p)
        if fit:
            out['fitting'] = diagnostics.fitting(p, conf=_conf(ctx))
        if reductive:
            if not component:
                raise click.UsageError('--reductive needs --component')
            spaces = [_subspace(af, path, c) for c in component]
            out['reductive'] = diagnostics.reductive_report(
                p, spaces, conf=_conf(ctx))
    _echo(out)


@jforge.group(cls=_Group)
def construct():
    """Builds an extension; prints or writes an algebra file."""


def _output_option(f):
    return click.option('-o', '--output', type=click.Path(),
                        help='Write the algebra file here.')(f)


@construct.command('tstar')
@click.option('--base', required=True, type=click.Path())
@click.option('--cocycle', type=click.Path(),
              help='theta as {"cocycle": {"x.y": {label: scalar}}}.')
@_output_option
@click.pass_context
def construct_tstar(ctx, base, cocycle, output):
    """T*_theta J on J + J*."""
    a = _load(ctx, base).algebra
    theta = None
    if cocycle:
        n, entries = fileformat.parse_cocycle(
            fileformat.load_json(cocycle), a.basis, a.basis, path=cocycle)
        theta = extension.Cocycle.from_sparse(extension.TSTAR, n, n, entries)
    p = extension.tstar_extension(a, theta, name='T*(%s)' % a.name,
                                  conf=_conf(ctx))
    _result(_dump_pe(p), output)


@construct.command('central')
@click.option('--base', required=True, type=click.Path())
@click.option('--dim', 'v_dim', required=True, type=int)
@click.option('--cocycle', type=click.Path(),
              help='phi as {"cocycle": {"x.y": {"v1": scalar}}}.')
@_output_option
@click.pass_context
def construct_central(ctx, base, v_dim, cocycle, output):
    """Central extension J + V by a cocycle with values in V."""
    a = _load(ctx, base).algebra
    phi = None
    if cocycle:
        labels = ['v%d' % (i + 1) for i in range(v_dim)]
        n, entries = fileformat.parse_cocycle(
            fileformat.load_json(cocycle), a.basis, labels, path=cocycle)
        phi = extension.Cocycle.from_sparse(extension.CENTRAL, n, v_dim,
                                            entries)
    result = extension.central_extension(a, v_dim, phi,
                                         name='%s+V' % a.name,
                                         conf=_conf(ctx))
    _result(fileformat.dump_algebra(result), output)


@construct.command('sdp')
@click.option('--source', required=True, type=click.Path())
@click.option('--target', required=True, type=click.Path())
@click.option('--action', required=True, type=click.Path(),
              help='{"action": {source label: operator on target}}.')
@_output_option
@click.pass_context
def construct_sdp(ctx, source, target, action, output):
    """Semidirect product by an admissible representation."""
    c = _conf(ctx)
    s = _load(ctx, source).algebra
    t = _load(ctx, target).algebra
    ops = fileformat.parse_action(fileformat.load_json(action), s.basis,
                                  t.basis, path=action)
    pi = representation.Representation(s, ops, t.dim, conf=c)
    result = extension.semidirect_product(
        s, t, pi, name='%s x %s' % (s.name, t.name), conf=c)
    _result(fileformat.dump_algebra(result), output)


@construct.command('gsd')
@click.option('--base', required=True, type=click.Path())
@click.option('--pair', required=True, type=click.Path())
@_output_option
@click.pass_context
def construct_gsd(ctx, base, pair, output):
    """Generalized semidirect product Ka + J by (D, x0)."""
    a = _load(ctx, base).algebra
    pf = fileformat.parse_pair_file(pair, a.basis)
    result = extension.generalized_semidirect(
        a, pf.pair, name='Ka+%s' % a.name, conf=_conf(ctx))
    _result(fileformat.dump_algebra(result), output)


@construct.command('de')
@click.option('--base', required=True, type=click.Path())
@click.option('--top', required=True, type=click.Path(),
              help='J2; its form, when present, is gamma.')
@click.option('--action', required=True, type=click.Path(),
              help='{"action": {J2 label: operator on J1}}.')
@_output_option
@click.pass_context
def construct_de(ctx, base, top, action, output):
    """Double extension J2 + J1 + J2*."""
    c = _conf(ctx)
    baf = _load(ctx, base)
    p = _pe(ctx, baf, base)
    taf = _load(ctx, top)
    ops = fileformat.parse_action(fileformat.load_json(action),
                                  taf.algebra.basis, p.basis, path=action)
    pi = representation.Representation(taf.algebra, ops, p.dim, conf=c)
    spec = double_extension.DoubleExtensionSpec(p, taf.algebra, pi,
                                                taf.form)
    result = double_extension.double_extension(
        spec, name='DE(%s)' % p.name, conf=c)
    _result(_dump_pe(result), output)


@construct.command('gde')
@click.option('--base', required=True, type=click.Path())
@click.option('--pair', required=True, type=click.Path())
@_output_option
@click.pass_context
def construct_gde(ctx, base, pair, output):
    """Generalized double extension Ka + J1 + Kb."""
    af = _load(ctx, base)
    p = _pe(ctx, af, base)
    pf = fileformat.parse_pair_file(pair, p.basis)
    result = double_extension.generalized_double_extension(
        double_extension.GdeSpec(p, pf.pair), name='GDE(%s)' % p.name,
        conf=_conf(ctx))
    _result(_dump_pe(result), output)


def _require_symplectic_pair(pf, path):
    if pf.a0 is None:
        raise exception.AlgebraFileError(path=path, field='a0',
                                         reason='missing')
    if pf.lam is None:
        raise exception.AlgebraFileError(path=path, field='lambda',
                                         reason='missing')


@construct.command('sympde')
@click.option('--base', required=True, type=click.Path(),
              help='Algebra file with form and omega.')
@click.option('--pair', required=True, type=click.Path(),
              help='Pair file with a0 and lambda.')
@_output_option
@click.pass_context
def construct_sympde(ctx, base, pair, output):
    """Symplectic double extension."""
    af = _load(ctx, base)
    p = _pe(ctx, af, base)
    omega = _require(af, base, 'omega')
    pf = fileformat.parse_pair_file(pair, p.basis)
    _require_symplectic_pair(pf, pair)
    s = symplectic.symplectic_double_extension(
        (p, omega), pf.pair, pf.a0, pf.lam, name='SDE(%s)' % p.name,
        conf=_conf(ctx))
    _result(_dump_pe(s.p, omega=s.omega), output)


@construct.command('manin-de')
@click.option('--base', required=True, type=click.Path(),
              help='Algebra file with form and subspaces U, V.')
@click.option('--pair', required=True, type=click.Path(),
              help='Pair file; a0 and lambda make it symplectic.')
@_output_option
@click.pass_context
def construct_manin_de(ctx, base, pair, output):
    """Manin double extension, symplectic when the pair carries a0."""
    af = _load(ctx, base)
    pf = fileformat.parse_pair_file(pair, af.algebra.basis)
    c = _conf(ctx)
    if pf.a0 is not None or pf.lam is not None:
        _require_symplectic_pair(pf, pair)
        m = _triple(ctx, af, base, with_omega=True)
        out = manin.symplectic_manin_double_extension(
            m, pf.pair, pf.a0, pf.lam, name='SMDE(%s)' % m.p.name, conf=c)
    else:
        m = _triple(ctx, af, base)
        out = manin.manin_double_extension(
            m, pf.pair, name='MDE(%s)' % m.p.name, conf=c)
    _result(_dump_pe(out.p, omega=out.omega,
                     subspaces={'U': out.U, 'V': out.V}), output)


@construct.command('drinfeld')
@click.option('--base', required=True, type=click.Path())
@click.option('--rmatrix', type=click.Path(),
              help='{"r": {"x.y": scalar}}, antisymmetric.')
@click.option('--delta', type=click.Path(),
              help='{"delta": {"x": {"y.z": scalar}}}.')
@_output_option
@click.pass_context
def construct_drinfeld(ctx, base, rmatrix, delta, output):
    """Comultiplication, dual algebra and double V + V*."""
    if (rmatrix is None) == (delta is None):
        raise click.UsageError('give exactly one of --rmatrix, --delta')
    a = _load(ctx, base).algebra
    if rmatrix:
        r = fileformat.parse_rmatrix(fileformat.load_json(rmatrix), a.basis,
                                     path=rmatrix)
        d = symplectic.delta_r_and_double(a, r=r, name='D(%s)' % a.name)
    else:
        t = fileformat.parse_comultiplication(fileformat.load_json(delta),
                                              a.basis, path=delta)
        d = symplectic.delta_r_and_double(a, delta=t, name='D(%s)' % a.name)
    doc = {
        'is_bialgebra': d.is_bialgebra,
        'dual': fileformat.dump_algebra(d.dual, name='%s*' % a.name),
        'double': fileformat.dump_algebra(d.double),
        'cocommutative': d.delta.is_cocommutative(),
    }
    if output and d.is_bialgebra:
        _result(doc['double'], output)
    else:
        _echo(doc)
    if not d.is_bialgebra:
        ctx.exit(EXIT_FAILED)


@jforge.group(cls=_Group)
def peel():
    """Inverts an extension; the report carries the verified isometry."""


def _vector_option(f):
    return click.option(
        '--b', 'b_name',
        help='Subspace name whose first basis vector is b.')(f)


def _default_b(p):
    """First echelon vector of Ann & J^2; isotropic for B."""
    a = p.algebra
    space = algebra.annihilator(a) & algebra.square_space(a)
    if space.is_zero():
        raise exception.BadDirection(
            reason='Ann meets J^2 in zero; give --b')
    return space.basis[0]


def _named_vector(af, path, name):
    space = _subspace(af, path, name)
    if space.is_zero():
        raise exception.AlgebraFileError(
            path=path, field='subspaces.%s' % name, reason='is zero')
    return space.basis[0]


def _peel_doc(W, pair, isometry, omega=None, subspaces=None, **vectors):
    basis = list(W.basis)
    doc = {
        'W': _dump_pe(W, omega=omega, subspaces=subspaces),
        'isometry': isometry,
    }
    if pair is not None:
        doc['pair'] = fileformat.dump_pair(basis, pair)
    doc.update(vectors)
    return doc


@peel.command('gde')
@click.argument('path', type=click.Path())
@_vector_option
@_output_option
@click.pass_context
def peel_gde(ctx, path, b_name, output):
    """Ka + W + Kb along an isotropic b in Ann."""
    af = _load(ctx, path)
    p = _pe(ctx, af, path)
    b = _named_vector(af, path, b_name) if b_name else _default_b(p)
    res = double_extension.peel_gde(p, b, conf=_conf(ctx))
    doc = _peel_doc(res.W, res.pair, res.isometry,
                    a=_vector_text(p.basis, res.a),
                    b=_vector_text(p.basis, res.b))
    _peel_result(doc, output)


def _peel_result(doc, output):
    if output:
        fileformat.write(doc['W'], output)
        doc = dict(doc, W={'output': output})
    _echo(doc)


@peel.command('de')
@click.argument('path', type=click.Path())
@click.option('--ideal', required=True,
              help='Subspace name of a maximal ideal I with I^perp in I.')
@_output_option
@click.pass_context
def peel_de(ctx, path, ideal, output):
    """J2 + W + J2* along a maximal ideal."""
    af = _load(ctx, path)
    p = _pe(ctx, af, path)
    res = double_extension.peel_de(p, _subspace(af, path, ideal),
                                   conf=_conf(ctx))
    doc = _peel_doc(res.W, None, res.isometry,
                    V=res.V, gamma=res.gamma,
                    action=[op for op in res.pi.action])
    _peel_result(doc, output)


@peel.command('symp')
@click.argument('path', type=click.Path())
@_vector_option
@_output_option
@click.pass_context
def peel_symp(ctx, path, b_name, output):
    """Symplectic double extension along an eigenvector in Ann."""
    af = _load(ctx, path)
    p = _pe(ctx, af, path)
    omega = _require(af, path, 'omega')
    b = _named_vector(af, path, b_name) if b_name else None
    res = symplectic.peel_symplectic_double_extension(p, omega, b=b,
                                                      conf=_conf(ctx))
    doc = _peel_doc(res.W, res.pair, res.isometry, omega=res.omega,
                    a=_vector_text(p.basis, res.a),
                    b=_vector_text(p.basis, res.b),
                    a0=_vector_text(list(res.W.basis), res.a0),
                    lam=res.lam)
    _peel_result(doc, output)


@peel.command('manin')
@click.argument('path', type=click.Path())
@_output_option
@click.pass_context
def peel_manin(ctx, path, output):
    """Manin double extension along Ann & U or Ann & V."""
    af = _load(ctx, path)
    res = manin.peel_manin(_triple(ctx, af, path), conf=_conf(ctx))
    t = res.triple
    doc = _peel_doc(t.p, res.pair, res.isometry,
                    subspaces={'U': t.U, 'V': t.V},
                    a=_vector_text(af.algebra.basis, res.a),
                    b=_vector_text(af.algebra.basis, res.b),
                    swapped=res.swapped)
    _peel_result(doc, output)


@peel.command('symp-manin')
@click.argument('path', type=click.Path())
@_output_option
@click.pass_context
def peel_symp_manin(ctx, path, output):
    """Symplectic Manin double extension."""
    af = _load(ctx, path)
    res = manin.peel_symplectic_manin(_triple(ctx, af, path,
                                              with_omega=True),
                                      conf=_conf(ctx))
    t = res.triple
    doc = _peel_doc(t.p, res.pair, res.isometry, omega=t.omega,
                    subspaces={'U': t.U, 'V': t.V},
                    a=_vector_text(af.algebra.basis, res.a),
                    b=_vector_text(af.algebra.basis, res.b),
                    a0=_vector_text(list(t.p.basis), res.a0),
                    lam=res.lam, swapped=res.swapped)
    _peel_result(doc, output)


@jforge.group(cls=_Group, name='tkk')
def tkk_group():
    """Lie(J) = J + H(J) + Jbar."""


@tkk_group.command('build')
@click.argument('path', type=click.Path())
@click.option('--lift', type=click.Path(),
              help='Derivation of J as {"D": operator}.')
@click.option('--check-d1', is_flag=True,
              help='Check (d1) for the lifted derivation and build '
                   'omega_L when it holds.')
@click.pass_context
def tkk_build(ctx, path, lift, check_d1):
    """Builds Lie(J) with its invariant form."""
    if check_d1 and not lift:
        raise click.UsageError('--check-d1 needs --lift')
    c = _conf(ctx)
    af = _load(ctx, path)
    p = _pe(ctx, af, path)
    lie = tkk.tkk_build(p, conf=c)
    basis = list(lie.basis)
    brackets = dict(('%s.%s' % (basis[i], basis[j]), _vector_text(basis, v))
                    for (i, j), v in lie.brackets().items())
    doc = {
        'name': lie.name,
        'dim': lie.dim,
        'basis': basis,
        'grading': list(lie.grading),
        'brackets': brackets,
        'form': lie.form,
    }
    ok = True
    if lift:
        d = fileformat.parse_operator_file(lift, p.basis)
        lie, d_l = tkk.lift_derivation(p, d, lie=lie, conf=c)
        doc['lift'] = fileformat.dump_operator(basis, d_l)
        if check_d1:
            ok = tkk.check_condition_d1(p, d)
            doc['d1'] = ok
            if ok:
                _lie, omega = tkk.lift_symplectic_form(p, d, conf=c)
                doc['omega_L'] = omega
    _echo(doc)
    if not ok:
        ctx.exit(EXIT_FAILED)


@jforge.group(cls=_Group, name='catalog')
def catalog_group():
    """Parametrized library of small algebras."""


@catalog_group.command('list')
def catalog_list():
    """Inventory of entries with parameters and declared properties."""
    _echo(catalog.list_entries())


def _parse_params(values):
    params = {}
    for item in values:
        key, sep, value = item.partition('=')
        if not sep or not key:
            raise click.BadParameter('expected k=v, got %r' % item,
                                     param_hint='--param')
        params[key] = value
    return params


@catalog_group.command('get')
@click.argument('name')
@click.option('--param', 'params', multiple=True,
              help='Parameter as k=v; scalars as "p/q".')
@_output_option
def catalog_get(name, params, output):
    """Emits the algebra file of a catalog entry."""
    entry = catalog.get(name, **_parse_params(params))
    _result(fileformat.dump_algebra(entry.algebra, form=entry.form,
                                    name=entry.name), output)


def execute_command(argv):
    """Runs the command line on argv and returns the exit code."""
    try:
        result = jforge.main(args=list(argv), prog_name='jforge',
                             standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return EXIT_FAILED
    return result if isinstance(result, int) else EXIT_OK


def main():
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT)
    sys.exit(execute_command(sys.argv[1:]))
