# Copyright 2024 The pycoxeter Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line front end.

Polynomials are printed as ascending coefficient arrays (index = degree).
Exit codes: 0 pass, 1 a checked identity failed, 2 usage or input error.
"""

import argparse
import logging
import sys

from pycoxeter import errors, formulas, ladder, lgroup, suites, util
from pycoxeter.coxeter import coxeter_polynomial
from pycoxeter.flip import flip_cartan
from pycoxeter.matrix import determinant
from pycoxeter.meta import VERSION
from pycoxeter.poset import (ExtensionVariant, extension_poset, incidence_cartan, load_poset,
                             nakayama_cartan, rectangle_poset)
from pycoxeter.report import ERROR, FAIL, PASS, Report, render

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)

FAMILIES = ('rect', 'ext', 'nakayama', 'poset')
VARIANTS = tuple(v.value for v in ExtensionVariant)


def _family_cartan(args):
    """(Cartan matrix, vertex order) of the family selected on the command line."""
    if args.family == 'rect':
        poset = rectangle_poset(_required(args, 'u'))
    elif args.family == 'ext':
        poset = extension_poset(_required(args, 'u'), _required(args, 'v'), args.variant)
    elif args.family == 'nakayama':
        n, r = _required(args, 'n'), _required(args, 'r')
        return nakayama_cartan(n, r), [str(a) for a in range(1, n + 1)]
    else:
        if not args.poset:
            raise errors.InvalidParameter('--poset FILE is required for family poset')
        try:
            poset = load_poset(args.poset)
        except OSError as e:
            raise errors.InvalidParameter('cannot read {}: {}'.format(args.poset, e.strerror))
    order = poset.linear_extension(reverse=args.reverse)
    return incidence_cartan(poset, order), order


def _required(args, name):
    value = getattr(args, name)
    if value is None:
        raise errors.InvalidParameter('--{} is required for family {}'.format(name, args.family))
    return value


def _family_formula(args):
    if args.family == 'rect':
        return formulas.rectangle_report(args.u)
    if args.family == 'ext':
        return formulas.ext_report(args.u, args.v)
    if args.family == 'nakayama':
        return formulas.nakayama_report(args.n, args.r)
    raise errors.InvalidParameter('no closed form for family poset')


def cmd_cartan(args):
    cartan, order = _family_cartan(args)
    return {'order': order, 'matrix': cartan, 'determinant': determinant(cartan)}, PASS


def cmd_coxeter(args):
    results = {}
    if args.method in ('matrix', 'both'):
        cartan, order = _family_cartan(args)
        results['matrix'] = coxeter_polynomial(cartan)
    if args.method in ('formula', 'both'):
        formula = _family_formula(args)
        results['formula'] = formula.result
        results['formula_case'] = formula.case
    results['coeffs'] = results.get('matrix', results.get('formula'))
    status = PASS
    if args.method == 'both':
        results['equal'] = results['matrix'] == results['formula']
        status = PASS if results['equal'] else FAIL
    return results, status


_BOUND_FLAGS = ('u_max', 'v_max', 'n_max', 'r_max', 'instances', 'u', 'v', 'which')


def cmd_verify(args):
    bounds = {k: getattr(args, k) for k in _BOUND_FLAGS if getattr(args, k) is not None}
    result = suites.run_suite(args.suite, bounds, seed=args.seed, jobs=args.jobs)
    results = {
        'suite': result.name,
        'bounds': result.bounds,
        'seed': args.seed,
        'instances': len(result.records),
        'failures': len(result.failures),
    }
    if args.verbose or len(result.records) == 1:
        results['records'] = result.records
    elif result.failures:
        results['records'] = result.failures
    return results, PASS if result.passed else FAIL


def cmd_lgroup(args):
    if args.action == 'solve':
        solutions = lgroup.solve_shift_equation(args.u, args.target)
        predicted = lgroup.shift_equation_prediction(args.u, args.target)
        results = {'solutions': solutions, 'predicted': predicted, 'agree': solutions == predicted}
        return results, PASS if results['agree'] else FAIL
    if args.j is None:
        raise errors.InvalidParameter('--j is required for lgroup euler')
    results = {'value': lgroup.auslander_euler(args.u, args.j)}
    if args.j <= 2 * args.u:
        results['closed_form'] = lgroup.tau_euler_closed_form(args.u, args.j)
        if results['closed_form'] != results['value']:
            return results, FAIL
    return results, PASS


def _read_complex(path, spec):
    try:
        return ladder.load_complex(path, spec)
    except OSError as e:
        raise errors.InvalidParameter('cannot read {}: {}'.format(path, e.strerror))


def cmd_hom(args):
    flavor = ladder.INJECTIVE if args.injective else ladder.PROJECTIVE
    spec = ladder.LadderSpec(args.n, args.r, flavor)
    x = _read_complex(args.source, spec)
    y = _read_complex(args.target, spec)
    results = {
        'source': repr(x),
        'target': repr(y),
        'k': args.k,
        'dim': ladder.complex_hom_k_dim(x, y, args.k),
    }
    return results, PASS


def cmd_flip(args):
    try:
        poset = load_poset(args.poset)
    except OSError as e:
        raise errors.InvalidParameter('cannot read {}: {}'.format(args.poset, e.strerror))
    closed = util.split_names(args.closed)
    flipped = flip_cartan(poset, closed)
    original = incidence_cartan(poset)
    results = {
        'closed': closed,
        'flip_cartan': flipped,
        'flip_coxeter': coxeter_polynomial(flipped),
        'incidence_coxeter': coxeter_polynomial(original),
    }
    results['equal'] = results['flip_coxeter'] == results['incidence_coxeter']
    return results, PASS if results['equal'] else FAIL


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be a positive integer, got {}'.format(text))
    return value


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('json', 'csv'), default='json',
                        help='output format (default: json)')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='per-instance log lines; repeat for debug output')
    return common


def _family_options(parser):
    parser.add_argument('--family', choices=FAMILIES, required=True)
    parser.add_argument('--u', type=int)
    parser.add_argument('--v', type=int)
    parser.add_argument('--variant', choices=VARIANTS, default='lower_out',
                        help='corner the chain is glued to (family ext)')
    parser.add_argument('--n', type=int)
    parser.add_argument('--r', type=int)
    parser.add_argument('--poset', metavar='FILE', help='poset in the elem/relation text format')
    parser.add_argument('--reverse', action='store_true',
                        help='break linear-extension ties by the largest name')


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='pycoxeter',
        description='Exact Coxeter polynomials, flips and tilting certificates. '
                    'Polynomials are printed as ascending coefficient arrays.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('cartan', parents=[common], help='Cartan matrix of a family')
    _family_options(p)
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser('coxeter', parents=[common], help='Coxeter polynomial of a family')
    _family_options(p)
    p.add_argument('--method', choices=('matrix', 'formula', 'both'), default='matrix')
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser('verify', parents=[common], help='run a verification sweep')
    p.add_argument('suite', choices=sorted(suites.SUITES) + sorted(suites.SUITE_ALIASES))
    p.add_argument('--u-max', type=_positive)
    p.add_argument('--v-max', type=_positive)
    p.add_argument('--n-max', type=_positive)
    p.add_argument('--r-max', type=_positive)
    p.add_argument('--instances', type=_positive)
    p.add_argument('--u', type=_positive)
    p.add_argument('--v', type=_positive)
    p.add_argument('--which', choices=('upper', 'lower', 'post', 'pre', 'all'))
    p.add_argument('--seed', type=int, default=0, help='seed for randomized sweeps (default: 0)')
    p.add_argument('--jobs', type=_positive, default=1, help='worker processes (default: 1)')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('lgroup', parents=[common], help='arithmetic in L(2, 3, u+1)')
    p.add_argument('action', choices=('solve', 'euler'))
    p.add_argument('--u', type=int, required=True)
    p.add_argument('--target', choices=lgroup.TARGETS, default='zero')
    p.add_argument('--j', type=int)
    p.set_defaults(func=cmd_lgroup)

    p = sub.add_parser('hom', parents=[common], help='dim Hom_K(X, Y[k]) of two ladder complexes')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--r', type=int, required=True)
    p.add_argument('--injective', action='store_true', help='complexes of injectives instead of projectives')
    p.add_argument('--source', metavar='FILE', required=True, help='complex X in the @d:/d[d]: format')
    p.add_argument('--target', metavar='FILE', required=True, help='complex Y in the same format')
    p.add_argument('--k', type=int, default=0, help='shift applied to Y (default: 0)')
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser('flip', parents=[common], help='flip algebra of a poset')
    p.add_argument('--poset', metavar='FILE', required=True)
    p.add_argument('--closed', required=True, help='comma separated downward closed subset')
    p.set_defaults(func=cmd_flip)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('pycoxeter').setLevel(level)


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _configure_logging(args.verbose)
    parameters = {k: v for k, v in vars(args).items() if k not in ('func', 'command')}
    try:
        results, status = args.func(args)
    except errors.CoxeterError as e:
        if args.verbose > 1:
            log.exception('%s failed', args.command)
        print('error: {}'.format(e), file=sys.stderr)
        results, status = {'error': str(e), 'type': type(e).__name__}, ERROR
    report = Report(list(argv), parameters, results, status)
    sys.stdout.write(render(report, args.format))
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
