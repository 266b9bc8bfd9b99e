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

"""Verification sweeps.

Each suite is a pair of module level functions: one expanding bounds into a
list of instance parameters, one checking a single instance and returning a
record dict with an ``ok`` flag. Checks are pure, so instances can be fanned
out over a process pool; records always come back in parameter order.
"""

import concurrent.futures
import dataclasses
import itertools
import logging
import random

from pycoxeter import errors, formulas, ladder, lgroup
from pycoxeter.coxeter import coxeter_polynomial, injective_class, tau_twisted_euler
from pycoxeter.flip import flip_cartan, permutation_equivalent
from pycoxeter.ladder import LadderComplex, LadderSpec, complex_hom_k_dim, hom
from pycoxeter.meta import VERSION
from pycoxeter.poset import (ExtensionVariant, Poset, chain_name, extension_poset,
                             incidence_cartan, nakayama_cartan, rect_name, rectangle_poset)
from pycoxeter.tilting import FAMILIES, verify_family

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)


def _structural(poly):
    """Palindromic with constant term 1."""
    return poly.is_palindromic() and poly.coefficient(0) == 1


def _extension_chi(u, v, variant):
    return coxeter_polynomial(incidence_cartan(extension_poset(u, v, variant)))


# rect-formula

def _rect_formula_cases(bounds, rng):
    return [{'u': u} for u in range(1, bounds['u_max'] + 1)]


def _rect_formula_check(params):
    u = params['u']
    matrix = coxeter_polynomial(incidence_cartan(rectangle_poset(u)))
    report = formulas.rectangle_report(u)
    expansion = formulas.chi_rectangle_expansion(u)
    ok = matrix == report.result == expansion and _structural(matrix)
    return {'params': params, 'matrix': matrix, 'formula': report.result,
            'case': report.case, 'expansion': expansion, 'ok': ok}


# ext-formula

def _ext_formula_cases(bounds, rng):
    return [{'u': u, 'v': v}
            for u in range(1, bounds['u_max'] + 1) for v in range(1, bounds['v_max'] + 1)]


def _ext_formula_check(params):
    u, v = params['u'], params['v']
    matrix = _extension_chi(u, v, ExtensionVariant.LOWER_OUT)
    report = formulas.ext_report(u, v)
    record = {'params': params, 'matrix': matrix, 'formula': report.result, 'case': report.case}
    ok = matrix == report.result and _structural(matrix)
    if v == 1:
        record['formula_v1'] = formulas.chi_ext1_formula(u)
        ok = ok and record['formula_v1'] == matrix
    record['ok'] = ok
    return record


# four-families

def _four_families_check(params):
    u, v = params['u'], params['v']
    target = coxeter_polynomial(nakayama_cartan(2 * u + v, u + v + 1))
    polys = {variant.value: _extension_chi(u, v, variant) for variant in ExtensionVariant}
    ok = all(p == target for p in polys.values()) and _structural(target)
    return {'params': params, 'nakayama': target, 'variants': polys, 'ok': ok}


# nakayama-formula

def _nakayama_formula_cases(bounds, rng):
    return [{'n': n, 'r': r}
            for n in range(2, bounds['n_max'] + 1)
            for r in range(2, n + 1) if 2 * r >= n + 2]


def _nakayama_formula_check(params):
    n, r = params['n'], params['r']
    matrix = coxeter_polynomial(nakayama_cartan(n, r))
    report = formulas.nakayama_report(n, r)
    ok = matrix == report.result and _structural(matrix)
    return {'params': params, 'matrix': matrix, 'formula': report.result,
            'case': report.case, 'ok': ok}


# recursion

def _recursion_check(params):
    u, v = params['u'], params['v']
    step = formulas.one_point_step(formulas.chi_ext_formula(u, v), formulas.chi_ext_formula(u, v - 1))
    expected = formulas.chi_ext_formula(u, v + 1)
    return {'params': params, 'step': step, 'expected': expected, 'ok': step == expected}


# happel

def _happel_check(params):
    u = params['u']
    cartan = incidence_cartan(rectangle_poset(u))
    happel = formulas.happel_extension_poly(
        formulas.chi_rectangle_formula(u), cartan, injective_class(cartan, 1))
    expected = formulas.chi_ext1_formula(u)
    return {'params': params, 'happel': happel, 'expected': expected, 'ok': happel == expected}


# ladkani

def _random_poset(rng, size):
    elements = ['p{}'.format(k) for k in range(1, size + 1)]
    covers = [(x, y) for i, x in enumerate(elements) for y in elements[i + 1:] if rng.random() < 0.3]
    return elements, covers


def _ladkani_cases(bounds, rng):
    cases = []
    for _ in range(bounds['instances']):
        elements, covers = _random_poset(rng, rng.randint(1, 8))
        poset = Poset.from_covers(elements, covers)
        seeds = [x for x in elements if rng.random() < 0.4]
        closed = sorted({x for x in elements for y in seeds if poset.leq(x, y)})
        cases.append({'kind': 'random', 'elements': elements,
                      'covers': [list(c) for c in covers], 'closed': closed})
    for u in range(1, bounds['u_max'] + 1):
        for v in range(1, bounds['v_max'] + 1):
            cases.append({'kind': 'chain', 'u': u, 'v': v})
            cases.append({'kind': 'chain_and_row', 'u': u, 'v': v})
    for r in range(2, bounds['r_max'] + 1):
        cases.append({'kind': 'symmetric', 'r': r})
    return cases


def _ladkani_check(params):
    kind = params['kind']
    if kind == 'random':
        poset = Poset.from_covers(params['elements'], [tuple(c) for c in params['covers']])
        flipped = coxeter_polynomial(flip_cartan(poset, params['closed']))
        original = coxeter_polynomial(incidence_cartan(poset))
        return {'params': params, 'flip': flipped, 'original': original,
                'ok': flipped == original}
    if kind == 'symmetric':
        r = params['r']
        poset = extension_poset(r - 1, 1, ExtensionVariant.LOWER_IN)
        closed = [rect_name(1, j) for j in range(1, r)]
        expected = nakayama_cartan(2 * r - 1, r)
    else:
        u, v = params['u'], params['v']
        poset = extension_poset(u, v, ExtensionVariant.UPPER_IN)
        closed = [chain_name(k) for k in range(1, v + 1)]
        if kind == 'chain':
            expected = incidence_cartan(extension_poset(u, v, ExtensionVariant.LOWER_OUT))
        else:
            closed += [rect_name(1, j) for j in range(1, u + 1)]
            expected = nakayama_cartan(2 * u + v, u + v + 1)
    flipped = flip_cartan(poset, closed)
    permutation = permutation_equivalent(flipped, expected)
    return {'params': params, 'flip': flipped, 'expected': expected,
            'permutation': permutation, 'ok': permutation is not None}


# shift-equation

def _shift_equation_cases(bounds, rng):
    return [{'u': u, 'target': t} for u in range(1, bounds['u_max'] + 1) for t in lgroup.TARGETS]


def _shift_equation_check(params):
    solved = lgroup.solve_shift_equation(params['u'], params['target'])
    predicted = lgroup.shift_equation_prediction(params['u'], params['target'])
    return {'params': params, 'solutions': solved, 'predicted': predicted, 'ok': solved == predicted}


# euler-bridge

def _euler_bridge_cases(bounds, rng):
    return [{'u': u, 'j': j} for u in range(1, bounds['u_max'] + 1) for j in range(1, 2 * u + 2)]


def _euler_bridge_check(params):
    u, j = params['u'], params['j']
    cartan = incidence_cartan(rectangle_poset(u))
    direct = lgroup.auslander_euler(u, j)
    twisted = tau_twisted_euler(cartan, injective_class(cartan, 1), j)
    record = {'params': params, 'auslander': direct, 'twisted': twisted}
    ok = direct == twisted
    if j <= 2 * u:
        record['closed_form'] = lgroup.tau_euler_closed_form(u, j)
        ok = ok and record['closed_form'] == direct
    record['ok'] = ok
    return record


# symmetry

def _symmetry_cases(bounds, rng):
    return [{'r': r} for r in range(2, bounds['r_max'] + 1)]


def _symmetry_check(params):
    r = params['r']
    left = coxeter_polynomial(nakayama_cartan(2 * r - 1, r))
    right = coxeter_polynomial(nakayama_cartan(2 * r - 1, r + 1))
    return {'params': params, 'left': left, 'right': right,
            'ok': left == right and _structural(left)}


# hom-words

def random_word(rng, spec, length):
    """A random indecomposable word of the given length, or None if the walk gets stuck."""
    word = [rng.randint(1, spec.n)]
    while len(word) < length:
        lo = word[-1] + 1
        if len(word) >= 2:
            lo = max(lo, word[-2] + spec.r)
        hi = min(word[-1] + spec.r - 1, spec.n)
        if lo > hi:
            return None
        word.append(rng.randint(lo, hi))
    return word


def _at(word, start, degree):
    """Index of the summand at degree, or None."""
    if word is None:
        return None
    i = degree - start
    return word[i] if 0 <= i < len(word) else None


def _nonzero(spec, a, b):
    return a is not None and b is not None and bool(hom(spec, a, b))


def _vanishing_premise(spec, x, x_start, y):
    """Hypotheses under which Hom_K(X, Y) vanishes, for X starting at 0 or -1 and Y ending at 0."""
    y_start = 1 - len(y)

    def at_x(d):
        return _at(x, x_start, d)

    def at_y(d):
        return _at(y, y_start, d)

    if x_start == 0:
        return _nonzero(spec, at_x(0), at_y(-1)) or _nonzero(spec, at_x(1), at_y(0))
    if not _nonzero(spec, at_x(0), at_y(-1)):
        return False
    return (_nonzero(spec, at_x(-1), at_y(0)) or _nonzero(spec, at_x(-1), at_y(-2))
            or _nonzero(spec, at_x(1), at_y(0)))


def _sample_vanishing(rng, bounds, x_start, rule):
    cases = []
    attempts = 0
    while len(cases) < bounds['instances'] and attempts < 200 * bounds['instances']:
        attempts += 1
        n = rng.randint(2, bounds['n_max'])
        spec = LadderSpec(n, rng.randint(2, n))
        x = random_word(rng, spec, rng.randint(1 - x_start, 3))
        y = random_word(rng, spec, rng.randint(1, 3))
        if x is None or y is None or not _vanishing_premise(spec, x, x_start, y):
            continue
        cases.append({'rule': rule, 'n': spec.n, 'r': spec.r,
                      'x': x, 'x_start': x_start, 'y': y, 'y_start': 1 - len(y)})
    if len(cases) < bounds['instances']:
        log.warning('%s: only %d instances satisfied the hypotheses', rule, len(cases))
    return cases


def _middle_words(spec, middle):
    """All words (X_-1, P_middle, X_1) with optional ends, as (word, start) pairs."""
    befores = [None] + [a for a in range(1, middle) if middle < a + spec.r]
    afters = [None] + [b for b in range(middle + 1, spec.n + 1) if b < middle + spec.r]
    for before, after in itertools.product(befores, afters):
        if before is not None and after is not None and after < before + spec.r:
            continue
        word = [a for a in (before, middle, after) if a is not None]
        yield word, (-1 if before is not None else 0)


def _hom_words_cases(bounds, rng):
    cases = _sample_vanishing(rng, bounds, 0, 'vanishing_from_zero')
    cases += _sample_vanishing(rng, bounds, -1, 'vanishing_from_minus_one')
    for n in range(2, min(bounds['n_max'], 7) + 1):
        for r in range(2, n + 1):
            spec = LadderSpec(n, r)
            for middle in range(1, n + 1):
                words = list(_middle_words(spec, middle))
                for (x, xs), (y, ys) in itertools.product(words, words):
                    cases.append({'rule': 'shared_middle', 'n': n, 'r': r,
                                  'x': x, 'x_start': xs, 'y': y, 'y_start': ys})
    return cases


def _shared_middle_expected(spec, x, xs, y, ys):
    left = _at(x, xs, -1) is None or _nonzero(spec, _at(x, xs, -1), _at(y, ys, -1))
    right = _at(y, ys, 1) is None or _nonzero(spec, _at(x, xs, 1), _at(y, ys, 1))
    return int(left and right)


def _hom_words_check(params):
    spec = LadderSpec(params['n'], params['r'])
    x = LadderComplex.word(spec, params['x'], params['x_start'])
    y = LadderComplex.word(spec, params['y'], params['y_start'])
    dim = complex_hom_k_dim(x, y, 0)
    if params['rule'] == 'shared_middle':
        expected = _shared_middle_expected(spec, params['x'], params['x_start'],
                                           params['y'], params['y_start'])
    else:
        expected = 0
    return {'params': params, 'dim': dim, 'expected': expected, 'ok': dim == expected}


# tilting

def _tilting_cases(bounds, rng):
    which = FAMILIES if bounds['which'] == 'all' else (bounds['which'],)
    us = [bounds['u']] if bounds.get('u') else range(1, bounds['u_max'] + 1)
    vs = [bounds['v']] if bounds.get('v') else range(1, bounds['v_max'] + 1)
    return [{'which': w, 'u': u, 'v': v} for w in which for u in us for v in vs]


def _tilting_check(params):
    report = verify_family(params['u'], params['v'], params['which'])
    return {'params': params, 'report': report.as_dict(), 'ok': report.ok}


def _grid(bounds, rng):
    return [{'u': u, 'v': v}
            for u in range(1, bounds['u_max'] + 1) for v in range(1, bounds['v_max'] + 1)]


def _u_range(bounds, rng):
    return [{'u': u} for u in range(1, bounds['u_max'] + 1)]


@dataclasses.dataclass(frozen=True)
class Suite(object):
    name: str
    cases: object
    check: object
    defaults: dict


SUITES = {s.name: s for s in (
    Suite('rect-formula', _rect_formula_cases, _rect_formula_check, {'u_max': 12}),
    Suite('ext-formula', _ext_formula_cases, _ext_formula_check, {'u_max': 8, 'v_max': 8}),
    Suite('four-families', _grid, _four_families_check, {'u_max': 8, 'v_max': 8}),
    Suite('nakayama-formula', _nakayama_formula_cases, _nakayama_formula_check, {'n_max': 20}),
    Suite('recursion', _grid, _recursion_check, {'u_max': 6, 'v_max': 6}),
    Suite('happel', _u_range, _happel_check, {'u_max': 12}),
    Suite('ladkani', _ladkani_cases, _ladkani_check,
          {'u_max': 5, 'v_max': 5, 'r_max': 8, 'instances': 50}),
    Suite('shift-equation', _shift_equation_cases, _shift_equation_check, {'u_max': 60}),
    Suite('euler-bridge', _euler_bridge_cases, _euler_bridge_check, {'u_max': 12}),
    Suite('symmetry', _symmetry_cases, _symmetry_check, {'r_max': 12}),
    Suite('hom-words', _hom_words_cases, _hom_words_check, {'n_max': 8, 'instances': 200}),
    Suite('tilting', _tilting_cases, _tilting_check,
          {'u_max': 5, 'v_max': 5, 'which': 'all', 'u': None, 'v': None}),
)}


@dataclasses.dataclass
class SuiteResult(object):
    name: str
    bounds: dict
    records: list

    @property
    def passed(self):
        return all(record['ok'] for record in self.records)

    @property
    def failures(self):
        return [record for record in self.records if not record['ok']]


# alternative suite names accepted by run_suite and the command line
SUITE_ALIASES = {
    'lemma32': 'shift-equation',
    'lemma34-bridge': 'euler-bridge',
    'hom-lemmas': 'hom-words',
}


def canonical_name(name):
    return SUITE_ALIASES.get(name, name)


def resolve_bounds(name, bounds=None):
    """Suite defaults overridden by the non-None entries of bounds."""
    name = canonical_name(name)
    if name not in SUITES:
        raise errors.InvalidParameter(
            'unknown suite {!r}, expected one of {}'.format(name, ', '.join(SUITES)))
    resolved = dict(SUITES[name].defaults)
    for key, value in (bounds or {}).items():
        if key not in resolved:
            raise errors.InvalidParameter('suite {} takes no bound {!r}'.format(name, key))
        if value is not None:
            resolved[key] = value
    return resolved


def run_suite(name, bounds=None, seed=0, jobs=1):
    """Runs every instance of a suite; randomized suites draw from random.Random(seed)."""
    name = canonical_name(name)
    bounds = resolve_bounds(name, bounds)
    suite = SUITES[name]
    cases = suite.cases(bounds, random.Random(seed))
    log.info('suite %s: %d instances', name, len(cases))
    if jobs > 1 and len(cases) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(suite.check, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        records = [suite.check(case) for case in cases]
    for record in records:
        log.info('%s %s: %s', name, record['params'], 'ok' if record['ok'] else 'FAILED')
    return SuiteResult(name, bounds, records)
