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

"""Tilting complex families over N(2u+v, u+v+1) and their certificates."""

import dataclasses
import logging

from pycoxeter import errors, ladder, util
from pycoxeter.coxeter import coxeter_polynomial
from pycoxeter.flip import permutation_equivalent
from pycoxeter.ladder import LadderComplex, LadderSpec
from pycoxeter.matrix import IntMatrix, determinant
from pycoxeter.meta import VERSION
from pycoxeter.poset import ExtensionVariant, extension_poset, incidence_cartan, nakayama_cartan

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)

FAMILIES = ('upper', 'lower', 'post', 'pre')

MATCHING_VARIANT = {
    'upper': ExtensionVariant.UPPER_OUT,
    'lower': ExtensionVariant.LOWER_IN,
    'post': ExtensionVariant.LOWER_OUT,
    'pre': ExtensionVariant.UPPER_IN,
}


def family_spec(u, v, which):
    flavor = ladder.PROJECTIVE if which in ('upper', 'post') else ladder.INJECTIVE
    return LadderSpec(2 * u + v, u + v + 1, flavor)


def _upper(spec, u, v):
    summands = [LadderComplex.stalk(spec, a) for a in range(u + v, 2 * u + v + 1)]
    summands.extend(ladder.projective_resolution(spec, u + v, j) for j in range(1, u + v))
    return summands


def _lower(spec, u, v):
    summands = [LadderComplex.stalk(spec, a) for a in range(1, u + 2)]
    summands.extend(ladder.injective_coresolution(spec, u + 1, j) for j in range(1, u + v))
    return summands


def _post(spec, u, v):
    hub = u + v + 1
    summands = [LadderComplex.stalk(spec, hub)]
    summands.extend(LadderComplex.word(spec, [hub, hub + i], 0) for i in range(1, u))
    summands.extend(LadderComplex.word(spec, [j, hub], -1) for j in range(u, u + v + 1))
    summands.extend(LadderComplex.word(spec, [l, hub, hub + l], -1) for l in range(1, u))
    return summands


def _pre(spec, u, v):
    hub = u + v + 1
    summands = [LadderComplex.stalk(spec, u)]
    summands.extend(LadderComplex.word(spec, [i, u], -1) for i in range(1, u))
    summands.extend(LadderComplex.word(spec, [u, j], 0) for j in range(u + 1, hub + 1))
    summands.extend(LadderComplex.word(spec, [l, u, hub + l], -1) for l in range(1, u))
    return summands


_BUILDERS = {'upper': _upper, 'lower': _lower, 'post': _post, 'pre': _pre}


def tilting_family(u, v, which):
    """The 2u+v indecomposable summands of the named tilting complex, in construction order."""
    util.require_at_least('u', u)
    util.require_at_least('v', v)
    if which not in _BUILDERS:
        raise errors.InvalidParameter(
            'unknown family {!r}, expected one of {}'.format(which, ', '.join(FAMILIES)))
    return _BUILDERS[which](family_spec(u, v, which), u, v)


@dataclasses.dataclass
class TiltingReport(object):
    summands: list
    rigid: bool
    violations: list
    shift_range: tuple
    k0_matrix: IntMatrix
    k0_det: int
    end_cartan: IntMatrix
    target_variant: str = None
    matches_target: bool = None
    permutation: list = None
    coxeter_matches_nakayama: bool = None

    @property
    def k0_unimodular(self):
        return abs(self.k0_det) == 1

    @property
    def ok(self):
        checks = [self.rigid, self.k0_unimodular]
        checks.extend(c for c in (self.matches_target, self.coxeter_matches_nakayama) if c is not None)
        return all(checks)

    def as_dict(self):
        return {
            'summands': [repr(x) for x in self.summands],
            'rigid': self.rigid,
            'violations': [list(v) for v in self.violations],
            'shift_range': list(self.shift_range),
            'k0_matrix': self.k0_matrix.rows,
            'k0_det': self.k0_det,
            'k0_unimodular': self.k0_unimodular,
            'end_cartan': self.end_cartan.rows,
            'target_variant': self.target_variant,
            'matches_target': self.matches_target,
            'permutation': self.permutation,
            'coxeter_matches_nakayama': self.coxeter_matches_nakayama,
        }


def _shift_window(x, y):
    """Shifts k for which X and Y[k] have overlapping or adjacent supports."""
    x_lo, x_hi = x.support()
    y_lo, y_hi = y.support()
    return range(y_lo - x_hi - 1, y_hi - x_lo + 2)


def verify_tilting(family, target=None):
    """Checks rigidity, K0 unimodularity and the endomorphism Cartan matrix of a family.

    target, if given, is an incidence Cartan matrix the endomorphism Cartan
    matrix must equal up to simultaneous permutation.
    """
    if not family:
        raise errors.InvalidParameter('empty family')
    spec = family[0].spec
    for x in family:
        if x.spec != spec:
            raise errors.SpecMismatch(spec, x.spec)
    lo = min(x.support()[0] for x in family)
    hi = max(x.support()[1] for x in family)
    bound = hi - lo + 1

    violations = []
    for s, x in enumerate(family):
        for t, y in enumerate(family):
            for k in _shift_window(x, y):
                if k == 0 or abs(k) > bound:
                    continue
                if ladder.complex_hom_k_dim(x, y, k):
                    violations.append((s, t, k))
    end = [[ladder.complex_hom_k_dim(x, y, 0) for y in family] for x in family]
    log.debug('family of %d summands, %d rigidity violations', len(family), len(violations))

    k0 = [ladder.k0_class(x) for x in family]
    if len(k0) == spec.n:
        k0_matrix = IntMatrix(k0)
        k0_det = determinant(k0_matrix)
    else:
        k0_matrix = IntMatrix.identity(1)
        k0_det = 0
    report = TiltingReport(
        summands=list(family), rigid=not violations, violations=violations,
        shift_range=(-bound, bound), k0_matrix=k0_matrix, k0_det=k0_det,
        end_cartan=IntMatrix(end))
    if target is not None:
        report.permutation = permutation_equivalent(report.end_cartan, target)
        report.matches_target = report.permutation is not None
    return report


def verify_family(u, v, which):
    """verify_tilting on a named family against its matching extension poset and N(2u+v, u+v+1)."""
    family = tilting_family(u, v, which)
    variant = MATCHING_VARIANT[which]
    target = incidence_cartan(extension_poset(u, v, variant))
    report = verify_tilting(family, target)
    report.target_variant = variant.value
    if report.matches_target:
        report.coxeter_matches_nakayama = (
            coxeter_polynomial(report.end_cartan)
            == coxeter_polynomial(nakayama_cartan(2 * u + v, u + v + 1)))
    else:
        report.coxeter_matches_nakayama = False
    log.info('%s family u=%d v=%d: %s', which, u, v, 'ok' if report.ok else 'FAILED')
    return report
