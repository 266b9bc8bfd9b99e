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

"""Closed-form Coxeter polynomials and the one-point extension recursions.

Every rational closed form is evaluated as an integer numerator and
denominator followed by exact division, and the pair is kept in a
FormulaReport so that a caller can audit the division.
"""

import dataclasses
import logging

from pycoxeter import errors, util
from pycoxeter.coxeter import euler_form, tau_twisted_euler
from pycoxeter.meta import VERSION
from pycoxeter.polynomial import LAMBDA, ONE, PolyZ, poly_exact_div

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)

_CUBE_PLUS_ONE = PolyZ([1, 0, 0, 1])
_LAMBDA_PLUS_ONE = PolyZ([1, 1])


@dataclasses.dataclass(frozen=True)
class FormulaReport(object):
    """Audit trail of one closed-form evaluation."""

    name: str
    params: dict
    case: str
    numerator: PolyZ
    denominator: PolyZ
    result: PolyZ

    def as_dict(self):
        return {
            'name': self.name,
            'params': dict(self.params),
            'case': self.case,
            'numerator': self.numerator.coeffs,
            'denominator': self.denominator.coeffs,
            'result': self.result.coeffs,
        }


def _power_minus(k, sign):
    """λ^k - sign."""
    return PolyZ.monomial(k) - sign


def _power_sum(lo, hi, offset):
    """Sum of λ^(offset+j) for lo <= j <= hi; zero when the range is empty."""
    total = PolyZ()
    for j in range(lo, hi + 1):
        total = total + PolyZ.monomial(offset + j)
    return total


def _evaluate(name, params, case, numerator, denominator):
    result = poly_exact_div(numerator, denominator)
    log.debug('%s%s [%s] -> %s', name, params, case, result)
    return FormulaReport(name, params, case, numerator, denominator, result)


def rectangle_report(u):
    util.require_at_least('u', u)
    sign = util.minus_one_power(u + 1)
    if u % 3 != 2:
        numerator = _LAMBDA_PLUS_ONE * _power_minus(3 * u + 3, sign)
        denominator = _CUBE_PLUS_ONE * _power_minus(u + 1, sign)
        case = 'u≢2 (mod 3)'
    else:
        numerator = _LAMBDA_PLUS_ONE * _power_minus(u + 1, sign) ** 2
        denominator = _CUBE_PLUS_ONE
        case = 'u≡2 (mod 3)'
    return _evaluate('rectangle', {'u': u}, case, numerator, denominator)


def chi_rectangle_formula(u):
    """Coxeter polynomial of the 2 x u rectangle from its rational closed form."""
    return rectangle_report(u).result


def chi_rectangle_expansion(u):
    """Division-free expansion of the rectangle polynomial as sums of ±(λ+1)(-λ)^k."""
    util.require_at_least('u', u)
    minus_lambda = PolyZ([0, -1])
    i, rest = divmod(u, 3)
    if rest == 0:
        head = sum((minus_lambda ** (3 * i + 2 + 3 * j) for j in range(i)), PolyZ())
        middle = minus_lambda ** (3 * i)
        tail = sum((minus_lambda ** (3 * j) for j in range(i)), PolyZ())
    elif rest == 1:
        head = sum((minus_lambda ** (3 * i + 4 + 3 * j) for j in range(i)), PolyZ())
        middle = minus_lambda ** (3 * i) * PolyZ([1, 1, 1])
        tail = sum((minus_lambda ** (3 * j) for j in range(i)), PolyZ())
    else:
        head = sum((minus_lambda ** (3 * i + 3 + 3 * j) for j in range(i + 1)), PolyZ())
        middle = PolyZ()
        tail = sum((minus_lambda ** (3 * j) for j in range(i + 1)), PolyZ())
    return -_LAMBDA_PLUS_ONE * head + middle + _LAMBDA_PLUS_ONE * tail


def ext1_report(u):
    util.require_at_least('u', u)
    sign = util.minus_one_power(u + 1)
    if u % 3 == 0:
        numerator = _LAMBDA_PLUS_ONE * (PolyZ.monomial(2 * u + 3) + 1)
        case = 'u=3i'
    elif u % 3 == 1:
        numerator = (_LAMBDA_PLUS_ONE * (PolyZ.monomial(u + 1) + sign)
                     * (PolyZ.monomial(u + 2) + sign))
        case = 'u=3i+1'
    else:
        numerator = _LAMBDA_PLUS_ONE * _power_minus(u + 1, sign) * _power_minus(u + 2, sign)
        case = 'u=3i+2'
    return _evaluate('ext1', {'u': u}, case, numerator, _CUBE_PLUS_ONE)


def chi_ext1_formula(u):
    """Coxeter polynomial of the rectangle extended by one vertex above its maximum."""
    return ext1_report(u).result


def ext_report(u, v):
    util.require_at_least('u', u)
    util.require_at_least('v', v, 0)
    if v == 0:
        return rectangle_report(u)
    top = PolyZ.monomial(2 * u + v + 2) + 1
    if u % 3 == 0:
        numerator = _LAMBDA_PLUS_ONE * (top + util.minus_one_power(u) * _power_sum(2, v, u))
        case = 'u=3i'
    elif u % 3 == 1:
        numerator = _LAMBDA_PLUS_ONE * (top + util.minus_one_power(u + 1) * _power_sum(0, v, u + 1))
        case = 'u=3i+1'
    else:
        sign = util.minus_one_power(u + 1)
        numerator = _LAMBDA_PLUS_ONE * _power_minus(u + 1, sign) * _power_minus(u + v + 1, sign)
        case = 'u=3i+2'
    return _evaluate('ext', {'u': u, 'v': v}, case, numerator, _CUBE_PLUS_ONE)


def chi_ext_formula(u, v):
    """Coxeter polynomial of the rectangle with a chain of v vertices above its maximum."""
    return ext_report(u, v).result


def nakayama_report(n, r):
    util.require_at_least('n', n, 2)
    util.require_at_least('r', r, 2)
    if r > n:
        raise errors.InvalidParameter('r must be <= n, got n={} r={}'.format(n, r))
    if 2 * r < n + 2:
        raise errors.PreconditionViolated(
            'closed form needs 2r >= n+2, got n={} r={}'.format(n, r))
    d = n - r
    sign = util.minus_one_power(d)
    params = {'n': n, 'r': r}
    if 2 * r == n + 2:
        if d % 3 != 1:
            numerator = _LAMBDA_PLUS_ONE * _power_minus(3 * d + 6, sign)
            denominator = _CUBE_PLUS_ONE * _power_minus(d + 2, sign)
            case = '2r=n+2, n-r≢1 (mod 3)'
        else:
            numerator = _LAMBDA_PLUS_ONE * _power_minus(d + 2, sign) ** 2
            denominator = _CUBE_PLUS_ONE
            case = '2r=n+2, n-r≡1 (mod 3)'
        return _evaluate('nakayama', params, case, numerator, denominator)
    top = PolyZ.monomial(n + 2) + 1
    if d % 3 == 0:
        numerator = _LAMBDA_PLUS_ONE * (top + sign * _power_sum(0, 2 * r - n - 2, d + 2))
        case = '2r>=n+3, n-r≡0 (mod 3)'
    elif d % 3 == 1:
        numerator = _LAMBDA_PLUS_ONE * _power_minus(d + 2, sign) * _power_minus(r, sign)
        case = '2r>=n+3, n-r≡1 (mod 3)'
    else:
        numerator = _LAMBDA_PLUS_ONE * (top - sign * _power_sum(2, 2 * r - n - 2, d + 1))
        case = '2r>=n+3, n-r≡2 (mod 3)'
    return _evaluate('nakayama', params, case, numerator, _CUBE_PLUS_ONE)


def chi_nakayama_formula(n, r):
    """Coxeter polynomial of N(n, r) for 2r >= n+2."""
    return nakayama_report(n, r).result


def happel_extension_poly(chi_a, cartan, m):
    """Coxeter polynomial of the one-point extension A[M] from χ_A and the class of M.

    With χ_A = Σ a_i λ^(n-i), the extension has coefficients
    b_i = a_i - a_(i-1)(<M,M> - 1) - Σ_{j=2..i} a_(i-j) <τ^(j-1) M, M>.
    """
    n = cartan.n
    if chi_a.degree != n:
        raise errors.DimensionMismatch(n, chi_a.degree, 'polynomial degree')
    if len(m) != n:
        raise errors.DimensionMismatch(n, len(m))
    if not chi_a.is_monic():
        raise errors.PreconditionViolated('χ_A must be monic')

    def a(i):
        return chi_a.coefficient(n - i) if 0 <= i <= n else 0

    self_form = euler_form(cartan, m, m)
    twisted = {j: tau_twisted_euler(cartan, m, j - 1) for j in range(2, n + 2)}
    b = []
    for i in range(n + 2):
        value = a(i) - a(i - 1) * (self_form - 1)
        value -= sum(a(i - j) * twisted[j] for j in range(2, i + 1))
        b.append(value)
    return PolyZ.from_descending(b)


def one_point_step(chi_a, chi_perp):
    """(1+λ)·χ_A - λ·χ_A' for an exceptional extension with perpendicular algebra A'."""
    return (ONE + LAMBDA) * chi_a - LAMBDA * chi_perp
