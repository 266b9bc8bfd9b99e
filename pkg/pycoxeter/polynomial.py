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

"""Integer polynomials in one variable.

A polynomial is an immutable tuple of coefficients in ascending order, so
``PolyZ([1, 10, 5])`` is ``1 + 10λ + 5λ²``. Trailing zeros are stripped on
construction and the zero polynomial has no coefficients at all, which makes
equality structural.
"""

import logging

from pycoxeter import errors
from pycoxeter.meta import VERSION

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)


def _normalize(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


class PolyZ(object):
    """Polynomial in λ with arbitrary precision integer coefficients."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=()):
        object.__setattr__(self, '_coeffs', _normalize(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError('PolyZ is immutable')

    @classmethod
    def monomial(cls, power, coeff=1):
        """Returns coeff * λ**power."""
        if power < 0:
            raise ValueError('negative power {}'.format(power))
        return cls([0] * power + [coeff])

    @classmethod
    def from_descending(cls, coeffs):
        """Builds a polynomial from coefficients listed from the leading term down."""
        return cls(list(reversed(list(coeffs))))

    @property
    def coeffs(self):
        return list(self._coeffs)

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def leading(self):
        return self._coeffs[-1] if self._coeffs else 0

    def coefficient(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    def is_monic(self):
        return self.leading() == 1

    def reverse(self):
        """Coefficient sequence read backwards (the reciprocal polynomial)."""
        return PolyZ(reversed(self._coeffs))

    def is_palindromic(self):
        return self._coeffs == self._coeffs[::-1]

    def shift(self, power):
        """Multiplies by λ**power."""
        if not self._coeffs:
            return self
        return PolyZ([0] * power + list(self._coeffs))

    def __call__(self, value):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, PolyZ):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return PolyZ([-c for c in self._coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return PolyZ(res)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return PolyZ()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return PolyZ(res)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('negative exponent {}'.format(exponent))
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self):
        return 'PolyZ({})'.format(list(self._coeffs))

    def __str__(self):
        if not self._coeffs:
            return '0'
        terms = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = 'λ' if power == 1 else 'λ^{}'.format(power)
                body = var if mag == 1 else '{}{}'.format(mag, var)
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += ' {} {}'.format(sign, body)
        return text


def _coerce(value):
    if isinstance(value, PolyZ):
        return value
    if isinstance(value, int):
        return PolyZ([value])
    return NotImplemented


ZERO = PolyZ()
ONE = PolyZ([1])
LAMBDA = PolyZ([0, 1])


def poly_divmod(num, den):
    """Long division over the integers.

    Returns ``(q, r)`` with ``num = q*den + r`` and ``deg r < deg den``. Stops
    early, leaving a remainder of full degree, as soon as a quotient
    coefficient would not be an integer.
    """
    if den.is_zero():
        raise ZeroDivisionError('polynomial division by zero')
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.leading()
    quot = [0] * max(len(rem) - dd, 0)
    dcoeffs = den.coeffs
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            break
        quot[k - dd] = q
        for i, d in enumerate(dcoeffs):
            rem[k - dd + i] -= q * d
    return PolyZ(quot), PolyZ(rem)


def poly_exact_div(num, den):
    """Returns q with num = q*den, or raises NonExactDivision carrying the remainder."""
    quot, rem = poly_divmod(num, den)
    if not rem.is_zero():
        log.debug('inexact division of %s by %s', num, den)
        raise errors.NonExactDivision(rem)
    return quot
