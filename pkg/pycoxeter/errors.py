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

"""Errors thrown by pycoxeter."""

from pycoxeter.meta import VERSION

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'


class CoxeterError(Exception):
    """Base class of every error raised by this package."""


class InvalidParameter(CoxeterError):
    """Error thrown when a family parameter is out of its admissible range (e.g. u < 1)."""

    def __init__(self, msg):
        super(InvalidParameter, self).__init__(msg)


class PreconditionViolated(CoxeterError):
    """Error thrown when a closed form is evaluated outside the range where it is stated."""

    def __init__(self, msg):
        super(PreconditionViolated, self).__init__(msg)


class RangeError(CoxeterError):
    """Error thrown when an index such as a twist exponent lies outside its valid range."""

    def __init__(self, msg):
        super(RangeError, self).__init__(msg)


class DimensionMismatch(CoxeterError):
    """Error thrown when vectors, matrices or polynomials of incompatible size are combined."""

    def __init__(self, expected, actual, what='dimension'):
        self.expected = expected
        self.actual = actual
        super(DimensionMismatch, self).__init__(
            '{} mismatch: expected {}, got {}'.format(what, expected, actual))


class IndexOutOfRange(CoxeterError):
    """Error thrown when a vertex or ladder index is not in 1..n."""

    def __init__(self, index, n):
        self.index = index
        self.n = n
        super(IndexOutOfRange, self).__init__(
            'index {} is outside 1..{}'.format(index, n))


class NonExactDivision(CoxeterError):
    """Error thrown when a polynomial division leaves a nonzero remainder."""

    def __init__(self, remainder):
        self.remainder = remainder
        super(NonExactDivision, self).__init__(
            'division is not exact, remainder {}'.format(remainder))


class NotUnimodular(CoxeterError):
    """Error thrown when a matrix that must be invertible over the integers is not."""

    def __init__(self, det):
        self.det = det
        super(NotUnimodular, self).__init__(
            'matrix is not unimodular (det={})'.format(det))


class NotLinearExtension(CoxeterError):
    """Error thrown when a vertex order does not refine the partial order."""

    def __init__(self, msg):
        super(NotLinearExtension, self).__init__(msg)


class NotClosed(CoxeterError):
    """Error thrown when a flip is requested for a subset that is not downward closed."""

    def __init__(self, missing):
        self.missing = missing
        super(NotClosed, self).__init__(
            'subset is not downward closed, missing {}'.format(sorted(missing)))


class UnknownElement(CoxeterError):
    """Error thrown when a name does not belong to the poset."""

    def __init__(self, name):
        self.name = name
        super(UnknownElement, self).__init__('unknown element {!r}'.format(name))


class PosetFormatError(CoxeterError):
    """Error thrown when a poset description cannot be parsed or is not a partial order."""

    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = 'line {}: {}'.format(line, msg)
        super(PosetFormatError, self).__init__(msg)


class ComplexFormatError(CoxeterError):
    """Error thrown when a complex literal is malformed or its differentials do not compose to zero."""

    def __init__(self, msg):
        super(ComplexFormatError, self).__init__(msg)


class SpecMismatch(CoxeterError):
    """Error thrown when complexes over different ladders are compared."""

    def __init__(self, left, right):
        super(SpecMismatch, self).__init__(
            'complexes live over different ladders: {} and {}'.format(left, right))


class NonTerminating(CoxeterError):
    """Error thrown when a syzygy repeats while resolving a module."""

    def __init__(self, top, length):
        self.top = top
        self.length = length
        super(NonTerminating, self).__init__(
            'resolution cycles at syzygy S_{}^({})'.format(top, length))
