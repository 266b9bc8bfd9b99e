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

"""Exact integer and rational matrices.

Entries are Python integers or ``fractions.Fraction`` values held in numpy
object arrays, so products and row operations never overflow or round.
"""

import logging
import math
from fractions import Fraction
from functools import reduce

import numpy as np

from pycoxeter import errors
from pycoxeter.meta import VERSION
from pycoxeter.polynomial import PolyZ

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)


class IntMatrix(object):
    """Dense square integer matrix, immutable, row-major."""

    __slots__ = ('_rows',)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise errors.DimensionMismatch('n >= 1', n, 'matrix size')
        for row in rows:
            if len(row) != n:
                raise errors.DimensionMismatch(n, len(row), 'row length')
        object.__setattr__(self, '_rows', rows)

    def __setattr__(self, name, value):
        raise AttributeError('IntMatrix is immutable')

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_array(cls, array):
        return cls([[int(x) for x in row] for row in array.tolist()])

    @property
    def n(self):
        return len(self._rows)

    @property
    def rows(self):
        return [list(row) for row in self._rows]

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def row(self, i):
        return list(self._rows[i])

    def column(self, j):
        return [row[j] for row in self._rows]

    def to_array(self):
        return np.array(self._rows, dtype=object).reshape(self.n, self.n)

    def transpose(self):
        return IntMatrix(zip(*self._rows))

    def trace(self):
        return sum(self._rows[i][i] for i in range(self.n))

    def permuted(self, perm):
        """Returns P M P^t, i.e. entry (i, j) is M[perm[i], perm[j]]."""
        return IntMatrix([[self._rows[a][b] for b in perm] for a in perm])

    def is_upper_triangular(self):
        return all(self._rows[i][j] == 0 for i in range(self.n) for j in range(i))

    def __neg__(self):
        return IntMatrix([[-x for x in row] for row in self._rows])

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if other.n != self.n:
            raise errors.DimensionMismatch(self.n, other.n)
        return IntMatrix.from_array(self.to_array().dot(other.to_array()))

    def __pow__(self, exponent):
        if exponent < 0:
            return unimodular_inverse(self) ** (-exponent)
        result = IntMatrix.identity(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return 'IntMatrix({})'.format(self.rows)


class RatMatrix(object):
    """Rectangular matrix of exact rationals; zero rows or columns are allowed."""

    __slots__ = ('_rows', '_cols', '_entries')

    def __init__(self, entries, cols=None):
        entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != cols:
                raise errors.DimensionMismatch(cols, len(row), 'row length')
        object.__setattr__(self, '_rows', len(entries))
        object.__setattr__(self, '_cols', cols)
        object.__setattr__(self, '_entries', entries)

    def __setattr__(self, name, value):
        raise AttributeError('RatMatrix is immutable')

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def entries(self):
        return [list(row) for row in self._entries]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self._cols, self._entries) == (other._cols, other._entries)

    def __hash__(self):
        return hash((self._cols, self._entries))

    def __repr__(self):
        return 'RatMatrix({}x{})'.format(self._rows, self._cols)


def vec_mat(x, m):
    """Row vector times matrix, x·M."""
    if len(x) != m.n:
        raise errors.DimensionMismatch(m.n, len(x))
    return [int(v) for v in np.array(list(x), dtype=object).dot(m.to_array())]


def dot(x, y):
    if len(x) != len(y):
        raise errors.DimensionMismatch(len(x), len(y))
    return sum(a * b for a, b in zip(x, y))


def char_poly_int(m):
    """Returns det(λI - M) by the division-free Berkowitz recursion.

    The leading r x r block is grown one row and column at a time; each step
    multiplies the running coefficient vector by a lower triangular Toeplitz
    matrix whose first column is 1, -a, -RC, -RAC, -RA²C, ...
    """
    a = m.to_array()
    n = m.n
    vect = [1, -a[0, 0]]
    for r in range(1, n):
        block = a[:r, :r]
        col = a[:r, r]
        row = a[r, :r]
        diags = [1, -a[r, r]]
        v = col
        for _ in range(r):
            diags.append(-row.dot(v))
            v = block.dot(v)
        vect = [sum(diags[i - j] * vect[j] for j in range(min(i, r) + 1))
                for i in range(r + 2)]
    log.debug('berkowitz finished for n=%d', n)
    return PolyZ.from_descending(int(c) for c in vect)


def determinant(m):
    """Exact determinant by fraction-free Bareiss elimination."""
    a = m.to_array().copy()
    n = m.n
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k, k] == 0:
            for i in range(k + 1, n):
                if a[i, k] != 0:
                    a[[k, i]] = a[[i, k]]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i, j] = (a[i, j] * a[k, k] - a[i, k] * a[k, j]) // prev
        prev = a[k, k]
    return sign * int(a[n - 1, n - 1])


def unimodular_inverse(m):
    """Inverse of a matrix with determinant +1 or -1; the result is integral."""
    det = determinant(m)
    if abs(det) != 1:
        raise errors.NotUnimodular(det)
    n = m.n
    x = np.array([[Fraction(v) for v in row] for row in m.rows], dtype=object)
    y = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)
    for i in range(n):
        for j in range(i, n):
            if x[j, i] != 0:
                if j != i:
                    x[[i, j]] = x[[j, i]]
                    y[[i, j]] = y[[j, i]]
                break
        pivot = x[i, i]
        x[i, :] = x[i, :] / pivot
        y[i, :] = y[i, :] / pivot
        for j in range(n):
            if j != i and x[j, i] != 0:
                factor = x[j, i]
                y[j, :] = y[j, :] - factor * y[i, :]
                x[j, :] = x[j, :] - factor * x[i, :]
    return IntMatrix([[int(v) for v in row] for row in y.tolist()])


def _row_content(row):
    g = reduce(math.gcd, (int(v) for v in row), 0)
    return g if g else 1


def rat_solve_dim(a):
    """Returns (rank, nullity) of a rational matrix.

    Rows are cleared of denominators and reduced by fraction-free elimination,
    pivoting on the first nonzero entry in column order.
    """
    if a.rows == 0 or a.cols == 0:
        return 0, a.cols
    rows = []
    for row in a.entries:
        scale = reduce(lambda acc, f: acc * f.denominator // math.gcd(acc, f.denominator), row, 1)
        rows.append([int(f * scale) for f in row])
    x = np.array(rows, dtype=object).reshape(a.rows, a.cols)
    rank = 0
    for c in range(a.cols):
        pivot = None
        for i in range(rank, a.rows):
            if x[i, c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != rank:
            x[[rank, pivot]] = x[[pivot, rank]]
        for i in range(rank + 1, a.rows):
            if x[i, c] != 0:
                x[i, :] = x[rank, c] * x[i, :] - x[i, c] * x[rank, :]
                x[i, :] = x[i, :] // _row_content(x[i, :])
        rank += 1
        if rank == a.rows:
            break
    log.debug('rank %d of %dx%d system', rank, a.rows, a.cols)
    return rank, a.cols - rank
