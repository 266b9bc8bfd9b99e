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

"""Utilities used by tests."""

__maintainer__ = 'The pycoxeter Authors'

import unittest

import sympy
from hypothesis import strategies as st

from pycoxeter.ladder import LadderComplex, LadderSpec
from pycoxeter.matrix import IntMatrix
from pycoxeter.polynomial import PolyZ
from pycoxeter.poset import Poset


def sympy_matrix(m):
    return sympy.Matrix(m.rows)


def sympy_char_poly(m):
    """Characteristic polynomial det(λI - M) computed by sympy."""
    lam = sympy.Symbol('lam')
    coeffs = sympy_matrix(m).charpoly(lam).all_coeffs()
    return PolyZ.from_descending([int(c) for c in coeffs])


def sympy_det(m):
    return int(sympy_matrix(m).det())


def sympy_coxeter_poly(cartan):
    """χ from Φ = -C^{-t} C, inverted by sympy."""
    c = sympy_matrix(cartan)
    phi = -(c.T.inv() * c)
    return sympy_char_poly(IntMatrix(phi.tolist()))


@st.composite
def int_matrices(draw, max_n=5, bound=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    entry = st.integers(min_value=-bound, max_value=bound)
    return IntMatrix([[draw(entry) for _ in range(n)] for _ in range(n)])


@st.composite
def unitriangular_matrices(draw, max_n=6):
    """Upper unitriangular 0/1 matrices, unimodular by construction."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    bit = st.integers(min_value=0, max_value=1)
    return IntMatrix([[1 if i == j else (draw(bit) if j > i else 0) for j in range(n)]
                      for i in range(n)])


@st.composite
def posets(draw, max_size=8):
    """Random posets on p1..pk; covers only go from lower to higher index."""
    size = draw(st.integers(min_value=1, max_value=max_size))
    elements = ['p{}'.format(k) for k in range(1, size + 1)]
    covers = [(x, y) for i, x in enumerate(elements) for y in elements[i + 1:]
              if draw(st.booleans())]
    return Poset.from_covers(elements, covers)


@st.composite
def posets_with_closed_subset(draw, max_size=8):
    poset = draw(posets(max_size))
    seeds = draw(st.sets(st.sampled_from(poset.elements)))
    closed = sorted({x for x in poset.elements for y in seeds if poset.leq(x, y)})
    return poset, closed


@st.composite
def ladder_specs(draw, max_n=8):
    n = draw(st.integers(min_value=2, max_value=max_n))
    r = draw(st.integers(min_value=2, max_value=n))
    return LadderSpec(n, r)


def word_from(spec, first, steps):
    """Walks an indecomposable word from first, each step picking among the allowed next indices."""
    word = [first]
    for step in steps:
        lo = word[-1] + 1
        if len(word) >= 2:
            lo = max(lo, word[-2] + spec.r)
        hi = min(word[-1] + spec.r - 1, spec.n)
        if lo > hi:
            break
        word.append(lo + step % (hi - lo + 1))
    return word


@st.composite
def words(draw, spec, max_length=3):
    first = draw(st.integers(min_value=1, max_value=spec.n))
    steps = draw(st.lists(st.integers(min_value=0, max_value=10), max_size=max_length - 1))
    return word_from(spec, first, steps)


@st.composite
def word_complexes(draw, max_n=8):
    spec = draw(ladder_specs(max_n))
    word = draw(words(spec))
    start = draw(st.integers(min_value=-2, max_value=1))
    return LadderComplex.word(spec, word, start)


class CoxeterTestCase(unittest.TestCase):
    """Base class with assertions on polynomials and matrices."""

    def assertPoly(self, poly, coeffs):
        self.assertIsInstance(poly, PolyZ)
        self.assertEqual(list(poly.coeffs), list(coeffs))

    def assertMatrix(self, matrix, rows):
        self.assertEqual(matrix.rows, [list(r) for r in rows])

    def assertPermutationOf(self, permutation, a, b):
        self.assertIsNotNone(permutation)
        for i in range(a.n):
            for j in range(a.n):
                self.assertEqual(a[i, j], b[permutation[i], permutation[j]])
