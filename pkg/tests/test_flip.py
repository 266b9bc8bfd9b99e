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

"""Tests flip algebras and the simultaneous permutation search."""

__maintainer__ = 'The pycoxeter Authors'

import unittest

from hypothesis import given, settings

from pycoxeter import errors
from pycoxeter.coxeter import coxeter_polynomial
from pycoxeter.flip import FlipPresentation, flip_cartan, permutation_equivalent
from pycoxeter.matrix import IntMatrix
from pycoxeter.poset import (Poset, chain_name, extension_poset, incidence_cartan,
                             nakayama_cartan, rect_name)
from tests import helper

CHAIN3 = Poset.from_covers(['1', '2', '3'], [('1', '2'), ('2', '3')])


class TestFlip(helper.CoxeterTestCase):
    """Tests flip_cartan."""

    def test_chain(self):
        self.assertMatrix(flip_cartan(CHAIN3, ['1'], ['1', '2', '3']),
                          [[1, 0, 0], [1, 1, 1], [1, 0, 1]])

    def test_trivial_subsets(self):
        self.assertEqual(flip_cartan(CHAIN3, ['1', '2', '3']), incidence_cartan(CHAIN3))
        self.assertEqual(flip_cartan(CHAIN3, []), incidence_cartan(CHAIN3))

    def test_presentation(self):
        flip = FlipPresentation.build(CHAIN3, ['2', '1'])
        self.assertEqual(flip.closed, ('1', '2'))
        self.assertEqual(flip.complement, ('3',))
        self.assertEqual(flip.entry('3', '1'), 1)
        self.assertEqual(flip.entry('1', '3'), 0)

    def test_errors(self):
        with self.assertRaises(errors.NotClosed) as cm:
            flip_cartan(CHAIN3, ['2'])
        self.assertEqual(cm.exception.missing, {'1'})
        with self.assertRaises(errors.UnknownElement):
            flip_cartan(CHAIN3, ['7'])
        with self.assertRaises(errors.NotLinearExtension):
            flip_cartan(CHAIN3, ['1'], ['1', '3', '2'])
        with self.assertRaises(errors.NotLinearExtension):
            flip_cartan(CHAIN3, ['1'], ['1', '2'])

    @given(helper.posets_with_closed_subset())
    @settings(max_examples=50, derandomize=True, deadline=None)
    def test_coxeter_polynomial_is_preserved(self, case):
        poset, closed = case
        self.assertEqual(coxeter_polynomial(flip_cartan(poset, closed)),
                         coxeter_polynomial(incidence_cartan(poset)))

    def test_chain_flip_of_upper_in(self):
        for u in range(1, 6):
            for v in range(1, 6):
                poset = extension_poset(u, v, 'upper_in')
                flipped = flip_cartan(poset, [chain_name(k) for k in range(1, v + 1)])
                expected = incidence_cartan(extension_poset(u, v, 'lower_out'))
                self.assertPermutationOf(permutation_equivalent(flipped, expected), flipped, expected)

    def test_second_flip_gives_nakayama(self):
        for u in range(1, 6):
            for v in range(1, 6):
                poset = extension_poset(u, v, 'upper_in')
                closed = [chain_name(k) for k in range(1, v + 1)]
                closed += [rect_name(1, j) for j in range(1, u + 1)]
                flipped = flip_cartan(poset, closed)
                expected = nakayama_cartan(2 * u + v, u + v + 1)
                self.assertPermutationOf(permutation_equivalent(flipped, expected), flipped, expected)

    def test_symmetric_flip(self):
        for r in range(2, 9):
            poset = extension_poset(r - 1, 1, 'lower_in')
            flipped = flip_cartan(poset, [rect_name(1, j) for j in range(1, r)])
            expected = nakayama_cartan(2 * r - 1, r)
            self.assertPermutationOf(permutation_equivalent(flipped, expected), flipped, expected)


class TestPermutationEquivalent(helper.CoxeterTestCase):
    """Tests the simultaneous permutation search."""

    def test_examples(self):
        a = IntMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        p = [2, 0, 1]
        b = IntMatrix([[a[i, j] for j in range(3)] for i in range(3)])
        self.assertEqual(permutation_equivalent(a, b), [0, 1, 2])
        shuffled = IntMatrix([[a[p.index(i), p.index(j)] for j in range(3)] for i in range(3)])
        self.assertPermutationOf(permutation_equivalent(a, shuffled), a, shuffled)
        self.assertIsNone(permutation_equivalent(a, nakayama_cartan(3, 3)))
        self.assertIsNone(permutation_equivalent(a, IntMatrix.identity(2)))

    @given(helper.unitriangular_matrices(max_n=7))
    @settings(max_examples=50, derandomize=True, deadline=None)
    def test_finds_reversal(self, m):
        perm = list(reversed(range(m.n)))
        target = m.permuted(perm)
        self.assertPermutationOf(permutation_equivalent(m, target), m, target)


def suite():
    """Returns a test suite object."""
    loader = unittest.TestLoader()
    suite_obj = unittest.TestSuite()
    suite_obj.addTest(loader.loadTestsFromTestCase(TestFlip))
    suite_obj.addTest(loader.loadTestsFromTestCase(TestPermutationEquivalent))
    return suite_obj


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
