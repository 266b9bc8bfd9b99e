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

"""Tests the closed-form Coxeter polynomials and one-point extension recursions."""

__maintainer__ = 'The pycoxeter Authors'

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from pycoxeter import errors, formulas
from pycoxeter.coxeter import coxeter_polynomial, injective_class
from pycoxeter.matrix import IntMatrix
from pycoxeter.polynomial import PolyZ
from pycoxeter.poset import incidence_cartan, rectangle_poset
from tests import helper

small_polys = st.lists(st.integers(min_value=-9, max_value=9), max_size=7).map(PolyZ)


class TestRectangle(helper.CoxeterTestCase):
    """Tests the rectangle closed form and its expansion."""

    def test_formula(self):
        self.assertPoly(formulas.chi_rectangle_formula(1), [1, 1, 1])
        self.assertPoly(formulas.chi_rectangle_formula(2), [1, 1, 0, 1, 1])
        self.assertPoly(formulas.chi_rectangle_formula(3), [1, 1, 0, -1, 0, 1, 1])
        with self.assertRaises(errors.InvalidParameter):
            formulas.chi_rectangle_formula(0)

    def test_expansion(self):
        self.assertPoly(formulas.chi_rectangle_expansion(1), [1, 1, 1])
        self.assertPoly(formulas.chi_rectangle_expansion(2), [1, 1, 0, 1, 1])
        self.assertPoly(formulas.chi_rectangle_expansion(3), [1, 1, 0, -1, 0, 1, 1])
        for u in range(1, 21):
            self.assertEqual(formulas.chi_rectangle_expansion(u), formulas.chi_rectangle_formula(u))

    def test_report(self):
        report = formulas.rectangle_report(2)
        self.assertEqual(report.case, 'u≡2 (mod 3)')
        self.assertEqual(report.result * report.denominator, report.numerator)
        self.assertEqual(report.as_dict()['result'], [1, 1, 0, 1, 1])
        self.assertEqual(report.params, {'u': 2})

    def test_matches_matrix(self):
        for u in range(1, 9):
            self.assertEqual(formulas.chi_rectangle_formula(u),
                             coxeter_polynomial(incidence_cartan(rectangle_poset(u))))


class TestExtensions(helper.CoxeterTestCase):
    """Tests the one-branch extension closed forms."""

    def test_ext1(self):
        self.assertPoly(formulas.chi_ext1_formula(1), [1, 1, 1, 1])
        self.assertPoly(formulas.chi_ext1_formula(2), [1, 1, 0, 0, 1, 1])
        self.assertPoly(formulas.chi_ext1_formula(3), [1, 1, 0, -1, -1, 0, 1, 1])

    def test_ext(self):
        self.assertPoly(formulas.chi_ext_formula(1, 1), [1, 1, 1, 1])
        self.assertPoly(formulas.chi_ext_formula(1, 2), [1, 1, 1, 1, 1])
        self.assertPoly(formulas.chi_ext_formula(2, 1), [1, 1, 0, 0, 1, 1])
        with self.assertRaises(errors.InvalidParameter):
            formulas.chi_ext_formula(1, -1)

    def test_boundaries(self):
        for u in range(1, 21):
            self.assertEqual(formulas.chi_ext_formula(u, 1), formulas.chi_ext1_formula(u))
            self.assertEqual(formulas.chi_ext_formula(u, 0), formulas.chi_rectangle_formula(u))

    def test_outputs_are_palindromic(self):
        for u in range(1, 9):
            for v in range(0, 9):
                poly = formulas.chi_ext_formula(u, v)
                self.assertEqual(poly.degree, 2 * u + v)
                self.assertTrue(poly.is_palindromic())
                self.assertEqual(poly.coefficient(0), 1)


class TestNakayama(helper.CoxeterTestCase):
    """Tests the N(n, r) closed form."""

    def test_examples(self):
        self.assertPoly(formulas.chi_nakayama_formula(4, 3), [1, 1, 0, 1, 1])
        self.assertPoly(formulas.chi_nakayama_formula(3, 3), [1, 1, 1, 1])
        self.assertPoly(formulas.chi_nakayama_formula(8, 6), [1, 1, 0, -1, -1, -1, 0, 1, 1])
        with self.assertRaises(errors.PreconditionViolated):
            formulas.chi_nakayama_formula(3, 2)
        with self.assertRaises(errors.InvalidParameter):
            formulas.chi_nakayama_formula(3, 4)

    def test_substitutions(self):
        for u in range(1, 11):
            self.assertEqual(formulas.chi_nakayama_formula(2 * u, u + 1),
                             formulas.chi_rectangle_formula(u))
        for u in range(1, 9):
            for v in range(1, 9):
                self.assertEqual(formulas.chi_nakayama_formula(2 * u + v, u + v + 1),
                                 formulas.chi_ext_formula(u, v))

    def test_every_case_label_is_reached(self):
        cases = {formulas.nakayama_report(n, r).case
                 for n in range(2, 21) for r in range(2, n + 1) if 2 * r >= n + 2}
        self.assertEqual(len(cases), 5)


class TestRecursions(helper.CoxeterTestCase):
    """Tests the one-point extension formulas."""

    def test_happel(self):
        two_chain = IntMatrix([[1, 1], [0, 1]])
        self.assertPoly(formulas.happel_extension_poly(PolyZ([1, 1, 1]), two_chain, [1, 1]),
                        [1, 1, 1, 1])
        rect = incidence_cartan(rectangle_poset(2))
        self.assertEqual(formulas.happel_extension_poly(formulas.chi_rectangle_formula(2), rect,
                                                        injective_class(rect, 1)),
                         formulas.chi_ext1_formula(2))

    def test_happel_preconditions(self):
        two_chain = IntMatrix([[1, 1], [0, 1]])
        with self.assertRaises(errors.DimensionMismatch):
            formulas.happel_extension_poly(PolyZ([1, 1, 1]), two_chain, [1])
        with self.assertRaises(errors.DimensionMismatch):
            formulas.happel_extension_poly(PolyZ([1, 1]), two_chain, [1, 1])
        with self.assertRaises(errors.PreconditionViolated):
            formulas.happel_extension_poly(PolyZ([1, 1, 2]), two_chain, [1, 1])

    def test_one_point_step(self):
        self.assertPoly(formulas.one_point_step(PolyZ([1, 1, 1, 1]), PolyZ([1, 1, 1])),
                        [1, 1, 1, 1, 1])
        self.assertEqual(formulas.one_point_step(formulas.chi_ext_formula(3, 2),
                                                 formulas.chi_ext_formula(3, 1)),
                         formulas.chi_ext_formula(3, 3))

    @given(small_polys)
    @settings(max_examples=50, derandomize=True, deadline=None)
    def test_step_fixes_equal_inputs(self, p):
        self.assertEqual(formulas.one_point_step(p, p), p)

    @given(small_polys, small_polys)
    @settings(max_examples=20, derandomize=True, deadline=None)
    def test_shifted_sequences_satisfy_the_step(self, f, g):
        def phi(j):
            return f.shift(j) + g

        for j in range(1, 6):
            self.assertEqual(formulas.one_point_step(phi(j + 1), phi(j)), phi(j + 2))

    def test_three_term_closure(self):
        for u in range(1, 7):
            for v in range(1, 7):
                self.assertEqual(
                    formulas.one_point_step(formulas.chi_ext_formula(u, v),
                                            formulas.chi_ext_formula(u, v - 1)),
                    formulas.chi_ext_formula(u, v + 1))


def suite():
    """Returns a test suite object."""
    loader = unittest.TestLoader()
    suite_obj = unittest.TestSuite()
    for case in (TestRectangle, TestExtensions, TestNakayama, TestRecursions):
        suite_obj.addTest(loader.loadTestsFromTestCase(case))
    return suite_obj


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
