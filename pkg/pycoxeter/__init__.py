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

from pycoxeter.polynomial import PolyZ, poly_divmod, poly_exact_div
from pycoxeter.matrix import IntMatrix, RatMatrix, char_poly_int, determinant, \
    unimodular_inverse, rat_solve_dim
from pycoxeter.poset import ExtensionVariant, Poset, rectangle_poset, extension_poset, \
    incidence_cartan, nakayama_cartan, is_downward_closed, parse_poset, load_poset, format_poset
from pycoxeter.coxeter import coxeter_matrix, coxeter_polynomial, euler_form, \
    tau_twisted_euler, injective_class, projective_class
from pycoxeter.formulas import FormulaReport, chi_rectangle_formula, chi_rectangle_expansion, \
    chi_ext1_formula, chi_ext_formula, chi_nakayama_formula, happel_extension_poly, one_point_step
from pycoxeter.flip import FlipPresentation, flip_cartan, permutation_equivalent
from pycoxeter.lgroup import WeightTriple, LElement, solve_shift_equation, auslander_euler, \
    tau_euler_closed_form
from pycoxeter.ladder import LadderSpec, LadderComplex, ladder_index, ladder_hom_dim, \
    validate_word, complex_hom_k_dim, projective_resolution, injective_coresolution, \
    k0_class, parse_complex, load_complex
from pycoxeter.tilting import TiltingReport, tilting_family, verify_tilting, verify_family
from pycoxeter.errors import CoxeterError, InvalidParameter, PreconditionViolated, RangeError, \
    DimensionMismatch, IndexOutOfRange, NonExactDivision, NotUnimodular, NotLinearExtension, \
    NotClosed, UnknownElement, PosetFormatError, ComplexFormatError, SpecMismatch, NonTerminating
