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

"""Coxeter matrices, Coxeter polynomials and Euler forms of a Cartan matrix.

Dimension vectors are plain lists of integers in the vertex order of the
Cartan matrix. They are row vectors and the Coxeter matrix acts on the
right, so the class of the j-th Auslander-Reiten translate of x is x·Φ^j.
"""

from pycoxeter import errors
from pycoxeter.matrix import char_poly_int, dot, unimodular_inverse, vec_mat
from pycoxeter.meta import VERSION

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'


def _inverse_transpose(cartan):
    return unimodular_inverse(cartan).transpose()


def coxeter_matrix(cartan):
    """Φ = -C^{-t} C."""
    return -(_inverse_transpose(cartan) @ cartan)


def coxeter_polynomial(cartan):
    return char_poly_int(coxeter_matrix(cartan))


def _check(cartan, *vectors):
    for vector in vectors:
        if len(vector) != cartan.n:
            raise errors.DimensionMismatch(cartan.n, len(vector))


def euler_form(cartan, x, y):
    """<x, y> = x C^{-t} y^t."""
    _check(cartan, x, y)
    return dot(vec_mat(x, _inverse_transpose(cartan)), y)


def tau_twisted_euler(cartan, m, j):
    """<τ^j m, m> computed as (m Φ^j) C^{-t} m^t; negative j uses Φ^{-1}."""
    _check(cartan, m)
    shifted = vec_mat(m, coxeter_matrix(cartan) ** j)
    return euler_form(cartan, shifted, m)


def injective_class(cartan, j):
    """Class of the indecomposable injective at vertex j (1-based): row j of C."""
    if not 1 <= j <= cartan.n:
        raise errors.IndexOutOfRange(j, cartan.n)
    return cartan.row(j - 1)


def projective_class(cartan, j):
    """Class of the indecomposable projective at vertex j (1-based): column j of C."""
    if not 1 <= j <= cartan.n:
        raise errors.IndexOutOfRange(j, cartan.n)
    return cartan.column(j - 1)
