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

"""Cartan data of the flip algebra attached to a downward closed subset,
and shape comparison of matrices up to a simultaneous permutation."""

import dataclasses
import logging

from pycoxeter import errors
from pycoxeter.matrix import IntMatrix
from pycoxeter.meta import VERSION
from pycoxeter.poset import downward_closure_gaps

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FlipPresentation(object):
    """A poset split into a closed subset and its complement, with a vertex order."""

    poset: object
    closed: tuple
    complement: tuple
    order: tuple

    @classmethod
    def build(cls, poset, closed, order=None):
        closed_set = set(closed)
        for name in closed_set:
            if name not in poset:
                raise errors.UnknownElement(name)
        missing = downward_closure_gaps(poset, closed_set)
        if missing:
            raise errors.NotClosed(missing)
        y_part = poset.induced(closed_set)
        u_part = poset.induced([x for x in poset.elements if x not in closed_set])
        if order is None:
            order = y_part.linear_extension() + u_part.linear_extension()
        order = list(order)
        if sorted(order) != sorted(poset.elements):
            raise errors.NotLinearExtension('order must list every element once')
        y_order = [x for x in order if x in closed_set]
        u_order = [x for x in order if x not in closed_set]
        if not y_part.is_linear_extension(y_order) or not u_part.is_linear_extension(u_order):
            raise errors.NotLinearExtension(
                '{} does not refine the orders on both parts'.format(order))
        return cls(poset, tuple(y_order), tuple(u_order), tuple(order))

    def entry(self, a, b):
        closed = set(self.closed)
        if a in closed and b in closed:
            return int(self.poset.leq(a, b))
        if a not in closed and b not in closed:
            return int(self.poset.leq(a, b))
        if a not in closed:
            return int(self.poset.lt(b, a))
        return 0

    def cartan(self):
        return IntMatrix([[self.entry(a, b) for b in self.order] for a in self.order])


def flip_cartan(poset, closed, order=None):
    """Cartan matrix of the flip algebra A_Y for a downward closed Y."""
    return FlipPresentation.build(poset, closed, order).cartan()


def _signature(m, rounds=2):
    n = m.n
    sig = [(m[i, i], tuple(sorted(m.row(i))), tuple(sorted(m.column(i)))) for i in range(n)]
    for _ in range(rounds):
        sig = [(sig[i],
                tuple(sorted((m[i, j], sig[j]) for j in range(n) if j != i)),
                tuple(sorted((m[j, i], sig[j]) for j in range(n) if j != i)))
               for i in range(n)]
    return sig


def permutation_equivalent(a, b):
    """Returns p with a[i, j] == b[p[i], p[j]] for all i, j, or None.

    Backtracking over vertices of a, restricted to vertices of b with the same
    refined row/column profile.
    """
    if a.n != b.n:
        return None
    n = a.n
    sig_a = _signature(a)
    sig_b = _signature(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    candidates = [[k for k in range(n) if sig_b[k] == sig_a[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    assignment = {}
    used = set()
    nodes = [0]

    def consistent(i, k):
        for j, l in assignment.items():
            if a[i, j] != b[k, l] or a[j, i] != b[l, k]:
                return False
        return a[i, i] == b[k, k]

    def search(depth):
        if depth == n:
            return True
        i = order[depth]
        for k in candidates[i]:
            if k in used or not consistent(i, k):
                continue
            nodes[0] += 1
            assignment[i] = k
            used.add(k)
            if search(depth + 1):
                return True
            del assignment[i]
            used.discard(k)
        return False

    found = search(0)
    log.debug('permutation search visited %d nodes', nodes[0])
    if not found:
        return None
    return [assignment[i] for i in range(n)]
