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

"""Finite posets, the rectangle family and its one-branch extensions, and
the Cartan matrices of incidence and Nakayama algebras."""

import enum
import logging

from pycoxeter import errors, util
from pycoxeter.matrix import IntMatrix
from pycoxeter.meta import VERSION

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)


class ExtensionVariant(enum.Enum):
    """Where the chain of a one-branch extension is glued onto the rectangle."""

    LOWER_OUT = 'lower_out'
    UPPER_OUT = 'upper_out'
    LOWER_IN = 'lower_in'
    UPPER_IN = 'upper_in'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        if not util.is_string(value):
            raise errors.InvalidParameter('extension variant must be a name, got {!r}'.format(value))
        try:
            return cls(value.lower().replace('-', '_'))
        except ValueError:
            raise errors.InvalidParameter('unknown extension variant {!r}'.format(value))


class Poset(object):
    """Finite poset on named elements.

    The order is stored as its full reflexive-transitive closure, one row of
    booleans per element, and is validated on construction.
    """

    def __init__(self, elements, leq_pairs):
        self._elements = tuple(elements)
        if len(set(self._elements)) != len(self._elements):
            raise errors.PosetFormatError('duplicate element names')
        self._index = {name: i for i, name in enumerate(self._elements)}
        n = len(self._elements)
        table = [[i == j for j in range(n)] for i in range(n)]
        for x, y in leq_pairs:
            table[self.index(x)][self.index(y)] = True
        for i in range(n):
            for j in range(n):
                if i != j and table[i][j] and table[j][i]:
                    raise errors.PosetFormatError(
                        'relation is not antisymmetric at {} and {}'.format(
                            self._elements[i], self._elements[j]))
                if table[i][j]:
                    for k in range(n):
                        if table[j][k] and not table[i][k]:
                            raise errors.PosetFormatError('relation is not transitive')
        self._leq = tuple(tuple(row) for row in table)

    @classmethod
    def from_covers(cls, elements, covers):
        """Builds a poset from cover relations by transitive closure."""
        elements = list(elements)
        index = {name: i for i, name in enumerate(elements)}
        n = len(elements)
        reach = [[i == j for j in range(n)] for i in range(n)]
        for lower, upper in covers:
            for name in (lower, upper):
                if name not in index:
                    raise errors.UnknownElement(name)
            if lower == upper:
                raise errors.PosetFormatError('cycle at {}'.format(lower))
            reach[index[lower]][index[upper]] = True
        for k in range(n):
            for i in range(n):
                if reach[i][k]:
                    row_k = reach[k]
                    row_i = reach[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if reach[i][j] and reach[j][i]:
                    raise errors.PosetFormatError(
                        'cycle through {} and {}'.format(elements[i], elements[j]))
        pairs = [(elements[i], elements[j]) for i in range(n) for j in range(n) if reach[i][j]]
        return cls(elements, pairs)

    @property
    def elements(self):
        return list(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, name):
        return name in self._index

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise errors.UnknownElement(name)

    def leq(self, x, y):
        return self._leq[self.index(x)][self.index(y)]

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable_pairs(self):
        """Number of pairs x <= y, reflexive pairs included."""
        return sum(sum(row) for row in self._leq)

    def pairs(self):
        return [(x, y) for x in self._elements for y in self._elements if self.leq(x, y)]

    def minima(self):
        return [y for y in self._elements if not any(self.lt(x, y) for x in self._elements)]

    def maxima(self):
        return [x for x in self._elements if not any(self.lt(x, y) for y in self._elements)]

    def covers(self):
        """Cover relations x < y with nothing strictly between."""
        result = []
        for x in self._elements:
            for y in self._elements:
                if self.lt(x, y) and not any(
                        self.lt(x, z) and self.lt(z, y) for z in self._elements):
                    result.append((x, y))
        return result

    def opposite(self):
        return Poset(self._elements, [(y, x) for x, y in self.pairs()])

    def induced(self, subset):
        wanted = set(subset)
        subset = [x for x in self._elements if x in wanted]
        return Poset(subset, [(x, y) for x in subset for y in subset if self.leq(x, y)])

    def linear_extension(self, reverse=False):
        """Topological order from the minima, ties broken by name.

        With reverse=True ties go to the largest name instead, which gives a
        second, usually different, linear extension.
        """
        indegree = {y: sum(1 for x in self._elements if self.lt(x, y)) for y in self._elements}
        ready = [y for y in self._elements if indegree[y] == 0]
        order = []
        while ready:
            ready.sort(reverse=reverse)
            x = ready.pop(0)
            order.append(x)
            for y in self._elements:
                if self.lt(x, y):
                    indegree[y] -= 1
                    if indegree[y] == 0:
                        ready.append(y)
        return order

    def is_linear_extension(self, order):
        order = list(order)
        if sorted(order) != sorted(self._elements):
            return False
        position = {name: i for i, name in enumerate(order)}
        return all(position[x] <= position[y] for x, y in self.pairs())

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self._elements) == set(other._elements) and set(self.pairs()) == set(other.pairs())

    def __hash__(self):
        return hash(frozenset(self.pairs()))

    def __repr__(self):
        return 'Poset({} elements)'.format(len(self._elements))


def rect_name(i, j):
    return '{},{}'.format(i, j)


def chain_name(k):
    return 'c{}'.format(k)


def _rectangle_covers(u):
    covers = []
    for i in (1, 2):
        for j in range(1, u):
            covers.append((rect_name(i, j), rect_name(i, j + 1)))
    for j in range(1, u + 1):
        covers.append((rect_name(1, j), rect_name(2, j)))
    return covers


def rectangle_elements(u):
    return [rect_name(i, j) for i in (1, 2) for j in range(1, u + 1)]


def rectangle_poset(u):
    """The grid {1,2} x {1..u} with the componentwise order."""
    util.require_at_least('u', u)
    return Poset.from_covers(rectangle_elements(u), _rectangle_covers(u))


def extension_poset(u, v, variant):
    """The rectangle with a chain c1 < ... < cv glued at one corner."""
    util.require_at_least('u', u)
    util.require_at_least('v', v)
    variant = ExtensionVariant.parse(variant)
    chain = [chain_name(k) for k in range(1, v + 1)]
    covers = _rectangle_covers(u) + list(zip(chain, chain[1:]))
    if variant is ExtensionVariant.LOWER_OUT:
        covers.append((rect_name(2, u), chain[0]))
    elif variant is ExtensionVariant.UPPER_OUT:
        covers.append((rect_name(1, u), chain[0]))
    elif variant is ExtensionVariant.LOWER_IN:
        covers.append((chain[-1], rect_name(2, 1)))
    else:
        covers.append((chain[-1], rect_name(1, 1)))
    return Poset.from_covers(rectangle_elements(u) + chain, covers)


def incidence_cartan(poset, order=None):
    """Cartan matrix of the incidence algebra: entry (x, y) is 1 iff x <= y."""
    if order is None:
        order = poset.linear_extension()
    order = list(order)
    if not poset.is_linear_extension(order):
        raise errors.NotLinearExtension('{} is not a linear extension'.format(order))
    return IntMatrix([[int(poset.leq(x, y)) for y in order] for x in order])


def nakayama_cartan(n, r):
    """Cartan matrix of the linear Nakayama algebra N(n, r): c_ab = 1 iff a <= b < a + r."""
    util.require_at_least('n', n, 2)
    util.require_at_least('r', r, 2)
    if r > n:
        raise errors.InvalidParameter('r must be <= n, got n={} r={}'.format(n, r))
    return IntMatrix([[int(a <= b < a + r) for b in range(1, n + 1)] for a in range(1, n + 1)])


def is_downward_closed(poset, subset):
    subset = set(subset)
    for y in subset:
        if y not in poset:
            raise errors.UnknownElement(y)
    return not downward_closure_gaps(poset, subset)


def downward_closure_gaps(poset, subset):
    """Elements below some member of subset that are missing from it."""
    subset = set(subset)
    return {x for x in poset.elements for y in subset if poset.leq(x, y) and x not in subset}


def parse_poset(text):
    """Parses the line format: ``elem NAME``, ``A < B`` and ``#`` comments."""
    elements = []
    seen = set()
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.startswith('elem ') or line.startswith('elem\t'):
            name = line[4:].strip()
            if not name or len(name.split()) != 1:
                raise errors.PosetFormatError('bad element declaration', lineno)
            if name in seen:
                raise errors.PosetFormatError('duplicate element {}'.format(name), lineno)
            seen.add(name)
            elements.append(name)
        elif '<' in line:
            parts = [p.strip() for p in line.split('<')]
            if len(parts) != 2 or not all(parts):
                raise errors.PosetFormatError('bad relation {!r}'.format(line), lineno)
            for name in parts:
                if name not in seen:
                    raise errors.PosetFormatError('undeclared element {}'.format(name), lineno)
            if parts[0] == parts[1]:
                raise errors.PosetFormatError('cycle at {}'.format(parts[0]), lineno)
            covers.append((parts[0], parts[1]))
        else:
            raise errors.PosetFormatError('cannot parse {!r}'.format(line), lineno)
    log.debug('parsed poset with %d elements and %d relations', len(elements), len(covers))
    return Poset.from_covers(elements, covers)


def load_poset(path):
    with open(path, encoding='utf-8') as handle:
        try:
            text = handle.read()
        except UnicodeDecodeError as e:
            raise errors.PosetFormatError('{} is not valid UTF-8: {}'.format(path, e.reason))
    return parse_poset(text)


def format_poset(poset):
    lines = ['elem {}'.format(name) for name in poset.elements]
    lines.extend('{} < {}'.format(x, y) for x, y in poset.covers())
    return '\n'.join(lines) + '\n'
