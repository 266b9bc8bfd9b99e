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

"""Bounded complexes over the ladder of indecomposable projectives (or
injectives) of the Nakayama algebra N(n, r), and their Hom spaces in the
homotopy category.

Summands are stored by module index: P_a in the projective flavor, I_a in
the injective flavor. I_a sits at ladder position n+1-a, so in both flavors
Hom(a, b) is one dimensional exactly when a <= b < a + r, spanned by the
canonical map ξ_ab, and ξ_bc ξ_ab = ξ_ac whenever the latter is nonzero.
A differential is a rational matrix whose entry (s, t) scales ξ from source
summand t to target summand s.
"""

import collections
import dataclasses
import functools
import logging
from fractions import Fraction

from pycoxeter import errors, util
from pycoxeter.matrix import RatMatrix, rat_solve_dim
from pycoxeter.meta import VERSION
from pycoxeter.poset import nakayama_cartan

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

log = logging.getLogger(__name__)

PROJECTIVE = 'projective'
INJECTIVE = 'injective'


@dataclasses.dataclass(frozen=True)
class LadderSpec(object):
    n: int
    r: int
    flavor: str = PROJECTIVE

    def __post_init__(self):
        util.require_at_least('n', self.n, 2)
        util.require_at_least('r', self.r, 2)
        if self.r > self.n:
            raise errors.InvalidParameter(
                'r must be <= n, got n={} r={}'.format(self.n, self.r))
        if self.flavor not in (PROJECTIVE, INJECTIVE):
            raise errors.InvalidParameter('unknown flavor {!r}'.format(self.flavor))

    @property
    def letter(self):
        return 'P' if self.flavor == PROJECTIVE else 'I'

    def check_index(self, a):
        if not 1 <= a <= self.n:
            raise errors.IndexOutOfRange(a, self.n)
        return a


def ladder_index(spec, a):
    """Ladder position of the summand with module index a."""
    spec.check_index(a)
    return a if spec.flavor == PROJECTIVE else spec.n + 1 - a


def ladder_hom_dim(spec, a, b):
    """Dimension (0 or 1) of Hom between ladder positions a and b."""
    spec.check_index(a)
    spec.check_index(b)
    if spec.flavor == PROJECTIVE:
        return int(a <= b < a + spec.r)
    return int(b <= a < b + spec.r)


def hom(spec, a, b):
    """Hom dimension between the summands with module indices a and b."""
    return ladder_hom_dim(spec, ladder_index(spec, a), ladder_index(spec, b))


def composes(spec, a, b, c):
    """True iff ξ_bc ξ_ab is the nonzero map ξ_ac."""
    return bool(hom(spec, a, b) and hom(spec, b, c) and hom(spec, a, c))


WordCheck = collections.namedtuple('WordCheck', ['valid', 'reason'])


def _word_items(word, start):
    if isinstance(word, dict):
        positions = sorted(word)
        if positions != list(range(positions[0], positions[0] + len(positions))):
            raise errors.ComplexFormatError('word positions must be consecutive')
        return positions[0], [word[p] for p in positions]
    return start, list(word)


def validate_word(spec, word, start=0):
    """Checks the indecomposable word shape a_(i-1) < a_i < a_(i-1) + r <= a_(i+1).

    word is either a list of module indices placed from position start, or a
    mapping from consecutive positions to indices.
    """
    if not word:
        raise errors.ComplexFormatError('empty word')
    start, indices = _word_items(word, start)
    for a in indices:
        if not 1 <= a <= spec.n:
            return WordCheck(False, 'index {} outside 1..{}'.format(a, spec.n))
    for a, b in zip(indices, indices[1:]):
        if a == b:
            return WordCheck(False, 'differential ξ_{{{0},{0}}} is an isomorphism'.format(a))
        if not hom(spec, a, b):
            return WordCheck(False, 'differential ξ_{{{},{}}} = 0'.format(a, b))
    for a, _, c in zip(indices, indices[1:], indices[2:]):
        if hom(spec, a, c):
            return WordCheck(False, 'composite ξ_{{{},{}}} ≠ 0'.format(a, c))
    return WordCheck(True, 'ok')


def _frozen_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


class LadderComplex(object):
    """Bounded complex of ladder summands with rational differentials."""

    __slots__ = ('_spec', '_degrees', '_diffs', '_key')

    def __init__(self, spec, degrees, differentials=None):
        degrees = {int(d): tuple(spec.check_index(a) for a in summands)
                   for d, summands in degrees.items() if summands}
        differentials = dict(differentials or {})
        diffs = {}
        for d in sorted(degrees):
            if d + 1 not in degrees:
                continue
            source, target = degrees[d], degrees[d + 1]
            if d in differentials:
                matrix = _frozen_matrix(differentials.pop(d))
                if len(matrix) != len(target) or any(len(row) != len(source) for row in matrix):
                    raise errors.ComplexFormatError(
                        'differential at degree {} must be {}x{}'.format(d, len(target), len(source)))
            elif len(source) == 1 and len(target) == 1:
                matrix = ((Fraction(hom(spec, source[0], target[0])),),)
            else:
                raise errors.ComplexFormatError(
                    'differential at degree {} is ambiguous and must be given'.format(d))
            for s, b in enumerate(target):
                for t, a in enumerate(source):
                    if matrix[s][t] and not hom(spec, a, b):
                        raise errors.ComplexFormatError(
                            'nonzero coefficient on vanishing Hom({}, {})'.format(a, b))
            diffs[d] = matrix
        if any(any(any(row) for row in m) for m in differentials.values()):
            raise errors.ComplexFormatError(
                'differentials given for empty degrees {}'.format(sorted(differentials)))
        object.__setattr__(self, '_spec', spec)
        object.__setattr__(self, '_degrees', degrees)
        object.__setattr__(self, '_diffs', diffs)
        object.__setattr__(self, '_key', (
            spec, tuple(sorted(degrees.items())), tuple(sorted(diffs.items()))))
        self._check_square_zero()

    def __setattr__(self, name, value):
        raise AttributeError('LadderComplex is immutable')

    @classmethod
    def word(cls, spec, indices, start=0):
        """The complex a_0 -> a_1 -> ... placed from degree start, canonical differentials."""
        return cls(spec, {start + i: (a,) for i, a in enumerate(indices)})

    @classmethod
    def stalk(cls, spec, a, degree=0):
        return cls(spec, {degree: (a,)})

    def _check_square_zero(self):
        spec = self._spec
        for d in self._diffs:
            if d + 1 not in self._diffs:
                continue
            first, second = self._diffs[d], self._diffs[d + 1]
            src, mid, dst = self._degrees[d], self._degrees[d + 1], self._degrees[d + 2]
            for s, c in enumerate(dst):
                for t, a in enumerate(src):
                    total = sum(second[s][k] * first[k][t]
                                for k, b in enumerate(mid) if composes(spec, a, b, c))
                    if total:
                        raise errors.ComplexFormatError(
                            'differentials at degrees {} and {} do not compose to zero'.format(d, d + 1))

    @property
    def spec(self):
        return self._spec

    def summands(self, d):
        return self._degrees.get(d, ())

    def differential(self, d):
        """Matrix of the map from degree d to degree d+1 (rows target, columns source)."""
        if d in self._diffs:
            return self._diffs[d]
        return tuple(tuple(Fraction(0) for _ in self.summands(d)) for _ in self.summands(d + 1))

    def degrees(self):
        return sorted(self._degrees)

    def support(self):
        ds = self.degrees()
        return (ds[0], ds[-1]) if ds else (0, -1)

    def span(self):
        lo, hi = self.support()
        return max(hi - lo, 0)

    def is_zero(self):
        return not self._degrees

    def indices(self):
        """Module indices of a single-summand-per-degree complex, lowest degree first."""
        return [self._degrees[d][0] for d in self.degrees()]

    def shift(self, k):
        """X[k] with X[k]^i = X^(i+k) and differential (-1)^k d."""
        sign = util.minus_one_power(k)
        degrees = {d - k: summands for d, summands in self._degrees.items()}
        diffs = {d - k: [[sign * x for x in row] for row in m] for d, m in self._diffs.items()}
        return LadderComplex(self._spec, degrees, diffs)

    def __eq__(self, other):
        if not isinstance(other, LadderComplex):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        letter = self._spec.letter
        ds = self.degrees()
        if all(len(self._degrees[d]) == 1 for d in ds):
            names = ','.join('{}{}'.format(letter, self._degrees[d][0]) for d in ds)
            return '[{}]@({})'.format(names, ','.join(str(d) for d in ds))
        parts = ['{}: {}'.format(d, ','.join('{}{}'.format(letter, a) for a in self._degrees[d]))
                 for d in ds]
        return '{{{}}}'.format('; '.join(parts))


def _graded_coords(x, y, offset):
    """Coordinates (i, s, t) of the graded maps X^i -> Y^(i+offset) with nonzero Hom."""
    spec = x.spec
    coords = []
    for i in x.degrees():
        for s, a in enumerate(x.summands(i)):
            for t, b in enumerate(y.summands(i + offset)):
                if hom(spec, a, b):
                    coords.append((i, s, t))
    return coords


@functools.lru_cache(maxsize=1 << 16)
def _hom_k_dim(x, y):
    spec = x.spec
    maps = _graded_coords(x, y, 0)
    if not maps:
        return 0
    position = {c: n for n, c in enumerate(maps)}

    # chain map condition d_Y f^i = f^(i+1) d_X, one row per (i, s, t') with Hom(x_s, y_t') != 0
    constraints = []
    for i in x.degrees():
        dy, dx = y.differential(i), x.differential(i)
        for s, a in enumerate(x.summands(i)):
            for tp, c in enumerate(y.summands(i + 1)):
                if not hom(spec, a, c):
                    continue
                row = [Fraction(0)] * len(maps)
                for t, b in enumerate(y.summands(i)):
                    coord = (i, s, t)
                    if dy[tp][t] and coord in position and composes(spec, a, b, c):
                        row[position[coord]] += dy[tp][t]
                for sp, b in enumerate(x.summands(i + 1)):
                    coord = (i + 1, sp, tp)
                    if dx[sp][s] and coord in position and composes(spec, a, b, c):
                        row[position[coord]] -= dx[sp][s]
                if any(row):
                    constraints.append(row)
    _, cycles = rat_solve_dim(RatMatrix(constraints, len(maps)))

    # null-homotopic maps d_Y h^i + h^(i+1) d_X
    homotopies = _graded_coords(x, y, -1)
    if not homotopies:
        return cycles
    columns = []
    for (i, s, t0) in homotopies:
        column = [Fraction(0)] * len(maps)
        a = x.summands(i)[s]
        b = y.summands(i - 1)[t0]
        # d_Y^(i-1) h^i lands in coordinates (i, s, t)
        dy = y.differential(i - 1)
        for t, c in enumerate(y.summands(i)):
            coord = (i, s, t)
            if dy[t][t0] and coord in position and composes(spec, a, b, c):
                column[position[coord]] += dy[t][t0]
        # h^i d_X^(i-1) lands in coordinates (i-1, s', t0)
        dx = x.differential(i - 1)
        for sp, a0 in enumerate(x.summands(i - 1)):
            coord = (i - 1, sp, t0)
            if dx[s][sp] and coord in position and composes(spec, a0, a, b):
                column[position[coord]] += dx[s][sp]
        columns.append(column)
    rows = [[columns[h][f] for h in range(len(columns))] for f in range(len(maps))]
    boundaries, _ = rat_solve_dim(RatMatrix(rows, len(columns)))
    return cycles - boundaries


def complex_hom_k_dim(x, y, k=0):
    """dim Hom_K(X, Y[k]): chain maps modulo null-homotopic maps."""
    if x.spec != y.spec:
        raise errors.SpecMismatch(x.spec, y.spec)
    return _hom_k_dim(x, y.shift(k))


def projective_resolution(spec, a, j):
    """Minimal projective resolution of S_a^(j), the module of length j with top S_a.

    Placed in degrees <= 0. P_b has length min(b, r); each syzygy of a
    non-projective S_b^(k) is S_(b-k)^(min(b,r)-k).
    """
    if spec.flavor != PROJECTIVE:
        raise errors.InvalidParameter('projective resolutions need the projective flavor')
    spec.check_index(a)
    if not 1 <= j <= min(a, spec.r):
        raise errors.InvalidParameter(
            'length must lie in 1..{}, got {}'.format(min(a, spec.r), j))
    top, length = a, j
    word = [a]
    seen = {(top, length)}
    while length < min(top, spec.r):
        top, length = top - length, min(top, spec.r) - length
        if (top, length) in seen:
            raise errors.NonTerminating(top, length)
        seen.add((top, length))
        word.insert(0, top)
        log.debug('syzygy S_%d^(%d)', top, length)
    return LadderComplex.word(spec, word, start=1 - len(word))


def injective_coresolution(spec, a, j):
    """Minimal injective coresolution of the module of length j with socle S_a.

    Placed in degrees >= 0. I_b has length min(r, n-b+1).
    """
    if spec.flavor != INJECTIVE:
        raise errors.InvalidParameter('injective coresolutions need the injective flavor')
    spec.check_index(a)

    def length_of(b):
        return min(spec.r, spec.n - b + 1)

    if not 1 <= j <= length_of(a):
        raise errors.InvalidParameter(
            'length must lie in 1..{}, got {}'.format(length_of(a), j))
    socle, length = a, j
    word = [a]
    seen = {(socle, length)}
    while length < length_of(socle):
        socle, length = socle + length, length_of(socle) - length
        if (socle, length) in seen:
            raise errors.NonTerminating(socle, length)
        seen.add((socle, length))
        word.append(socle)
        log.debug('cosyzygy with socle S_%d, length %d', socle, length)
    return LadderComplex.word(spec, word, start=0)


def summand_class(spec, a):
    """Class of P_a (column a of the Cartan matrix) or I_a (row a) in the simple basis."""
    cartan = nakayama_cartan(spec.n, spec.r)
    spec.check_index(a)
    if spec.flavor == PROJECTIVE:
        return cartan.column(a - 1)
    return cartan.row(a - 1)


def k0_class(x):
    """Alternating sum of the classes of the summands."""
    total = [0] * x.spec.n
    for d in x.degrees():
        sign = util.minus_one_power(d)
        for a in x.summands(d):
            for i, v in enumerate(summand_class(x.spec, a)):
                total[i] += sign * v
    return total


def _parse_fraction(token):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise errors.ComplexFormatError('bad coefficient {!r}'.format(token))


def parse_complex(text, spec):
    """Parses ``@d: a1,a2`` summand lines and ``d[d]: r11 r12; r21 r22`` differential lines."""
    degrees = {}
    diffs = {}
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(':')
        if not sep:
            raise errors.ComplexFormatError('cannot parse {!r}'.format(line))
        head = head.strip()
        try:
            if head.startswith('@'):
                degree = int(head[1:])
                degrees[degree] = [int(tok) for tok in body.replace(',', ' ').split()]
            elif head.startswith('d[') and head.endswith(']'):
                degree = int(head[2:-1])
                diffs[degree] = [[_parse_fraction(tok) for tok in row.replace(',', ' ').split()]
                                 for row in body.split(';') if row.strip()]
            else:
                raise errors.ComplexFormatError('cannot parse {!r}'.format(line))
        except ValueError:
            raise errors.ComplexFormatError('bad degree or index in {!r}'.format(line))
    if not degrees:
        raise errors.ComplexFormatError('complex has no summands')
    return LadderComplex(spec, degrees, diffs)


def load_complex(path, spec):
    with open(path, encoding='utf-8') as handle:
        try:
            text = handle.read()
        except UnicodeDecodeError as e:
            raise errors.ComplexFormatError('{} is not valid UTF-8: {}'.format(path, e.reason))
    return parse_complex(text, spec)
