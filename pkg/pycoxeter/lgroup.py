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

"""Arithmetic in the rank one abelian group L(p1, p2, p3).

The group is generated by x1, x2, x3 subject to p1·x1 = p2·x2 = p3·x3 = c.
Every element has a unique normal form n1·x1 + n2·x2 + n3·x3 + m·c with
0 <= n_i < p_i, and elements are only ever stored in that form.
"""

import dataclasses

from pycoxeter import errors, util
from pycoxeter.meta import VERSION

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

TARGETS = ('zero', 'x1', 'x2', 'x3')


@dataclasses.dataclass(frozen=True)
class WeightTriple(object):
    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        for name in ('p1', 'p2', 'p3'):
            util.require_at_least(name, getattr(self, name), 2)

    @classmethod
    def for_rectangle(cls, u):
        """Weight type (2, 3, u+1) attached to the 2 x u rectangle."""
        util.require_at_least('u', u)
        return cls(2, 3, u + 1)

    def as_tuple(self):
        return (self.p1, self.p2, self.p3)


@dataclasses.dataclass(frozen=True)
class LElement(object):
    n1: int
    n2: int
    n3: int
    m: int

    def as_tuple(self):
        return (self.n1, self.n2, self.n3, self.m)

    def __str__(self):
        return '{}x1 + {}x2 + {}x3 + {}c'.format(*self.as_tuple())


def normalize(p, raw):
    """Reduces n_i modulo p_i and carries the quotients into the c-coefficient."""
    n1, n2, n3, m = raw
    q1, r1 = divmod(n1, p.p1)
    q2, r2 = divmod(n2, p.p2)
    q3, r3 = divmod(n3, p.p3)
    return LElement(r1, r2, r3, m + q1 + q2 + q3)


def zero():
    return LElement(0, 0, 0, 0)


def generator(p, name):
    """One of 'x1', 'x2', 'x3', 'c' or 'zero' in normal form."""
    raw = {
        'zero': (0, 0, 0, 0),
        'x1': (1, 0, 0, 0),
        'x2': (0, 1, 0, 0),
        'x3': (0, 0, 1, 0),
        'c': (0, 0, 0, 1),
    }
    try:
        return normalize(p, raw[name])
    except KeyError:
        raise errors.InvalidParameter('unknown generator {!r}'.format(name))


def add(p, a, b):
    return normalize(p, tuple(x + y for x, y in zip(a.as_tuple(), b.as_tuple())))


def neg(p, a):
    return normalize(p, tuple(-x for x in a.as_tuple()))


def multiple(p, k, a):
    return normalize(p, tuple(k * x for x in a.as_tuple()))


def canonical_omega(p):
    """The dualizing element c - x1 - x2 - x3."""
    return normalize(p, (-1, -1, -1, 1))


def _as_x1_multiple(element):
    """Returns a with element = a·x1 in L(2, 3, p3), or None if there is none."""
    if element.n2 or element.n3:
        return None
    return element.n1 + 2 * element.m


def solve_shift_equation(u, target):
    """All (a, b) with 1 <= b <= 2u+1 and a·x1 - b·ω = target in L(2, 3, u+1)."""
    if target not in TARGETS:
        raise errors.InvalidParameter('unknown target {!r}'.format(target))
    p = WeightTriple.for_rectangle(u)
    omega = canonical_omega(p)
    goal = generator(p, target)
    solutions = []
    for b in range(1, 2 * u + 2):
        a = _as_x1_multiple(add(p, multiple(p, b, omega), goal))
        if a is not None:
            solutions.append((a, b))
    return solutions


def shift_equation_prediction(u, target):
    """The solution set in closed form, one candidate per target and divisibility class."""
    util.require_at_least('u', u)
    if target == 'zero':
        return [((u - 5) // 3, u + 1)] if (u + 1) % 3 == 0 else []
    if target == 'x1':
        return [((u - 2) // 3, u + 1)] if (u + 1) % 3 == 0 else []
    if target == 'x2':
        return [((u - 3) // 3, u + 1)] if u % 3 == 0 else []
    if target == 'x3':
        return [((u - 4) // 3, u + 2)] if (u + 2) % 3 == 0 else []
    raise errors.InvalidParameter('unknown target {!r}'.format(target))


def auslander_euler(u, j):
    """Euler form <S^j E, E> of an Auslander bundle over weight type (2, 3, u+1).

    Only shifts l·x1 - j·ω landing in {0, x1+ω, x2+ω, x3+ω} contribute, each
    with sign (-1)^l.
    """
    util.require_at_least('u', u)
    if not 1 <= j <= 2 * u + 1:
        raise errors.RangeError('j must lie in 1..{}, got {}'.format(2 * u + 1, j))
    p = WeightTriple.for_rectangle(u)
    omega = canonical_omega(p)
    shifted = multiple(p, j, omega)
    total = 0
    for target in (zero(), *(add(p, generator(p, x), omega) for x in ('x1', 'x2', 'x3'))):
        l = _as_x1_multiple(add(p, shifted, target))
        if l is not None:
            total += util.minus_one_power(l)
    return total


def tau_euler_closed_form(u, j):
    """Closed-form values of <τ^j M, M> on the rectangle, stated for 1 <= j <= 2u."""
    util.require_at_least('u', u)
    if not 1 <= j <= 2 * u:
        raise errors.RangeError('j must lie in 1..{}, got {}'.format(2 * u, j))
    if u % 3 == 0:
        return util.minus_one_power((u - 3) // 3) if j == u else 0
    if u % 3 == 1:
        return util.minus_one_power((u - 4) // 3) if j == u + 1 else 0
    if j == u:
        return util.minus_one_power((u - 2) // 3)
    if j == u + 1:
        return util.minus_one_power((u - 5) // 3)
    return 0
