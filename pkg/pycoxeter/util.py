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

"""Various utility functions."""

from pycoxeter import errors
from pycoxeter.meta import VERSION

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'


def is_string(string):
    """Checks if argument is a string."""
    return isinstance(string, str)


def minus_one_power(k):
    """Returns (-1)**k for an integer exponent of either sign."""
    return -1 if k % 2 else 1


def require_at_least(name, value, minimum=1):
    """Raises InvalidParameter unless value is an integer >= minimum."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise errors.InvalidParameter('{} must be an integer, got {!r}'.format(name, value))
    if value < minimum:
        raise errors.InvalidParameter('{} must be >= {}, got {}'.format(name, minimum, value))
    return value


def split_names(text):
    """Splits a comma separated list of names, dropping blanks."""
    if not text:
        return []
    return [part.strip() for part in text.split(',') if part.strip()]
