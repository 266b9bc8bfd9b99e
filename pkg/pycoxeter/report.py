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

"""Report shaping: plain-data conversion, JSON and CSV output."""

import csv
import dataclasses
import io
import json
from fractions import Fraction

from pycoxeter.matrix import IntMatrix, RatMatrix
from pycoxeter.meta import VERSION
from pycoxeter.polynomial import PolyZ

__maintainer__ = 'The pycoxeter Authors'
__version__ = VERSION
__status__ = 'development'

PASS = 'pass'
FAIL = 'fail'
ERROR = 'error'


@dataclasses.dataclass
class Report(object):
    command: list
    parameters: dict
    results: dict
    status: str = PASS

    @property
    def exit_code(self):
        return {PASS: 0, FAIL: 1}.get(self.status, 2)


def to_plain(obj):
    """Recursively converts results into JSON-compatible values.

    Polynomials become ascending coefficient lists, matrices become row lists
    and rationals become 'p/q' strings.
    """
    if isinstance(obj, PolyZ):
        return obj.coeffs
    if isinstance(obj, IntMatrix):
        return obj.rows
    if isinstance(obj, RatMatrix):
        return [[to_plain(x) for x in row] for row in obj.entries]
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if hasattr(obj, 'as_dict'):
        return to_plain(obj.as_dict())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_plain(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(x) for x in obj]
    return obj


def to_json(report):
    payload = {
        'command': list(report.command),
        'parameters': to_plain(report.parameters),
        'results': to_plain(report.results),
        'status': report.status,
    }
    return json.dumps(payload, indent=2, ensure_ascii=False)


def flatten(data, prefix=''):
    """Flattens nested dicts into dotted keys; lists stay whole."""
    row = {}
    for key, value in data.items():
        name = '{}.{}'.format(prefix, key) if prefix else key
        if isinstance(value, dict):
            row.update(flatten(value, name))
        else:
            row[name] = value
    return row


def _cell(value):
    if isinstance(value, list):
        return json.dumps(value, ensure_ascii=False)
    if value is None:
        return ''
    return value


def to_csv(report):
    """One row per sweep record, or a single row for scalar results."""
    results = to_plain(report.results)
    records = results.get('records') if isinstance(results, dict) else None
    if records is None:
        records = [results]
    rows = [flatten(r) for r in records]
    columns = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(columns + ['status'])
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns] + [report.status])
    return out.getvalue()


def render(report, fmt='json'):
    return to_csv(report) if fmt == 'csv' else to_json(report) + '\n'
