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

"""Tests the command line front end in process."""

__maintainer__ = 'The pycoxeter Authors'

import contextlib
import io
import json
import os
import tempfile
import unittest

from pycoxeter import cli
from tests import helper

POSET_TEXT = """\
# three element chain
elem a
elem b
elem c
a < b
b < c
"""


class TestCli(helper.CoxeterTestCase):
    """Runs main() with captured output."""

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli.main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def run_json(self, *argv):
        code, out, _ = self.run_cli(*argv)
        return code, json.loads(out)

    def test_cartan(self):
        code, payload = self.run_json('cartan', '--family', 'rect', '--u', '2')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['order'], ['1,1', '1,2', '2,1', '2,2'])
        self.assertEqual(payload['results']['matrix'][0], [1, 1, 1, 1])
        self.assertEqual(payload['results']['determinant'], 1)
        self.assertEqual(payload['status'], 'pass')
        self.assertEqual(payload['command'], ['cartan', '--family', 'rect', '--u', '2'])

    def test_cartan_reverse(self):
        code, payload = self.run_json('cartan', '--family', 'rect', '--u', '2', '--reverse')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['order'], ['1,1', '2,1', '1,2', '2,2'])

    def test_coxeter_both(self):
        code, payload = self.run_json('coxeter', '--family', 'rect', '--u', '2', '--method', 'both')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['coeffs'], [1, 1, 0, 1, 1])
        self.assertTrue(payload['results']['equal'])

    def test_coxeter_nakayama(self):
        code, payload = self.run_json('coxeter', '--family', 'nakayama', '--n', '3', '--r', '2')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['coeffs'], [1, 1, 1, 1])

    def test_coxeter_ext_formula(self):
        code, payload = self.run_json('coxeter', '--family', 'ext', '--u', '1', '--v', '2',
                                      '--variant', 'upper_in', '--method', 'both')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['coeffs'], [1, 1, 1, 1, 1])

    def test_invalid_parameters(self):
        code, out, err = self.run_cli('coxeter', '--family', 'rect', '--u', '0')
        self.assertEqual(code, 2)
        self.assertIn('error:', err)
        self.assertEqual(json.loads(out)['results']['type'], 'InvalidParameter')
        code, _, _ = self.run_cli('coxeter', '--family', 'rect')
        self.assertEqual(code, 2)
        code, _, _ = self.run_cli('coxeter', '--family', 'poset', '--method', 'formula',
                                  '--poset', 'missing.txt')
        self.assertEqual(code, 2)

    def test_usage_errors(self):
        code, _, _ = self.run_cli('verify', 'nonsense')
        self.assertEqual(code, 2)
        code, _, _ = self.run_cli('verify', 'happel', '--u-max', '0')
        self.assertEqual(code, 2)
        code, _, _ = self.run_cli()
        self.assertEqual(code, 2)

    def test_lgroup(self):
        code, payload = self.run_json('lgroup', 'solve', '--u', '5')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['solutions'], [[0, 6]])
        self.assertTrue(payload['results']['agree'])
        code, payload = self.run_json('lgroup', 'euler', '--u', '3', '--j', '3')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['value'], 1)
        self.assertEqual(payload['results']['closed_form'], 1)
        code, _, _ = self.run_cli('lgroup', 'euler', '--u', '3', '--j', '99')
        self.assertEqual(code, 2)
        code, _, _ = self.run_cli('lgroup', 'euler', '--u', '3')
        self.assertEqual(code, 2)

    def test_verify(self):
        code, payload = self.run_json('verify', 'tilting', '--u', '2', '--v', '2', '--which', 'post')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['instances'], 1)
        self.assertEqual(payload['results']['failures'], 0)
        self.assertTrue(payload['results']['records'][0]['ok'])
        code, payload = self.run_json('verify', 'rect-formula', '--u-max', '4')
        self.assertEqual(code, 0)
        self.assertEqual(payload['results']['instances'], 4)
        self.assertNotIn('records', payload['results'])

    def test_csv(self):
        code, out, _ = self.run_cli('verify', 'symmetry', '--r-max', '4', '--format', 'csv', '-v')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith('params.r,'))
        self.assertTrue(lines[0].endswith(',status'))
        self.assertEqual(len(lines), 4)
        self.assertTrue(all(line.endswith(',pass') for line in lines[1:]))

    def test_suite_aliases(self):
        cases = [
            ('lemma32', 'shift-equation', ['--u-max', '10']),
            ('lemma34-bridge', 'euler-bridge', ['--u-max', '3']),
            ('hom-lemmas', 'hom-words', ['--n-max', '4', '--instances', '5']),
        ]
        for alias, name, extra in cases:
            code, payload = self.run_json('verify', alias, *extra)
            self.assertEqual(code, 0, msg=alias)
            self.assertEqual(payload['results']['suite'], name)
            self.assertEqual(payload['results']['failures'], 0)

    def test_reports_are_reproducible(self):
        argv = ['verify', 'hom-words', '--n-max', '4', '--instances', '5', '--seed', '3', '-v']
        for fmt in ('json', 'csv'):
            _, first, _ = self.run_cli(*argv, '--format', fmt)
            _, second, _ = self.run_cli(*argv, '--format', fmt)
            self.assertTrue(first)
            self.assertEqual(first, second)

    def test_invalid_utf8_poset(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'bad.poset')
            with open(path, 'wb') as handle:
                handle.write(b'elem a\nelem \xff\xfe\na < b\n')
            code, out, err = self.run_cli('coxeter', '--family', 'poset', '--poset', path)
            self.assertEqual(code, 2)
            self.assertEqual(json.loads(out)['results']['type'], 'PosetFormatError')
            self.assertIn('UTF-8', err)
            code, _, _ = self.run_cli('flip', '--poset', path, '--closed', 'a')
            self.assertEqual(code, 2)

    def test_self_loop_poset(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'loop.poset')
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write('elem a\nelem b\na < a\na < b\n')
            code, _, _ = self.run_cli('cartan', '--family', 'poset', '--poset', path)
            self.assertEqual(code, 2)

    def test_hom(self):
        with tempfile.TemporaryDirectory() as tmp:
            source = os.path.join(tmp, 'x.cx')
            target = os.path.join(tmp, 'y.cx')
            with open(source, 'w', encoding='utf-8') as handle:
                handle.write('# S_3 of length 2\n@-1: 1\n@0: 3\n')
            with open(target, 'w', encoding='utf-8') as handle:
                handle.write('@-1: 2\n@0: 3\n')
            argv = ['hom', '--n', '3', '--r', '3', '--source', source, '--target', target]
            code, payload = self.run_json(*argv)
            self.assertEqual(code, 0)
            self.assertEqual(payload['results']['dim'], 1)
            self.assertEqual(payload['results']['source'], '[P1,P3]@(-1,0)')
            code, payload = self.run_json(*argv, '--k', '1')
            self.assertEqual(payload['results']['dim'], 0)
            code, payload = self.run_json('hom', '--n', '3', '--r', '3', '--source', target,
                                          '--target', source)
            self.assertEqual(payload['results']['dim'], 0)

            bad = os.path.join(tmp, 'bad.cx')
            with open(bad, 'wb') as handle:
                handle.write(b'@0: \xff\n')
            code, _, _ = self.run_cli('hom', '--n', '3', '--r', '3', '--source', bad, '--target', target)
            self.assertEqual(code, 2)
        code, _, _ = self.run_cli('hom', '--n', '3', '--r', '3', '--source', 'missing.cx',
                                  '--target', 'missing.cx')
        self.assertEqual(code, 2)

    def test_flip(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'chain.poset')
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(POSET_TEXT)
            code, payload = self.run_json('flip', '--poset', path, '--closed', 'a')
            self.assertEqual(code, 0)
            self.assertEqual(payload['results']['flip_cartan'], [[1, 0, 0], [1, 1, 1], [1, 0, 1]])
            self.assertEqual(payload['results']['flip_coxeter'], [1, 1, 1, 1])
            self.assertTrue(payload['results']['equal'])
            code, _, err = self.run_cli('flip', '--poset', path, '--closed', 'b')
            self.assertEqual(code, 2)
            self.assertIn('downward closed', err)
        code, _, _ = self.run_cli('flip', '--poset', os.path.join('no', 'such', 'file'), '--closed', 'a')
        self.assertEqual(code, 2)


def suite():
    """Returns a test suite object."""
    loader = unittest.TestLoader()
    suite_obj = unittest.TestSuite()
    suite_obj.addTest(loader.loadTestsFromTestCase(TestCli))
    return suite_obj


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
