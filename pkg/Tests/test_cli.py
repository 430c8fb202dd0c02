#!/usr/bin/env python
#
#    The active-learning stopping toolkit (alstop)
#    Copyright (C) 2026 The alstop developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Affero General Public License as
#    published by the Free Software Foundation, either version 3 of the
#    License, or (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Affero General Public License for more details.
#
#    You should have received a copy of the GNU Affero General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.

import os, sys, unittest, subprocess, argparse, tempfile

from alstop.cli import parse_args
from alstop.core.errors import UsageError

top = os.path.dirname(os.path.abspath(os.path.dirname(__file__)))
alstop_src_dir = os.path.join(top, 'src')


def run(*args):
    env = dict(os.environ)
    env['PYTHONPATH'] = alstop_src_dir + os.pathsep + env.get('PYTHONPATH', '')
    popen = subprocess.Popen([sys.executable, '-m', 'alstop'] + list(args), stdout=subprocess.PIPE,
                             stderr=subprocess.PIPE, env=env, universal_newlines=True)
    out, err = popen.communicate()
    return popen.returncode, out, err


class TestCommandLine(unittest.TestCase):

    def test_cost_of_one_outcome(self):
        code, out, err = run('--scenario', 'mammogram', '--accuracy', '0.9', '--labels', '1000', 'cost')
        self.assertEqual(code, 0, msg=err)
        self.assertEqual(out.strip(), "360944800.00")
        code, out, err = run('cost', '--scenario', 'marketing', '--accuracy', '0.8', '--labels', '300')
        self.assertEqual(code, 0, msg=err)
        self.assertEqual(out.strip(), "8300.00")

    def test_cost_with_explicit_parameters(self):
        code, out, err = run('cost', '--label-cost', '2', '--misclass-cost', '5', '--lifetime', '100',
                             '--accuracy', '0.5', '--labels', '10')
        self.assertEqual(code, 0, msg=err)
        self.assertEqual(out.strip(), "270.00")

    def test_usage_errors(self):
        code, out, err = run('cost', '--frobnicate')
        self.assertEqual(code, 1)
        self.assertIn('unknown option', err)
        code, out, err = run('frobnicate')
        self.assertEqual(code, 1)
        code, out, err = run('cost', '--accuracy', '0.5', '--labels', '10')
        self.assertEqual(code, 1)

    def test_evaluate_without_traces(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, out, err = run('evaluate', tmp)
        self.assertEqual(code, 2)
        self.assertIn('no trace files', err)

    def test_version_and_help(self):
        code, out, err = run('--version')
        self.assertEqual(code, 0, msg=err)
        self.assertTrue(out.startswith('alstop v'))
        code, out, err = run('experiment', 'cost', 'help')
        self.assertEqual(code, 0, msg=err)
        self.assertIn('mammogram', out)


class TestParseArgs(unittest.TestCase):

    def test_options(self):
        args = parse_args(['evaluate', 'out', '--criteria', 'vm, evm', '--workers', '2', '-v', '-v', '--no-figures'])
        self.assertEqual(args.commands, ['evaluate', 'out'])
        self.assertEqual(args.criteria, ['vm', 'evm'])
        self.assertEqual(args.workers, 2)
        self.assertEqual(args.verbosity, 2)
        self.assertFalse(args.figures)
        self.assertFalse(hasattr(args, 'scenario'))

    def test_help_goes_last(self):
        self.assertEqual(parse_args(['--help', 'run']).commands, ['run', 'help'])
        self.assertEqual(parse_args([]).commands, ['help'])
        self.assertEqual(parse_args(['--', '-x']).commands, ['-x'])

    def test_bad_options(self):
        for argv in (['--workers', '0'], ['--accuracy', 'high'], ['--labels'], ['-c', 'novalue'], ['--bogus']):
            with self.assertRaises(UsageError, msg=str(argv)):
                parse_args(argv)


#############################################################################


if __name__ == '__main__':

    ap = argparse.ArgumentParser(description="Command line tests")
    args, leftovers = ap.parse_known_args()

    suite = unittest.TestLoader().loadTestsFromTestCase(TestCommandLine)
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestParseArgs))
    unittest.TextTestRunner(verbosity=2).run(suite)
