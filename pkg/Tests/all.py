#!/usr/bin/env python
import unittest, argparse

import test_imports
import test_data
import test_learners
import test_query
import test_criteria
import test_stats
import test_cost
import test_harness
import test_cli

ap = argparse.ArgumentParser(description="Run all tests")
ap.add_argument("--debug", help = 'Debug output', action='store_true')
args, leftovers = ap.parse_known_args()

if args.debug:
    from alstop.core.console import set_verbosity
    set_verbosity(2)

suite = unittest.TestSuite()

for module in (test_imports, test_data, test_learners, test_query, test_criteria, test_stats, test_cost,
               test_harness, test_cli):
    suite.addTests(unittest.TestLoader().loadTestsFromModule(module))

unittest.TextTestRunner(verbosity=2).run(suite)
