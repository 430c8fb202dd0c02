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

import io, csv, json, unittest, argparse

import numpy
from hypothesis import given, settings
from hypothesis.strategies import floats, integers

from alstop.core.errors import CostError
from alstop.core.ioadapters import IoAdapterString
from alstop.cost import (CostParams, cost, scenario, RunOutcome, CriterionOutcome, apply_treatment, worst_values,
                         outcomes_from_rows, region_map, scenario_rank, cost_matrix, log_axis, INDETERMINATE,
                         pareto_frontier, pareto_mask, ranking_to_csv, ranking_to_json, region_grid_to_csv)


def outcome(criterion, pairs, dataset='d', stopped=None):
    """
    A CriterionOutcome with one run per (accuracy, labels) pair, split ids 0, 1, ...
    """
    if stopped is None:
        stopped = [True] * len(pairs)
    return CriterionOutcome.create(criterion, [RunOutcome.create(dataset, i, s, a, j) for i, ((a, j), s) in enumerate(zip(pairs, stopped))])


def dominated_oracle(points, i):
    j, a = points[i]
    return any((q[0] <= j and q[1] >= a) and (q[0] < j or q[1] > a) for k, q in enumerate(points) if k != i)


class TestCostModel(unittest.TestCase):

    def test_perfect_accuracy_is_label_cost(self):
        self.assertAlmostEqual(cost(1.0, 500, CostParams.create(13.60, 5.0, 7.0)), 6800.0, places=6)

    def test_mammogram(self):
        self.assertAlmostEqual(cost(0.9, 1000, scenario('mammogram')), 360944800.0, places=2)

    def test_scenarios(self):
        m = scenario('mammogram')
        self.assertEqual((m.label_cost, m.misclassification_cost, m.lifetime_predictions), (13.60, 10742.0, 336000.0))
        k = scenario('marketing')
        self.assertEqual((k.label_cost, k.misclassification_cost, k.lifetime_predictions), (1.0, 20.0, 2000.0))
        self.assertEqual(k.nm, 40000.0)
        with self.assertRaises(CostError):
            scenario('lottery')

    def test_errors(self):
        params = scenario('marketing')
        for a, j in ((1.1, 10), (-0.1, 10), (0.5, -1)):
            with self.assertRaises(CostError):
                cost(a, j, params)
        with self.assertRaises(CostError):
            CostParams.create(-1.0, 1.0, 1.0)
        with self.assertRaises(CostError):
            CostParams.create(1.0, float('inf'), 1.0)

    @given(floats(0.0, 1.0), floats(0.0, 1.0), integers(0, 10000), floats(0.0, 100.0), floats(0.0, 1000.0), floats(0.0, 1e5))
    @settings(max_examples=200, deadline=None)
    def test_nonincreasing_in_accuracy(self, a1, a2, j, l, m, n):
        params = CostParams.create(l, m, n)
        lo, hi = min(a1, a2), max(a1, a2)
        self.assertGreaterEqual(cost(lo, j, params), cost(hi, j, params) - 1e-9 * max(1.0, cost(lo, j, params)))

    def test_linear_in_parameters(self):
        base = cost(0.7, 300, CostParams.create(2.0, 3.0, 1000.0))
        self.assertAlmostEqual(cost(0.7, 300, CostParams.create(2.0, 3.0, 1000.0).scaled(4.0)), 4.0 * base)
        self.assertAlmostEqual(cost(0.7, 300, CostParams.create(2.0, 3.0, 2000.0)) - base, 0.3 * 3.0 * 1000.0)

    def test_cost_oracle(self):
        rng = numpy.random.default_rng(31)
        for _ in range(1000):
            a, j = float(rng.uniform()), int(rng.integers(0, 5000))
            l, m, n = rng.uniform(0, 50), rng.uniform(0, 1e4), rng.uniform(0, 1e6)
            expected = (1 - a) * m * n + j * l
            self.assertAlmostEqual(cost(a, j, CostParams.create(l, m, n)), expected, delta=1e-9 * max(1.0, expected))


class TestPareto(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(pareto_frontier([(100, 0.9)]), [(100, 0.9)])
        self.assertEqual(pareto_frontier([(100, 0.9), (200, 0.8)]), [(100, 0.9)])
        self.assertEqual(pareto_frontier([(100, 0.8), (200, 0.9)]), [(100, 0.8), (200, 0.9)])
        self.assertEqual(pareto_frontier([(100, 0.9), (100, 0.9)]), [(100, 0.9), (100, 0.9)])
        self.assertEqual(pareto_frontier([]), [])

    def test_brute_force(self):
        rng = numpy.random.default_rng(6)
        for _ in range(20):
            points = [(int(j), round(float(a), 2)) for j, a in zip(rng.integers(10, 60, size=50), rng.uniform(size=50))]
            mask = pareto_mask([p[0] for p in points], [p[1] for p in points])
            self.assertEqual(mask.tolist(), [not dominated_oracle(points, i) for i in range(len(points))])
            frontier = pareto_frontier(points)
            for i in range(len(frontier)):
                self.assertFalse(dominated_oracle(frontier, i))


class TestTreatments(unittest.TestCase):

    def outcomes(self):
        return [outcome('A', [(0.9, 100), (0.8, 120), (0.85, 110)]),
                outcome('B', [(0.95, 150), (0.7, 300), (0.9, 140)], stopped=[True, False, True]),
                outcome('C', [(0.6, 300), (0.65, 280), (0.6, 290)], stopped=[False] * 3)]

    def test_worst_values(self):
        self.assertEqual(worst_values(self.outcomes()), {'d': (0.6, 300)})

    def test_penalize(self):
        treated = dict((o.criterion, o) for o in apply_treatment(self.outcomes(), 'penalize'))
        self.assertEqual(len(treated), 3)
        penalized = treated['B'].runs[1]
        self.assertEqual((penalized.accuracy, penalized.labels, penalized.stopped), (0.6, 300, False))
        self.assertEqual(treated['A'], self.outcomes()[0])

    def test_include(self):
        treated = dict((o.criterion, o) for o in apply_treatment(self.outcomes(), 'include'))
        self.assertEqual(sorted(treated), ['A', 'B'])
        self.assertEqual([r.split for r in treated['B'].runs], [0, 2])

    def test_exclude(self):
        treated = apply_treatment(self.outcomes(), 'exclude')
        self.assertEqual([o.criterion for o in treated], ['A'])

    def test_all_stopped_is_untouched(self):
        outcomes = self.outcomes()[:1]
        for treatment in ('penalize', 'include', 'exclude'):
            self.assertEqual(apply_treatment(outcomes, treatment), outcomes)
        with self.assertRaises(CostError):
            apply_treatment(outcomes, 'ignore')

    def test_penalize_never_helps(self):
        rng = numpy.random.default_rng(12)
        for _ in range(50):
            outcomes = []
            for c in range(4):
                pairs = [(float(rng.uniform()), int(rng.integers(10, 500))) for _ in range(6)]
                outcomes.append(outcome('c' + str(c), pairs, stopped=(rng.uniform(size=6) < 0.7).tolist()))
            for before, after in zip(outcomes, apply_treatment(outcomes, 'penalize')):
                self.assertLessEqual(after.mean_accuracy, before.mean_accuracy + 1e-12)
                self.assertGreaterEqual(after.mean_labels, before.mean_labels - 1e-12)

    def test_duplicate_runs(self):
        with self.assertRaises(CostError):
            CriterionOutcome.create('A', [RunOutcome.create('d', 0, True, 0.9, 10), RunOutcome.create('d', 0, True, 0.8, 10)])

    def test_outcomes_from_rows(self):
        rows = [{'criterion': 'mes', 'dataset': 'd', 'model': 'linear', 'seed': 1, 'stopped': True, 'accuracy': 0.9, 'labels_used': 50},
                {'criterion': 'mes', 'dataset': 'd', 'model': 'forest', 'seed': 1, 'stopped': False, 'accuracy': 0.8, 'labels_used': 90},
                {'criterion': 'ssncut', 'dataset': 'd', 'model': 'forest', 'seed': 1, 'skipped': True, 'stopped': False, 'accuracy': 0.0, 'labels_used': 0}]
        outcomes = outcomes_from_rows(rows)
        self.assertEqual([o.criterion for o in outcomes], ['mes'])
        self.assertEqual(len(outcomes[0].runs), 2)
        self.assertEqual(len(outcomes_from_rows(rows, model='linear')[0].runs), 1)


class TestRegions(unittest.TestCase):

    def two_criteria(self):
        accurate = outcome('accurate', [(0.9 + 0.002 * i, 100 + 2 * i) for i in range(30)])
        frugal = outcome('frugal', [(0.8 + 0.001 * i, 50 + i) for i in range(30)])
        return [accurate, frugal]

    def test_degenerate_axes(self):
        grid = region_map(self.two_criteria(), nm_axis=[0.0, 1000.0], l_axis=[0.0, 1.0], significance_alpha=0.05)
        self.assertEqual(grid.shape, (2, 2))
        # l = 0: accuracy alone decides
        self.assertEqual(grid.best[0][1], 'accurate')
        self.assertEqual(grid.cells[0][1], 'accurate')
        # nm = 0: labels alone decide
        self.assertEqual(grid.best[1][0], 'frugal')
        self.assertEqual(grid.cells[1][0], 'frugal')
        # nothing to pay for at all
        self.assertEqual(grid.cells[0][0], INDETERMINATE)
        self.assertEqual(grid.winners(), ['accurate', 'frugal'])
        self.assertEqual(len(grid.to_rows()), 4)

    def test_identical_criteria_are_indeterminate(self):
        pairs = [(0.8 + 0.005 * i, 100 + i) for i in range(10)]
        grid = region_map([outcome('a', pairs), outcome('b', pairs)], nm_axis=log_axis(1.0, 4, 5), l_axis=log_axis(0.01, 4, 5))
        self.assertTrue(all(c == INDETERMINATE for row in grid.cells for c in row))
        self.assertTrue(all(p is None for row in grid.p_values for p in row))

    def test_small_differences_are_indeterminate(self):
        a = outcome('a', [(0.80, 100), (0.90, 100), (0.85, 100)])
        b = outcome('b', [(0.85, 100), (0.86, 100), (0.83, 100)])
        grid = region_map([a, b], nm_axis=[1000.0], l_axis=[1.0])
        self.assertEqual(grid.best[0][0], 'a')
        self.assertEqual(grid.cells[0][0], INDETERMINATE)

    def test_errors(self):
        with self.assertRaises(CostError):
            region_map(self.two_criteria(), nm_axis=[], l_axis=[1.0])
        with self.assertRaises(CostError):
            region_map(self.two_criteria(), nm_axis=[-1.0], l_axis=[1.0])
        with self.assertRaises(CostError):
            region_map(self.two_criteria()[:1], nm_axis=[1.0], l_axis=[1.0])
        with self.assertRaises(CostError):
            log_axis(0.0, 3, 10)

    def test_log_axis(self):
        axis = log_axis(0.001, 6, 7)
        self.assertEqual(len(axis), 7)
        self.assertAlmostEqual(axis[0], 0.001)
        self.assertAlmostEqual(axis[-1], 1000.0)


class TestScenarioRank(unittest.TestCase):

    def outcomes(self):
        return [outcome('A', [(0.9, 100), (0.8, 200)]), outcome('B', [(0.95, 2400), (0.85, 2600)])]

    def test_marketing_by_hand(self):
        ranking = scenario_rank(self.outcomes(), scenario('marketing'))
        self.assertEqual([r['criterion'] for r in ranking], ['A', 'B'])
        self.assertEqual([r['rank'] for r in ranking], [1, 2])
        self.assertAlmostEqual(ranking[0]['mean_cost'], 0.15 * 40000 + 150)
        self.assertAlmostEqual(ranking[1]['mean_cost'], 0.1 * 40000 + 2500)
        self.assertAlmostEqual(ranking[1]['mean_accuracy'], 0.9)
        self.assertEqual(ranking[0]['stops'], 2)

    def test_free_labels_rank_by_accuracy(self):
        free = CostParams.create(0.0, 20.0, 2000.0)
        self.assertEqual([r['criterion'] for r in scenario_rank(self.outcomes(), free)], ['B', 'A'])

    def test_scaling_keeps_order(self):
        params = scenario('marketing')
        order = [r['criterion'] for r in scenario_rank(self.outcomes(), params)]
        self.assertEqual([r['criterion'] for r in scenario_rank(self.outcomes(), params.scaled(7.5))], order)

    def test_ties_go_to_fewer_labels(self):
        outcomes = [outcome('many', [(1.0, 20)]), outcome('few', [(1.0, 10)])]
        free = CostParams.create(0.0, 1.0, 1.0)
        self.assertEqual([r['criterion'] for r in scenario_rank(outcomes, free)], ['few', 'many'])

    def test_single_criterion(self):
        ranking = scenario_rank(self.outcomes()[:1], scenario('mammogram'))
        self.assertEqual(len(ranking), 1)
        self.assertEqual(ranking[0]['rank'], 1)

    def test_cost_matrix(self):
        outcomes = self.outcomes() + [outcome('C', [(0.5, 10)])]
        matrix = cost_matrix(outcomes, scenario('marketing'))
        self.assertEqual(matrix.shape, (1, 3))
        self.assertEqual(matrix.problems, ['d/0'])
        self.assertAlmostEqual(matrix.values[0][2], 0.5 * 40000 + 10)

    def test_exports(self):
        params = scenario('marketing')
        ranking = scenario_rank(self.outcomes(), params)
        ioa = IoAdapterString()
        ranking_to_csv(ranking, ioa)
        rows = list(csv.DictReader(io.StringIO(ioa.string)))
        self.assertEqual([r['criterion'] for r in rows], ['A', 'B'])
        self.assertAlmostEqual(float(rows[0]['mean_cost']), 6150.0)
        ioa = IoAdapterString()
        ranking_to_json(ranking, params, 'penalize', ioa)
        data = json.loads(ioa.string)
        self.assertEqual(data['treatment'], 'penalize')
        self.assertEqual(data['scenario']['label_cost'], 1.0)
        ioa = IoAdapterString()
        region_grid_to_csv(region_map(self.outcomes(), nm_axis=[1.0, 10.0], l_axis=[1.0]), ioa)
        self.assertEqual(len(list(csv.DictReader(io.StringIO(ioa.string)))), 2)


#############################################################################


if __name__ == '__main__':

    ap = argparse.ArgumentParser(description="Cost model tests")
    args, leftovers = ap.parse_known_args()

    suite = unittest.TestLoader().loadTestsFromTestCase(TestCostModel)
    for case in (TestPareto, TestTreatments, TestRegions, TestScenarioRank):
        suite.addTests(unittest.TestLoader().loadTestsFromTestCase(case))
    unittest.TextTestRunner(verbosity=2).run(suite)
