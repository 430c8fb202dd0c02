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

import math, itertools, unittest, argparse, warnings

import numpy
import scipy.stats

from alstop.core.errors import StatsError, UndefinedCorrelation
from alstop.stats import cohen_kappa, pearson, RankMatrix, friedman, nemenyi_cd, cd_groups, cd_diagram_data


def kappa_oracle(p, q):
    n = len(p)
    labels = sorted(set(p) | set(q))
    p_o = sum(1 for a, b in zip(p, q) if a == b) / float(n)
    p_e = sum((list(p).count(c) / float(n)) * (list(q).count(c) / float(n)) for c in labels)
    if p_e == 1.0:
        return 1.0
    return (p_o - p_e) / (1.0 - p_e)


def pearson_oracle(x, y):
    n = len(x)
    mx, my = sum(x) / n, sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx)**2 for a in x)
    syy = sum((b - my)**2 for b in y)
    return sxy / math.sqrt(sxx * syy)


class TestAgreement(unittest.TestCase):

    def test_kappa_examples(self):
        self.assertEqual(cohen_kappa([1, 0, 1], [1, 0, 1]), 1.0)
        self.assertAlmostEqual(cohen_kappa([1, 1, 0, 0], [1, 0, 0, 0]), 0.5)
        self.assertAlmostEqual(cohen_kappa([0, 0, 1, 1], [0, 1, 0, 1]), 0.0)
        self.assertEqual(cohen_kappa([2, 2, 2], [2, 2, 2]), 1.0)

    def test_kappa_degenerate_marginals(self):
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            self.assertEqual(cohen_kappa([0], [0]), 1.0)
            self.assertEqual(cohen_kappa(['b', 'b', 'b'], ['b', 'b', 'b']), 1.0)
            self.assertAlmostEqual(cohen_kappa([1, 1], [0, 0]), 0.0)
            self.assertAlmostEqual(cohen_kappa(['a', 'b', 'a', 'b'], ['a', 'b', 'b', 'b']), 0.5)
            self.assertFalse(math.isnan(cohen_kappa([3, 3, 3, 3], [3, 3, 3, 0])))

    def test_kappa_errors(self):
        with self.assertRaises(StatsError):
            cohen_kappa([0, 1], [0])
        with self.assertRaises(StatsError):
            cohen_kappa([], [])

    def test_kappa_oracle(self):
        rng = numpy.random.default_rng(21)
        for _ in range(1000):
            n = int(rng.integers(1, 30))
            c = int(rng.integers(1, 4))
            p = rng.integers(0, c, size=n).tolist()
            q = rng.integers(0, c, size=n).tolist()
            self.assertAlmostEqual(cohen_kappa(p, q), kappa_oracle(p, q), delta=1e-9)

    def test_pearson_examples(self):
        x = numpy.arange(6, dtype=float)
        self.assertAlmostEqual(pearson(x, 2 * x + 3), 1.0)
        self.assertAlmostEqual(pearson(x, -x), -1.0)
        self.assertAlmostEqual(pearson([1, 2, 3], [1, 3, 2]), 0.5)
        with self.assertRaises(UndefinedCorrelation):
            pearson([1, 1, 1], [1, 2, 3])
        with self.assertRaises(StatsError):
            pearson([1.0], [2.0])

    def test_pearson_oracle(self):
        rng = numpy.random.default_rng(22)
        for _ in range(1000):
            n = int(rng.integers(2, 20))
            x = rng.normal(size=n).tolist()
            y = rng.normal(size=n).tolist()
            self.assertAlmostEqual(pearson(x, y), pearson_oracle(x, y), delta=1e-9)


class TestRanking(unittest.TestCase):

    def test_average_ranks_for_ties(self):
        matrix = RankMatrix.create([[1.0, 1.0, 3.0], [2.0, 1.0, 1.0]])
        self.assertEqual(matrix.ranks.tolist(), [[1.5, 1.5, 3.0], [3.0, 1.5, 1.5]])

    def test_bad_matrix(self):
        with self.assertRaises(StatsError):
            RankMatrix.create([[1.0, float('nan')], [1.0, 2.0]])
        with self.assertRaises(StatsError):
            RankMatrix.create([[1.0, 2.0]], criteria=['a'])
        with self.assertRaises(StatsError):
            friedman(RankMatrix.create([[1.0, 2.0]]))

    def test_friedman_one_always_best(self):
        matrix = RankMatrix.create([[1.0, 2.0]] * 10)
        stat, p = friedman(matrix)
        self.assertAlmostEqual(stat, 10.0)
        self.assertLess(p, 0.01)

    def test_friedman_all_tied(self):
        stat, p = friedman(RankMatrix.create([[3.0, 3.0, 3.0]] * 5))
        self.assertEqual(stat, 0.0)
        self.assertAlmostEqual(p, 1.0)

    def test_friedman_matches_scipy(self):
        rng = numpy.random.default_rng(8)
        for _ in range(20):
            n, k = int(rng.integers(3, 12)), int(rng.integers(3, 7))
            values = rng.normal(size=(n, k))
            stat, p = friedman(RankMatrix.create(values))
            ref = scipy.stats.friedmanchisquare(*values.T)
            self.assertAlmostEqual(stat, ref.statistic, places=9)
            self.assertAlmostEqual(p, ref.pvalue, places=9)

    def test_friedman_rank_sum_formula(self):
        rng = numpy.random.default_rng(3)
        values = rng.normal(size=(5, 4))
        n, k = values.shape
        rank_sums = [0.0] * k
        for row in values:
            order = sorted(range(k), key=lambda j: row[j])
            for position, j in enumerate(order):
                rank_sums[j] += position + 1
        expected = 12.0 / (n * k * (k + 1)) * sum(r * r for r in rank_sums) - 3.0 * n * (k + 1)
        self.assertAlmostEqual(friedman(RankMatrix.create(values))[0], expected, places=9)

    def test_nemenyi_cd(self):
        self.assertAlmostEqual(nemenyi_cd(2, 1), 1.959964233 * math.sqrt(1.0), places=9)
        self.assertAlmostEqual(nemenyi_cd(4, 10), 2.569032073 * math.sqrt(20.0 / 60.0), places=9)
        self.assertAlmostEqual(nemenyi_cd(4, 10), 1.4832, places=3)
        self.assertAlmostEqual(nemenyi_cd(6, 40), nemenyi_cd(6, 10) / 2.0, places=12)
        self.assertAlmostEqual(nemenyi_cd(10, 270), 3.16368342 * math.sqrt(110.0 / 1620.0), places=9)
        for bad in ((1, 10, 0.05), (21, 10, 0.05), (4, 10, 0.1)):
            with self.assertRaises(StatsError):
                nemenyi_cd(*bad)

    def test_cd_groups_against_pair_scan(self):
        rng = numpy.random.default_rng(13)
        for _ in range(200):
            ranks = sorted(rng.uniform(1, 5, size=int(rng.integers(2, 8))).tolist())
            cd = float(rng.uniform(0.1, 2.0))
            groups = cd_groups(ranks, cd)
            # every group is a run of mutually indistinguishable criteria that cannot be extended
            for a, b in groups:
                self.assertLess(ranks[b] - ranks[a], cd)
                if b + 1 < len(ranks):
                    self.assertGreaterEqual(ranks[b + 1] - ranks[a], cd)
            # every indistinguishable pair shares a group
            for i, j in itertools.combinations(range(len(ranks)), 2):
                if ranks[j] - ranks[i] < cd:
                    self.assertTrue(any(a <= i and j <= b for a, b in groups))

    def test_cd_diagram_two_far_apart(self):
        data = cd_diagram_data(RankMatrix.create([[1.0, 2.0]] * 30, criteria=['good', 'bad']))
        self.assertEqual(data['criteria'], ['good', 'bad'])
        self.assertEqual(data['mean_ranks'], [1.0, 2.0])
        self.assertEqual(data['groups'], [['good'], ['bad']])

    def test_cd_diagram_equal_ranks(self):
        values = [[1.0, 2.0, 3.0], [2.0, 3.0, 1.0], [3.0, 1.0, 2.0]] * 4
        data = cd_diagram_data(RankMatrix.create(values, criteria=['a', 'b', 'c']))
        self.assertEqual(data['groups'], [['a', 'b', 'c']])
        self.assertAlmostEqual(data['friedman_statistic'], 0.0)


#############################################################################


if __name__ == '__main__':

    ap = argparse.ArgumentParser(description="Statistics tests")
    args, leftovers = ap.parse_known_args()

    suite = unittest.TestLoader().loadTestsFromTestCase(TestAgreement)
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestRanking))
    unittest.TextTestRunner(verbosity=2).run(suite)
