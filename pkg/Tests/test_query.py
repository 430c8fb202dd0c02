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

import unittest, argparse

import numpy
import scipy.sparse

from alstop.core.errors import RunConfigError, RunError
from alstop.learners import LearnerSpec, fit
from alstop.query import QueryConfig, rank_batch, ranked_selection, cosine_similarity, rbf_similarity, median_bandwidth


def oracle_selection(u, cand_sim, lab_sim, batch_size):
    """
    Greedy picks recomputed from scratch at every step by looking at every remaining candidate.
    """
    n = len(u)
    n_known = lab_sim.shape[1]
    picks = []
    for _ in range(min(batch_size, n)):
        remaining = [x for x in range(n) if x not in picks]
        alpha = len(remaining) / float(len(remaining) + n_known + len(picks))
        best, best_score = None, None
        for x in remaining:
            sims = [lab_sim[x, j] for j in range(n_known)] + [cand_sim[x, p] for p in picks]
            maxsim = max(sims) if sims else 0.0
            score = alpha * (1.0 - maxsim) + (1.0 - alpha) * u[x]
            if best_score is None or score > best_score:
                best, best_score = x, score
        picks.append(best)
    return picks


def random_problem(rng, n, n_known):
    X = rng.normal(size=(n + n_known, 3))
    sim = rbf_similarity(X, X, median_bandwidth(X))
    return rng.uniform(size=n), sim[:n, :n], sim[:n, n:]


def constant_model(n_features=2):
    return fit(LearnerSpec.create('linear'), numpy.zeros((3, n_features)), [0, 0, 0], classes=[0, 1])


class TestRankedSelection(unittest.TestCase):

    def test_hand_example(self):
        u = numpy.array([0.9, 0.85, 0.1, 0.5])
        cand_sim = numpy.array([[1.0, 0.95, 0.1, 0.2],
                                [0.95, 1.0, 0.1, 0.2],
                                [0.1, 0.1, 1.0, 0.3],
                                [0.2, 0.2, 0.3, 1.0]])
        lab_sim = numpy.array([[0.2], [0.2], [0.1], [0.9]])
        picks = ranked_selection(u, cand_sim, lab_sim, 3)
        self.assertEqual(picks, oracle_selection(u, cand_sim, lab_sim, 3))
        # the near-duplicate of the first pick loses to a dissimilar, less uncertain instance
        self.assertEqual(picks[0], 0)
        self.assertEqual(picks[1], 2)

    def test_matches_oracle_on_random_problems(self):
        rng = numpy.random.default_rng(17)
        for case in range(30):
            n, n_known = int(rng.integers(1, 12)), int(rng.integers(0, 6))
            u, cand_sim, lab_sim = random_problem(rng, n, n_known)
            k = int(rng.integers(1, 8))
            self.assertEqual(ranked_selection(u, cand_sim, lab_sim, k), oracle_selection(u, cand_sim, lab_sim, k),
                             msg="case " + str(case))

    def test_distinct_and_capped(self):
        rng = numpy.random.default_rng(3)
        u, cand_sim, lab_sim = random_problem(rng, 5, 2)
        picks = ranked_selection(u, cand_sim, lab_sim, 10)
        self.assertEqual(sorted(picks), [0, 1, 2, 3, 4])

    def test_zero_alpha_is_uncertainty_order(self):
        u = numpy.array([0.2, 0.7, 0.5, 0.7])
        picks = ranked_selection(u, numpy.eye(4), numpy.zeros((4, 0)), 4, alpha=0.0)
        self.assertEqual(picks, [1, 3, 2, 0])

    def test_permutation_equivariance(self):
        rng = numpy.random.default_rng(5)
        u, cand_sim, lab_sim = random_problem(rng, 8, 3)
        perm = rng.permutation(8)
        picks = ranked_selection(u, cand_sim, lab_sim, 4)
        permuted = ranked_selection(u[perm], cand_sim[perm][:, perm], lab_sim[perm], 4)
        self.assertEqual([int(perm[p]) for p in permuted], picks)


class TestRankBatch(unittest.TestCase):

    def test_identical_rows_pick_in_index_order(self):
        picks = rank_batch(constant_model(), numpy.ones((3, 2)), None, QueryConfig.create(batch_size=3))
        self.assertEqual(picks.tolist(), [0, 1, 2])
        mapped = rank_batch(constant_model(), numpy.ones((3, 2)), numpy.ones((2, 2)), QueryConfig.create(batch_size=3),
                            candidate_index=[7, 8, 9])
        self.assertEqual(mapped.tolist(), [7, 8, 9])

    def test_sparse_candidates_use_cosine(self):
        C = scipy.sparse.csr_matrix(numpy.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
        L = scipy.sparse.csr_matrix(numpy.array([[1.0, 0.0]]))
        picks = rank_batch(constant_model(), C, L, QueryConfig.create(batch_size=1))
        self.assertEqual(picks.tolist(), [2])

    def test_empty_candidates(self):
        with self.assertRaises(RunError):
            rank_batch(constant_model(), numpy.zeros((0, 2)), None, QueryConfig.create())

    def test_bad_config(self):
        with self.assertRaises(RunConfigError):
            QueryConfig.create(similarity='manhattan')
        with self.assertRaises(RunConfigError):
            QueryConfig.create(batch_size=0)


class TestSimilarity(unittest.TestCase):

    def test_cosine_zero_rows(self):
        S = cosine_similarity(numpy.array([[0.0, 0.0], [2.0, 0.0], [-1.0, 0.0]]), numpy.array([[1.0, 0.0]]))
        self.assertEqual(S.ravel().tolist(), [0.0, 1.0, 0.0])

    def test_rbf(self):
        S = rbf_similarity(numpy.array([[0.0], [1.0]]), numpy.array([[0.0]]), 1.0)
        self.assertAlmostEqual(S[0, 0], 1.0)
        self.assertAlmostEqual(S[1, 0], numpy.exp(-0.5))

    def test_median_bandwidth(self):
        self.assertAlmostEqual(median_bandwidth(numpy.array([[0.0], [1.0], [3.0]])), 2.0)
        self.assertEqual(median_bandwidth(numpy.ones((4, 2))), 1.0)


#############################################################################


if __name__ == '__main__':

    ap = argparse.ArgumentParser(description="Query strategy tests")
    args, leftovers = ap.parse_known_args()

    suite = unittest.TestLoader().loadTestsFromTestCase(TestRankedSelection)
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestRankBatch))
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestSimilarity))
    unittest.TextTestRunner(verbosity=2).run(suite)
