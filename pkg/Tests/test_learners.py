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
from unittest import mock

import numpy
import scipy.sparse

from alstop.core.errors import RunConfigError, LearnerError
from alstop.harness.loaders import generate_synthetic
from alstop.learners import LearnerSpec, fit, posterior, predict, confidence, model_to_json, model_from_json
from alstop.learners import mlp, scaling


def blobs(n_classes=3, seed=1):
    ds = generate_synthetic(n_classes=n_classes, per_class=200, separation=8.0, seed=seed)
    half = ds.n_rows // 2
    return ds.features[:half], ds.labels[:half], ds.features[half:], ds.labels[half:]


class TestLearnerSpec(unittest.TestCase):

    def test_defaults_filled(self):
        spec = LearnerSpec.create('forest', seed=3)
        self.assertEqual(spec['trees'], 100)
        self.assertEqual(spec.seed, 3)

    def test_override_and_coerce(self):
        spec = LearnerSpec.create('mlp', hyperparameters={'hidden': '8'}, epochs=5)
        self.assertEqual(spec['hidden'], 8)
        self.assertEqual(spec['epochs'], 5)

    def test_unknown_kind_and_parameter(self):
        with self.assertRaises(RunConfigError):
            LearnerSpec.create('svm')
        with self.assertRaises(RunConfigError):
            LearnerSpec.create('linear', depth=3)
        with self.assertRaises(RunConfigError):
            LearnerSpec.create('linear', loss='hinge')


class TestLearners(unittest.TestCase):

    def check_accuracy(self, kind, minimum, **hyper):
        X, y, Xt, yt = blobs()
        model = fit(LearnerSpec.create(kind, seed=5, **hyper), X, y)
        accuracy = numpy.mean(predict(model, Xt) == yt)
        self.assertGreaterEqual(accuracy, minimum, msg=kind + " accuracy " + str(accuracy))

    def test_linear_accuracy(self):
        self.check_accuracy('linear', 0.95)

    def test_linear_squared_hinge_accuracy(self):
        self.check_accuracy('linear', 0.95, loss='squared_hinge')

    def test_forest_accuracy(self):
        self.check_accuracy('forest', 0.95, trees=20)

    def test_mlp_accuracy(self):
        self.check_accuracy('mlp', 0.9, hidden=16)

    def test_posterior_contract(self):
        X, y, Xt, _ = blobs()
        for kind in ('linear', 'forest', 'mlp'):
            hyper = {'forest': {'trees': 10}, 'mlp': {'epochs': 20}}.get(kind, {})
            model = fit(LearnerSpec.create(kind, hyperparameters=hyper), X, y)
            P = posterior(model, Xt[:25])
            self.assertEqual(P.shape, (25, 3))
            self.assertTrue(numpy.all(P >= 0))
            self.assertTrue(numpy.allclose(P.sum(axis=1), 1.0))
            self.assertTrue(numpy.array_equal(predict(model, Xt[:25]), numpy.argmax(P, axis=1)))
            c = confidence(model, Xt[:25])
            self.assertTrue(numpy.all((c >= 0) & (c <= 1)))

    def test_single_class_gives_constant_model(self):
        model = fit(LearnerSpec.create('linear'), numpy.random.default_rng(0).normal(size=(5, 2)), [1] * 5, classes=[0, 1, 2])
        self.assertTrue(model.degenerate)
        self.assertEqual(predict(model, numpy.zeros((3, 2))).tolist(), [1, 1, 1])
        self.assertEqual(posterior(model, numpy.zeros((1, 2))).tolist(), [[0.0, 1.0, 0.0]])

    def test_classes_without_rows(self):
        X, y, Xt, _ = blobs(n_classes=2)
        model = fit(LearnerSpec.create('linear'), X, y, classes=[0, 1, 2])
        self.assertEqual(posterior(model, Xt[:4]).shape, (4, 3))

    def test_sparse_features(self):
        X, y, Xt, yt = blobs(n_classes=2)
        model = fit(LearnerSpec.create('linear'), scipy.sparse.csr_matrix(X), y)
        P = posterior(model, scipy.sparse.csr_matrix(Xt))
        self.assertTrue(numpy.allclose(P.sum(axis=1), 1.0))
        self.assertGreaterEqual(numpy.mean(predict(model, scipy.sparse.csr_matrix(Xt)) == yt), 0.9)

    def test_forest_on_sparse_features(self):
        X, y, Xt, _ = blobs()
        spec = LearnerSpec.create('forest', seed=4, trees=5)
        dense = posterior(fit(spec, X, y), Xt)
        model = fit(spec, scipy.sparse.csr_matrix(X), y)
        Xts = scipy.sparse.csr_matrix(Xt)
        # prediction walks the trees on CSR entries, the test rows are never expanded
        with mock.patch.object(scipy.sparse.csr_matrix, 'toarray', side_effect=AssertionError('densified')):
            sparse = posterior(model, Xts)
        self.assertTrue(numpy.array_equal(sparse, dense))

    def test_softmax_is_stable(self):
        P = scaling.softmax(numpy.array([[1000.0, 1000.0], [0.0, numpy.log(3.0)], [-800.0, 0.0]]))
        self.assertTrue(numpy.all(numpy.isfinite(P)))
        self.assertTrue(numpy.allclose(P, [[0.5, 0.5], [0.25, 0.75], [0.0, 1.0]]))

    def test_ties_go_to_lowest_class(self):
        model = fit(LearnerSpec.create('linear'), numpy.zeros((4, 1)), [0, 1, 0, 1])
        self.assertEqual(predict(model, numpy.zeros((2, 1))).tolist(), [0, 0])

    def test_seeded_training_is_deterministic(self):
        X, y, Xt, _ = blobs()
        spec = LearnerSpec.create('forest', seed=11, trees=10)
        self.assertTrue(numpy.array_equal(posterior(fit(spec, X, y), Xt), posterior(fit(spec, X, y), Xt)))

    def test_feature_count_checked(self):
        X, y, _, _ = blobs()
        model = fit(LearnerSpec.create('linear'), X, y)
        with self.assertRaises(LearnerError):
            posterior(model, numpy.zeros((2, 5)))

    def test_model_json(self):
        X, y, Xt, _ = blobs()
        model = fit(LearnerSpec.create('forest', trees=5), X, y)
        back = model_from_json(model_to_json(model))
        self.assertTrue(numpy.array_equal(posterior(back, Xt), posterior(model, Xt)))
        with self.assertRaises(LearnerError):
            model_from_json('{"format": "something else"}')


class TestMlpGradient(unittest.TestCase):

    def test_gradient_matches_finite_differences(self):
        rng = numpy.random.default_rng(42)
        h = 1e-6
        for case in range(20):
            n, d, hidden, n_classes = rng.integers(2, 8), rng.integers(1, 5), rng.integers(1, 6), rng.integers(2, 5)
            X = rng.normal(size=(n, d))
            y = rng.integers(0, n_classes, size=n)
            reg = float(rng.uniform(0, 0.1))
            weights = mlp.init_weights(d, hidden, n_classes, rng)
            weights['b1'] = rng.normal(size=hidden) * 0.1
            weights['b2'] = rng.normal(size=n_classes) * 0.1
            _, grads = mlp.loss_and_gradient(weights, X, y, n_classes, reg)
            for name in mlp.WEIGHT_NAMES:
                numeric = numpy.zeros_like(weights[name])
                for idx in numpy.ndindex(weights[name].shape):
                    plus = dict((k, v.copy()) for k, v in weights.items())
                    minus = dict((k, v.copy()) for k, v in weights.items())
                    plus[name][idx] += h
                    minus[name][idx] -= h
                    numeric[idx] = (mlp.loss_and_gradient(plus, X, y, n_classes, reg)[0] -
                                    mlp.loss_and_gradient(minus, X, y, n_classes, reg)[0]) / (2 * h)
                scale = numpy.linalg.norm(numeric) + numpy.linalg.norm(grads[name])
                self.assertLess(numpy.linalg.norm(numeric - grads[name]), 1e-4 * scale + 1e-7, msg="case %d, %s" % (case, name))


#############################################################################


if __name__ == '__main__':

    ap = argparse.ArgumentParser(description="Learner tests")
    args, leftovers = ap.parse_known_args()

    suite = unittest.TestLoader().loadTestsFromTestCase(TestLearnerSpec)
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestLearners))
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestMlpGradient))
    unittest.TextTestRunner(verbosity=2).run(suite)
