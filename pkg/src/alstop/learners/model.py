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

"""
Trained models and the classifier contract the rest of alstop relies on:

  - posterior(model, X): one row of class probabilities per instance, columns in model.classes order
  - predict(model, X): argmax of the posterior, ties going to the lowest class id
  - confidence(model, X): the learner's own confidence estimate in [0,1]
"""
import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.console import logger
from alstop.core.errors import LearnerError
from alstop.learners.learnerspec import LearnerSpec
from alstop.learners.scaling import to_float_matrix
from alstop.learners import linear, forest, mlp

_backends = {'linear': linear, 'forest': forest, 'mlp': mlp}


class TrainedModel(AlstopObject):

    @alstop_typed_init({'spec': LearnerSpec, 'classes': [int], 'n_features': int, 'degenerate': bool, 'params': dict})
    def __init__(self, spec, classes, n_features, degenerate, params):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.spec = spec
        self.classes = classes
        self.n_features = n_features
        self.degenerate = degenerate
        self.params = params

    @classmethod
    def create(cls, spec, classes, n_features, params, degenerate=False):
        classes = [int(c) for c in classes]
        if sorted(set(classes)) != classes:
            raise LearnerError("alstop.learners.TrainedModel.create: classes must be sorted and distinct")
        params = dict((k, numpy.asarray(v)) for k, v in params.items())
        for v in params.values():
            v.setflags(write=False)
        return cls(spec, classes, int(n_features), bool(degenerate), params)

    @property
    def kind(self):
        return self.spec.kind

    @property
    def n_classes(self):
        return len(self.classes)


def fit(spec, features, labels, classes=None):
    """
    Train a model of the kind described by *spec* on the given rows.

    Args:
      features: 2d numpy array or scipy sparse matrix
      labels: class id per row
      classes: all class ids the posterior should cover (defaults to the distinct labels). Classes
        without training rows are allowed and simply never score high.

    When only one class is present in *labels*, a degenerate constant model predicting that class
    is returned (model.degenerate is True).
    """
    X = to_float_matrix(features)
    labels = numpy.asarray(labels).reshape(-1).astype(numpy.int64)
    if X.shape[0] == 0 or len(labels) == 0:
        raise LearnerError("alstop.learners.fit: cannot train on zero instances")
    if X.shape[0] != len(labels):
        raise LearnerError("alstop.learners.fit: " + str(X.shape[0]) + " feature rows but " + str(len(labels)) + " labels")
    if classes is None:
        classes = numpy.unique(labels).tolist()
    classes = sorted(int(c) for c in classes)
    lookup = dict((c, i) for i, c in enumerate(classes))
    try:
        y = numpy.array([lookup[int(c)] for c in labels], dtype=numpy.int64)
    except KeyError as e:
        raise LearnerError("alstop.learners.fit: label " + str(e) + " is not among the model classes")

    present = numpy.unique(y)
    if len(present) < 2:
        constant = numpy.zeros(len(classes))
        constant[present[0]] = 1.0
        logger("alstop.learners.fit:", spec.kind, "got a single class, returning a constant model", loglevel=2)
        return TrainedModel.create(spec, classes, X.shape[1], {'constant': constant}, degenerate=True)

    try:
        params = _backends[spec.kind].train(X, y, len(classes), spec.hyperparameters, spec.seed)
    except (FloatingPointError, ValueError, MemoryError, numpy.linalg.LinAlgError) as e:
        raise LearnerError("alstop.learners.fit: training " + spec.kind + " failed: " + str(e))
    logger("alstop.learners.fit:", spec.kind, "trained on", X.shape[0], "rows", loglevel=2)
    return TrainedModel.create(spec, classes, X.shape[1], params)


def _check_features(model, features, where):
    X = to_float_matrix(features)
    if X.shape[1] != model.n_features:
        raise LearnerError(where + ": model expects " + str(model.n_features) + " features, got " + str(X.shape[1]))
    return X


def posterior(model, features):
    X = _check_features(model, features, "alstop.learners.posterior")
    if model.degenerate:
        return numpy.tile(model.params['constant'], (X.shape[0], 1))
    if X.shape[0] == 0:
        return numpy.zeros((0, model.n_classes))
    P = numpy.clip(_backends[model.kind].posterior(model.params, X), 0.0, None)
    return P / P.sum(axis=1, keepdims=True)


def argmax_positions(P):
    """
    Column of the largest entry per row; the first (lowest) column wins ties.
    """
    return numpy.argmax(P, axis=1)


def predict(model, features):
    P = posterior(model, features)
    return numpy.asarray(model.classes, dtype=numpy.int64)[argmax_positions(P)] if len(P) > 0 else numpy.zeros(0, dtype=numpy.int64)


def confidence(model, features):
    X = _check_features(model, features, "alstop.learners.confidence")
    if model.degenerate:
        return numpy.ones(X.shape[0])
    if X.shape[0] == 0:
        return numpy.zeros(0)
    return numpy.clip(_backends[model.kind].confidence(model.params, X), 0.0, 1.0)
