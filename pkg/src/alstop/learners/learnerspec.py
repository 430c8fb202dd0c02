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
Learner specifications: which classifier to train, its seed and its hyperparameters.

Every hyperparameter has a default. The built-in defaults below are overridden by the [learners]
section of the alstop configuration (keys are prefixed by the learner kind, e.g. forest_trees=100),
which in turn is overridden by whatever is given explicitly to LearnerSpec.create.
"""
from alstop.config import config
from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import RunConfigError

LEARNER_KINDS = ('linear', 'forest', 'mlp')

LEARNER_DEFAULTS = {
    'linear': {'loss': 'logistic', 'regularization': 0.01, 'iterations': 300},
    'forest': {'trees': 100, 'min_samples_split': 2, 'max_depth': 0},
    'mlp': {'hidden': 64, 'epochs': 200, 'learning_rate': 0.01, 'regularization': 0.0001},
}

# What each learner can offer the stopping criteria. All learners give class posteriors; only the
# linear learner has a separating hyperplane (which the SSNCut criterion is defined for).
LEARNER_CAPABILITIES = {
    'linear': ('probabilistic', 'margin'),
    'forest': ('probabilistic',),
    'mlp': ('probabilistic',),
}

LINEAR_LOSSES = ('logistic', 'squared_hinge')


def learner_defaults(kind):
    if kind not in LEARNER_DEFAULTS:
        raise RunConfigError("alstop.learners.learner_defaults: unknown learner kind " + repr(kind) + ", expected one of " + ", ".join(LEARNER_KINDS))
    defaults = {}
    for key, val in LEARNER_DEFAULTS[kind].items():
        try:
            defaults[key] = config.get_typed('learners', kind + '_' + key, val)
        except ValueError:
            raise RunConfigError("alstop.learners.learner_defaults: bad value for [learners] " + kind + '_' + key)
    return defaults


def has_capability(kind, capability):
    return capability in LEARNER_CAPABILITIES.get(kind, ())


class LearnerSpec(AlstopObject):

    """
    A learner kind (linear, forest or mlp), the seed its training randomness derives from, and the
    full set of hyperparameters (defaults filled in).
    """

    @alstop_typed_init({'kind': str, 'seed': int, 'hyperparameters': dict})
    def __init__(self, kind, seed, hyperparameters):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.kind = kind
        self.seed = seed
        self.hyperparameters = hyperparameters

    @classmethod
    def create(cls, kind, seed=0, hyperparameters=None, **kargs):
        """
        Create a LearnerSpec.

        Hyperparameters may be given either as a dict or as keyword arguments; unknown names and
        values of the wrong type raise RunConfigError.
        """
        hyper = learner_defaults(kind)
        given = dict(hyperparameters or {})
        given.update(kargs)
        for key, val in given.items():
            if key not in hyper:
                raise RunConfigError("alstop.learners.LearnerSpec.create: unknown hyperparameter " + repr(key) + " for learner " + kind)
            try:
                hyper[key] = type(LEARNER_DEFAULTS[kind][key])(val)
            except (TypeError, ValueError):
                raise RunConfigError("alstop.learners.LearnerSpec.create: bad value " + repr(val) + " for hyperparameter " + key)
        _check_hyperparameters(kind, hyper)
        return cls(kind, int(seed), hyper)

    @property
    def name(self):
        return self.kind

    def with_seed(self, seed):
        return LearnerSpec.create(self.kind, seed, self.hyperparameters)

    def __getitem__(self, key):
        return self.hyperparameters[key]


def _check_hyperparameters(kind, hyper):
    where = "alstop.learners.LearnerSpec.create"
    if kind == 'linear':
        if hyper['loss'] not in LINEAR_LOSSES:
            raise RunConfigError(where + ": linear loss must be one of " + ", ".join(LINEAR_LOSSES))
        if hyper['regularization'] <= 0 or hyper['iterations'] < 1:
            raise RunConfigError(where + ": linear regularization must be > 0 and iterations >= 1")
    elif kind == 'forest':
        if hyper['trees'] < 1 or hyper['min_samples_split'] < 2 or hyper['max_depth'] < 0:
            raise RunConfigError(where + ": forest needs trees >= 1, min_samples_split >= 2, max_depth >= 0 (0 = unlimited)")
    elif kind == 'mlp':
        if hyper['hidden'] < 1 or hyper['epochs'] < 1 or hyper['learning_rate'] <= 0 or hyper['regularization'] < 0:
            raise RunConfigError(where + ": mlp needs hidden >= 1, epochs >= 1, learning_rate > 0, regularization >= 0")
