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
The stopping criteria evaluated by alstop, each a metric paired with a condition.

Default hyperparameters come from the [criteria] section of the alstop configuration. The catalogue
can be exported as JSON (criterion id, metric, condition with its parameters, and the learner
capabilities the criterion requires).
"""
import json

from alstop.config import config
from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import CriterionError
from alstop.criteria.conditions import ConditionSpec, Threshold, ConsecutiveChange, WindowGradient, PatienceMinimum, condition_from_dict
from alstop.learners.learnerspec import LEARNER_CAPABILITIES

CRITERION_IDS = ('max_confidence', 'entropy_mcs', 'mes', 'oracle_acc_mcs', 'classification_change',
                 'overall_uncertainty', 'performance_convergence', 'uncertainty_convergence',
                 'contradictory_information', 'stabilizing_predictions', 'vm', 'evm', 'ssncut')

CRITERION_NAMES = {
    'max_confidence': 'Max confidence',
    'entropy_mcs': 'Entropy-MCS',
    'mes': 'MES',
    'oracle_acc_mcs': 'OracleAcc-MCS',
    'classification_change': 'Classification change',
    'overall_uncertainty': 'Overall uncertainty',
    'performance_convergence': 'Performance convergence',
    'uncertainty_convergence': 'Uncertainty convergence',
    'contradictory_information': 'Contradictory information',
    'stabilizing_predictions': 'Stabilizing predictions',
    'vm': 'VM',
    'evm': 'EVM',
    'ssncut': 'SSNCut',
}

_CRITERIA_DEFAULTS = {
    'max_confidence_threshold': 0.001,
    'entropy_mcs_threshold': 0.01,
    'mes_threshold': 0.01,
    'oracle_acc_threshold': 0.9,
    'overall_uncertainty_threshold': 0.01,
    'stabilizing_predictions_threshold': 0.99,
    'stabilizing_predictions_window': 3,
    'classification_change_threshold': 1.0,
    'performance_convergence_window': 10,
    'performance_convergence_epsilon': 5e-5,
    'uncertainty_convergence_window': 10,
    'uncertainty_convergence_epsilon': 5e-5,
    'contradictory_information_rounds': 3,
    'vm_rounds': 2,
    'evm_min_delta': 0.001,
    'ssncut_patience': 10,
}


def _default(key):
    return config.get_typed('criteria', key, _CRITERIA_DEFAULTS[key])


class CriterionSpec(AlstopObject):

    """
    A stopping criterion: which metric to compute per round, its parameters (e.g. the stabilizing
    predictions window), the condition over the metric history, and the learner capabilities it
    requires.
    """

    @alstop_typed_init({'id': str, 'metric': str, 'metric_params': dict, 'condition': ConditionSpec, 'requires': [str]})
    def __init__(self, id, metric, metric_params, condition, requires):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.id = id
        self.metric = metric
        self.metric_params = metric_params
        self.condition = condition
        self.requires = requires

    @classmethod
    def create(cls, id, metric, condition, metric_params=None, requires=None):
        if isinstance(condition, dict):
            condition = condition_from_dict(condition)
        metric_params = dict(metric_params or {})
        if 'window' in metric_params and int(metric_params['window']) < 2:
            raise CriterionError("alstop.criteria.CriterionSpec.create: agreement window must be >= 2")
        if requires is None:
            requires = ['probabilistic']
        return cls(str(id), str(metric), metric_params, condition, [str(r) for r in requires])

    @property
    def name(self):
        return CRITERION_NAMES.get(self.id, self.id)

    def applicable_to(self, learner_kind, n_classes):
        capabilities = LEARNER_CAPABILITIES.get(learner_kind, ())
        if any(r not in capabilities for r in self.requires if r != 'binary'):
            return False
        if 'binary' in self.requires and n_classes != 2:
            return False
        return True


def make_criterion(criterion_id, **overrides):
    """
    Build the named criterion with default hyperparameters, optionally overriding them
    (threshold, window, epsilon, rounds, min_delta, patience).
    """
    def opt(name, key):
        value = overrides.pop(name) if name in overrides else _default(key)
        if name == 'threshold' and not (0.0 <= float(value) <= 1.0):
            raise CriterionError("alstop.criteria.make_criterion: threshold for " + criterion_id + " must be in [0,1], got " + str(value))
        if name in ('window', 'rounds', 'patience'):
            return int(value)
        return float(value)

    if criterion_id == 'max_confidence':
        spec = CriterionSpec.create(criterion_id, 'max_confidence', Threshold.create('le', opt('threshold', 'max_confidence_threshold')))
    elif criterion_id == 'entropy_mcs':
        spec = CriterionSpec.create(criterion_id, 'entropy_mcs', Threshold.create('le', opt('threshold', 'entropy_mcs_threshold')))
    elif criterion_id == 'mes':
        spec = CriterionSpec.create(criterion_id, 'mes', Threshold.create('le', opt('threshold', 'mes_threshold')))
    elif criterion_id == 'oracle_acc_mcs':
        spec = CriterionSpec.create(criterion_id, 'oracle_acc', Threshold.create('ge', opt('threshold', 'oracle_acc_threshold')))
    elif criterion_id == 'classification_change':
        spec = CriterionSpec.create(criterion_id, 'classification_change', Threshold.create('ge', opt('threshold', 'classification_change_threshold')))
    elif criterion_id == 'overall_uncertainty':
        spec = CriterionSpec.create(criterion_id, 'overall_uncertainty', Threshold.create('le', opt('threshold', 'overall_uncertainty_threshold')))
    elif criterion_id == 'performance_convergence':
        spec = CriterionSpec.create(criterion_id, 'performance_convergence',
                                    WindowGradient.create(opt('window', 'performance_convergence_window'),
                                                          opt('epsilon', 'performance_convergence_epsilon'), 'mean', 'max'))
    elif criterion_id == 'uncertainty_convergence':
        spec = CriterionSpec.create(criterion_id, 'uncertainty_convergence',
                                    WindowGradient.create(opt('window', 'uncertainty_convergence_window'),
                                                          opt('epsilon', 'uncertainty_convergence_epsilon'), 'median', 'min'))
    elif criterion_id == 'contradictory_information':
        spec = CriterionSpec.create(criterion_id, 'contradictory_information',
                                    ConsecutiveChange.create(opt('rounds', 'contradictory_information_rounds'), 0.0))
    elif criterion_id == 'stabilizing_predictions':
        spec = CriterionSpec.create(criterion_id, 'stabilizing_predictions',
                                    Threshold.create('ge', opt('threshold', 'stabilizing_predictions_threshold')),
                                    metric_params={'window': opt('window', 'stabilizing_predictions_window')})
    elif criterion_id == 'vm':
        spec = CriterionSpec.create(criterion_id, 'variance_uncertainty', ConsecutiveChange.create(opt('rounds', 'vm_rounds'), 0.0))
    elif criterion_id == 'evm':
        spec = CriterionSpec.create(criterion_id, 'variance_uncertainty',
                                    ConsecutiveChange.create(opt('rounds', 'vm_rounds'), opt('min_delta', 'evm_min_delta')))
    elif criterion_id == 'ssncut':
        spec = CriterionSpec.create(criterion_id, 'ssncut', PatienceMinimum.create(opt('patience', 'ssncut_patience'), True),
                                    requires=['probabilistic', 'margin', 'binary'])
    else:
        raise CriterionError("alstop.criteria.make_criterion: unknown criterion " + repr(criterion_id))
    if overrides:
        raise CriterionError("alstop.criteria.make_criterion: unknown hyperparameters for " + criterion_id + ": " + ", ".join(sorted(overrides)))
    return spec


def criteria_catalogue(ids=None):
    return [make_criterion(c) for c in (CRITERION_IDS if ids is None else ids)]


def catalogue_to_json(catalogue=None):
    if catalogue is None:
        catalogue = criteria_catalogue()
    entries = []
    for spec in catalogue:
        entry = spec.to_dict()
        entry['name'] = spec.name
        entry['applicable_learners'] = [k for k in sorted(LEARNER_CAPABILITIES) if all(r in LEARNER_CAPABILITIES[k] for r in spec.requires if r != 'binary')]
        entry['binary_only'] = 'binary' in spec.requires
        entries.append(entry)
    return json.dumps(entries, sort_keys=True, indent=2)
