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
The cost of stopping active learning with a classifier of accuracy a after buying j labels:

    C = (1 - a) * m * n + j * l

with l the cost of one label, m the cost of one misclassification and n the number of predictions
the classifier makes over its lifetime.
"""
import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import CostError


class CostParams(AlstopObject):

    @alstop_typed_init({'label_cost': float, 'misclassification_cost': float, 'lifetime_predictions': float})
    def __init__(self, label_cost, misclassification_cost, lifetime_predictions):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.label_cost = label_cost
        self.misclassification_cost = misclassification_cost
        self.lifetime_predictions = lifetime_predictions

    @classmethod
    def create(cls, label_cost, misclassification_cost, lifetime_predictions):
        values = [float(label_cost), float(misclassification_cost), float(lifetime_predictions)]
        for name, v in zip(('label cost', 'misclassification cost', 'lifetime predictions'), values):
            if not numpy.isfinite(v) or v < 0:
                raise CostError("alstop.cost.CostParams.create: " + name + " must be a finite number >= 0, got " + str(v))
        return cls(*values)

    @property
    def nm(self):
        return self.misclassification_cost * self.lifetime_predictions

    def scaled(self, factor):
        """
        The same scenario with label and misclassification costs both multiplied by *factor*.
        """
        return CostParams.create(self.label_cost * factor, self.misclassification_cost * factor, self.lifetime_predictions)


SCENARIOS = {
    # Breast-cancer screening: radiologist reading cost per label, cost of a missed or false
    # diagnosis, and a screening program's lifetime volume.
    'mammogram': {'label_cost': 13.60, 'misclassification_cost': 10742.0, 'lifetime_predictions': 336000},
    # Direct marketing: cheap labels, a lost sale per error, one campaign's mailing list.
    'marketing': {'label_cost': 1.0, 'misclassification_cost': 20.0, 'lifetime_predictions': 2000},
}


def scenario(name):
    try:
        return CostParams.create(**SCENARIOS[name])
    except KeyError:
        raise CostError("alstop.cost.scenario: unknown scenario " + repr(name) + ", choose from " + ", ".join(sorted(SCENARIOS)))


def cost(a, j, params):
    a = float(a)
    if not (0.0 <= a <= 1.0):
        raise CostError("alstop.cost.cost: accuracy must be in [0,1], got " + str(a))
    if j < 0:
        raise CostError("alstop.cost.cost: label count must be >= 0, got " + str(j))
    return (1.0 - a) * params.misclassification_cost * params.lifetime_predictions + j * params.label_cost


def run_costs(accuracies, labels, nm, l):
    """
    Vectorized cost for arrays of per-run (a, j) at a given n*m product and label cost.
    """
    return (1.0 - numpy.asarray(accuracies, dtype=numpy.float64)) * nm + numpy.asarray(labels, dtype=numpy.float64) * l
