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
Per-run outcomes of stopping criteria, and the three ways of accounting for runs on which a
criterion never stopped.

  penalize: a run without a stop is charged the worst accuracy and the largest label count seen on
            that dataset for any run of any criterion
  include:  runs without a stop are left out of that criterion's averages
  exclude:  a criterion that failed to stop even once is left out altogether
"""
from collections import OrderedDict

import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.console import warn, logger
from alstop.core.errors import CostError

TREATMENTS = ('penalize', 'include', 'exclude')


class RunOutcome(AlstopObject):

    """
    What one criterion achieved on one run: (dataset, model, split) identifies the run, and
    (accuracy, labels) are those of the stopping round, or of the final round when it never stopped.
    """

    @alstop_typed_init({'dataset': str, 'split': int, 'stopped': bool, 'accuracy': float, 'labels': int, 'model': str})
    def __init__(self, dataset, split, stopped, accuracy, labels, model):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.dataset = dataset
        self.split = split
        self.stopped = stopped
        self.accuracy = accuracy
        self.labels = labels
        self.model = model

    @classmethod
    def create(cls, dataset, split, stopped, accuracy, labels, model=''):
        accuracy = float(accuracy)
        if not (0.0 <= accuracy <= 1.0):
            raise CostError("alstop.cost.RunOutcome.create: accuracy must be in [0,1], got " + str(accuracy))
        if int(labels) < 0:
            raise CostError("alstop.cost.RunOutcome.create: label count must be >= 0")
        return cls(str(dataset), int(split), bool(stopped), accuracy, int(labels), str(model))

    @property
    def key(self):
        return (self.dataset, self.model, self.split)


class CriterionOutcome(AlstopObject):

    @alstop_typed_init({'criterion': str, 'runs': [RunOutcome]})
    def __init__(self, criterion, runs):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.criterion = criterion
        self.runs = runs

    @classmethod
    def create(cls, criterion, runs):
        runs = list(runs)
        keys = [r.key for r in runs]
        if len(set(keys)) != len(keys):
            raise CostError("alstop.cost.CriterionOutcome.create: duplicate (dataset, model, split) runs for " + str(criterion))
        return cls(str(criterion), runs)

    @property
    def accuracies(self):
        return numpy.array([r.accuracy for r in self.runs], dtype=numpy.float64)

    @property
    def labels(self):
        return numpy.array([r.labels for r in self.runs], dtype=numpy.float64)

    @property
    def stops(self):
        return sum(1 for r in self.runs if r.stopped)

    @property
    def mean_accuracy(self):
        return float(numpy.mean(self.accuracies)) if self.runs else float('nan')

    @property
    def mean_labels(self):
        return float(numpy.mean(self.labels)) if self.runs else float('nan')

    def for_dataset(self, dataset):
        return CriterionOutcome.create(self.criterion, [r for r in self.runs if r.dataset == dataset])


def outcomes_from_rows(rows, model=None, dataset=None):
    """
    Group evaluation result rows (dicts with criterion, dataset, model, seed, stopped, accuracy,
    labels_used) into one CriterionOutcome per criterion, in first-seen order. Skipped rows are
    ignored; *model* and *dataset* restrict the rows used.
    """
    grouped = OrderedDict()
    for row in rows:
        if row.get('skipped') or (model is not None and row['model'] != model) or (dataset is not None and row['dataset'] != dataset):
            continue
        grouped.setdefault(row['criterion'], []).append(
            RunOutcome.create(row['dataset'], row['seed'], row['stopped'], row['accuracy'], row['labels_used'], row.get('model', '')))
    return [CriterionOutcome.create(c, runs) for c, runs in grouped.items()]


def worst_values(outcomes):
    """
    Per dataset, the lowest accuracy and the largest label count over every run of every criterion.
    """
    worst = {}
    for outcome in outcomes:
        for r in outcome.runs:
            a, j = worst.get(r.dataset, (1.0, 0))
            worst[r.dataset] = (min(a, r.accuracy), max(j, r.labels))
    return worst


def apply_treatment(outcomes, treatment, worst=None):
    """
    Return new CriterionOutcome objects with runs that never stopped accounted for by *treatment*.
    Criteria that end up with no runs are dropped, with a warning.
    """
    if treatment not in TREATMENTS:
        raise CostError("alstop.cost.apply_treatment: unknown treatment " + repr(treatment) + ", choose from " + ", ".join(TREATMENTS))
    if worst is None:
        worst = worst_values(outcomes)
    treated = []
    for outcome in outcomes:
        if treatment == 'penalize':
            runs = []
            for r in outcome.runs:
                if r.stopped:
                    runs.append(r)
                else:
                    a, j = worst[r.dataset]
                    runs.append(RunOutcome.create(r.dataset, r.split, False, a, j, r.model))
        elif treatment == 'include':
            runs = [r for r in outcome.runs if r.stopped]
            if len(runs) == 0:
                warn("criterion", outcome.criterion, "never stopped; excluded from the results")
                continue
        else:
            if outcome.stops < len(outcome.runs):
                logger("alstop.cost.apply_treatment: excluding", outcome.criterion, "which failed to stop on",
                       len(outcome.runs) - outcome.stops, "runs", loglevel=1)
                continue
            runs = list(outcome.runs)
        treated.append(CriterionOutcome.create(outcome.criterion, runs))
    return treated
