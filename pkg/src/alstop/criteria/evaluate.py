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
Offline evaluation of stopping criteria on recorded run traces.
"""
import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import CriterionError, CriterionNotApplicable, UndefinedMetric, UndefinedCorrelation
from alstop.criteria import metrics
from alstop.stats.agreement import pearson


class StopDecision(AlstopObject):

    """
    The outcome of one criterion on one trace: whether it stopped, at which round, and the labels
    used (j) and test accuracy (a) of that round's classifier. When the criterion never fires,
    j and a are those of the final round.
    """

    @alstop_typed_init({'criterion': str, 'stopped': bool, 'stop_round': int, 'labels_used': int, 'accuracy': float})
    def __init__(self, criterion, stopped, stop_round, labels_used, accuracy):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.criterion = criterion
        self.stopped = stopped
        self.stop_round = stop_round
        self.labels_used = labels_used
        self.accuracy = accuracy

    @classmethod
    def create(cls, criterion, stopped, stop_round, labels_used, accuracy):
        if stopped and stop_round is None:
            raise CriterionError("alstop.criteria.StopDecision.create: a stop needs a stop round")
        return cls(str(criterion), bool(stopped), None if stop_round is None else int(stop_round), int(labels_used), float(accuracy))


def check_applicable(trace, spec):
    if not spec.applicable_to(trace.model, trace.n_classes):
        raise CriterionNotApplicable("alstop.criteria.evaluate_criterion: " + spec.name + " is not applicable to model " + trace.model + " with " + str(trace.n_classes) + " classes")


def _round_metric(trace, spec, dataset, t):
    records = trace.records
    record = records[t]
    m = spec.metric
    if m == 'max_confidence':
        return metrics.metric_max_confidence(record)
    if m == 'entropy_mcs':
        return metrics.metric_entropy_mcs(record)
    if m == 'mes':
        return metrics.metric_mes(record)
    if m == 'oracle_acc':
        return metrics.metric_oracle_acc(record, trace.classes)
    if m == 'classification_change':
        if t == 0:
            return None
        return metrics.metric_classification_change(records[t - 1], record)
    if m == 'overall_uncertainty':
        return metrics.metric_overall_uncertainty(record)
    if m == 'performance_convergence':
        return metrics.metric_performance_convergence(record)
    if m == 'uncertainty_convergence':
        return metrics.metric_uncertainty_convergence(record)
    if m == 'contradictory_information':
        return metrics.metric_contradictory_information(record, trace.classes)
    if m == 'stabilizing_predictions':
        w = int(spec.metric_params.get('window', 3))
        if t < w - 1:
            return None
        return metrics.metric_stabilizing_predictions(records[t - w + 1:t + 1])
    if m == 'variance_uncertainty':
        return metrics.metric_variance_uncertainty(record)
    if m == 'ssncut':
        if dataset is None:
            raise CriterionError("alstop.criteria.evaluate_criterion: SSNCut needs the dataset the trace was recorded on")
        return metrics.metric_ssncut(record, dataset, trace.classes)
    raise CriterionError("alstop.criteria.evaluate_criterion: unknown metric " + repr(m))


def metric_series(trace, spec, dataset=None):
    """
    The criterion's metric for every round of *trace*; None for rounds where it is undefined.
    """
    series = []
    for t in range(len(trace.records)):
        try:
            series.append(_round_metric(trace, spec, dataset, t))
        except UndefinedMetric:
            series.append(None)
    return series


def evaluate_criterion(trace, spec, dataset=None):
    """
    Walk the trace in round order and return the StopDecision of the first round at which the
    criterion's condition fires (rolled back for conditions that report an earlier decision round).

    Raises CriterionNotApplicable when the criterion is not defined for the trace's learner or class
    count, and CriterionError for an empty trace.
    """
    check_applicable(trace, spec)
    if len(trace.records) == 0:
        raise CriterionError("alstop.criteria.evaluate_criterion: trace has no records")
    series = metric_series(trace, spec, dataset)
    hit = spec.condition.first_firing(series)
    if hit is None:
        last = trace.records[-1]
        return StopDecision.create(spec.id, False, None, last.labels_used, last.test_accuracy)
    _, stop_round = hit
    record = trace.records[stop_round]
    return StopDecision.create(spec.id, True, stop_round, record.labels_used, record.test_accuracy)


def metric_accuracy_correlation(trace, spec, dataset=None):
    """
    Pearson correlation between the criterion's metric and the test accuracy over all rounds where
    the metric is defined (the stop decision plays no part).
    """
    check_applicable(trace, spec)
    series = metric_series(trace, spec, dataset)
    pairs = [(v, r.test_accuracy) for v, r in zip(series, trace.records) if v is not None]
    if len(pairs) < 3:
        raise UndefinedCorrelation("alstop.criteria.metric_accuracy_correlation: need at least 3 rounds with a defined metric, got " + str(len(pairs)))
    x, y = numpy.array(pairs).T
    return pearson(x, y)
