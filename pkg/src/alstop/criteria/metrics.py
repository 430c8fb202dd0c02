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
Stopping-criterion metrics. Each metric reduces one trace round (or a few neighbouring rounds) to a
single real number. Posterior columns follow the trace's class order; `classes` maps class ids to
those columns and defaults to ids 0..C-1.

Metrics that cannot be computed for a round (an empty batch, too few rounds of history) raise
UndefinedMetric; the criterion evaluation treats such rounds as not stopping.
"""
import itertools

import numpy
import scipy.cluster.vq
import scipy.linalg

from alstop.core.errors import UndefinedMetric, CriterionNotApplicable
from alstop.criteria.uncertainty import normalized_entropy
from alstop.query.rankedbatch import median_bandwidth, rbf_similarity
from alstop.stats.agreement import cohen_kappa


def _positions(labels, classes):
    labels = numpy.asarray(labels, dtype=numpy.int64)
    if classes is None:
        return labels
    lookup = dict((c, i) for i, c in enumerate(classes))
    return numpy.array([lookup[int(c)] for c in labels], dtype=numpy.int64)


def _batch(record, where):
    if record.batch_size == 0:
        raise UndefinedMetric(where + ": round " + str(record.round) + " has an empty selected batch")
    return record.selected_posteriors


def _subsample(record, where):
    if len(record.subsample) == 0:
        raise UndefinedMetric(where + ": round " + str(record.round) + " has an empty evaluation subsample")
    return record.subsample_posteriors


def metric_max_confidence(record):
    """
    Smallest uncertainty in the selected batch, from the posteriors of the classifier that picked it.
    """
    return float(numpy.min(normalized_entropy(_batch(record, "alstop.criteria.metric_max_confidence"))))


def metric_entropy_mcs(record):
    return float(numpy.max(normalized_entropy(_subsample(record, "alstop.criteria.metric_entropy_mcs"))))


def metric_mes(record):
    """
    Expected error on the subsample: mean of (1 - largest posterior).
    """
    P = _subsample(record, "alstop.criteria.metric_mes")
    return float(numpy.mean(1.0 - P.max(axis=1)))


def metric_oracle_acc(record, classes=None):
    """
    Fraction of the selected batch whose oracle label the picking classifier already predicted.
    """
    P = _batch(record, "alstop.criteria.metric_oracle_acc")
    truth = _positions(record.selected_labels, classes)
    return float(numpy.mean(numpy.argmax(P, axis=1) == truth))


def metric_classification_change(prev, record):
    """
    Fraction of the subsample indices present in both rounds on which the two classifiers predict
    the same class.
    """
    common, ia, ib = numpy.intersect1d(prev.subsample, record.subsample, assume_unique=True, return_indices=True)
    if len(common) == 0:
        raise UndefinedMetric("alstop.criteria.metric_classification_change: rounds " + str(prev.round) + " and " + str(record.round) + " share no subsample indices")
    return float(numpy.mean(prev.subsample_predictions[ia] == record.subsample_predictions[ib]))


def metric_overall_uncertainty(record):
    return float(numpy.mean(normalized_entropy(_subsample(record, "alstop.criteria.metric_overall_uncertainty"))))


def metric_performance_convergence(record):
    """
    Expected macro F-score on the subsample, with the posteriors standing in for the unknown labels:

        E[TP_c] = sum over x predicted c of p_c(x)
        E[FP_c] = sum over x predicted c of 1 - p_c(x)
        E[FN_c] = sum over x not predicted c of p_c(x)
        F_c = 2 E[TP_c] / (2 E[TP_c] + E[FP_c] + E[FN_c])

    averaged over the classes for which the denominator is positive.
    """
    P = _subsample(record, "alstop.criteria.metric_performance_convergence")
    predicted = numpy.argmax(P, axis=1)
    scores = []
    for c in range(P.shape[1]):
        mask = predicted == c
        tp = numpy.sum(P[mask, c])
        fp = numpy.sum(1.0 - P[mask, c])
        fn = numpy.sum(P[~mask, c])
        denom = 2.0 * tp + fp + fn
        if denom > 0:
            scores.append(2.0 * tp / denom)
    if len(scores) == 0:
        raise UndefinedMetric("alstop.criteria.metric_performance_convergence: no class is predicted")
    return float(numpy.mean(scores))


def metric_uncertainty_convergence(record):
    return float(numpy.min(normalized_entropy(_batch(record, "alstop.criteria.metric_uncertainty_convergence"))))


def metric_contradictory_information(record, classes=None):
    """
    Mean predicted-class probability over the batch instances the picking classifier got wrong,
    0 when it got all of them right.
    """
    P = _batch(record, "alstop.criteria.metric_contradictory_information")
    predicted = numpy.argmax(P, axis=1)
    wrong = predicted != _positions(record.selected_labels, classes)
    if not numpy.any(wrong):
        return 0.0
    return float(numpy.mean(P[wrong, predicted[wrong]]))


def metric_stabilizing_predictions(records):
    """
    Mean Cohen's kappa over all pairs of stop-set prediction vectors of *records* (the last w rounds).
    """
    records = list(records)
    if len(records) < 2:
        raise UndefinedMetric("alstop.criteria.metric_stabilizing_predictions: need at least 2 rounds")
    if len(records[0].stopset_predictions) == 0:
        raise UndefinedMetric("alstop.criteria.metric_stabilizing_predictions: the stop set is empty")
    kappas = [cohen_kappa(a.stopset_predictions, b.stopset_predictions) for a, b in itertools.combinations(records, 2)]
    return float(numpy.mean(kappas))


def metric_variance_uncertainty(record):
    return float(numpy.var(normalized_entropy(_subsample(record, "alstop.criteria.metric_variance_uncertainty"))))


def spectral_bipartition(X, seed=0):
    """
    Two-way normalized cut relaxation of the rows of X: RBF similarities (median-distance bandwidth),
    symmetric normalized Laplacian, second-smallest eigenvector rescaled by D^-1/2, then 2-means on
    that vector started from its minimum and maximum. Returns a 0/1 cluster label per row.
    """
    h = median_bandwidth(X, seed)
    W = rbf_similarity(X, X, h)
    numpy.fill_diagonal(W, 0.0)
    d = W.sum(axis=1)
    d = numpy.where(d > 0, d, 1e-300)
    dinv = 1.0 / numpy.sqrt(d)
    L = numpy.eye(len(d)) - dinv[:, numpy.newaxis] * W * dinv[numpy.newaxis, :]
    _, vecs = scipy.linalg.eigh(L)
    f = (vecs[:, 1] * dinv).reshape(-1, 1)
    if numpy.ptp(f) == 0:
        return numpy.zeros(len(f), dtype=numpy.int64)
    init = numpy.array([[f.min()], [f.max()]])
    _, labels = scipy.cluster.vq.kmeans2(f, init, minit='matrix')
    return numpy.asarray(labels, dtype=numpy.int64)


def metric_ssncut(record, dataset, classes=None):
    """
    Disagreement between a spectral two-way clustering of the subsample and the classifier's
    predictions, minimized over the two ways of matching clusters to classes.
    """
    n_classes = dataset.n_classes if classes is None else len(classes)
    if n_classes != 2:
        raise CriterionNotApplicable("alstop.criteria.metric_ssncut: only defined for binary tasks, got " + str(n_classes) + " classes")
    if len(record.subsample) < 2:
        raise UndefinedMetric("alstop.criteria.metric_ssncut: need at least 2 subsample points")
    X = dataset.dense_rows(record.subsample)
    clusters = spectral_bipartition(X, seed=record.round)
    pred = _positions(record.subsample_predictions, classes if classes is not None else dataset.classes)
    disagree = numpy.mean(clusters != pred)
    return float(min(disagree, 1.0 - disagree))
