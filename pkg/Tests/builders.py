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
Hand-built trace records for the criterion and trace-format tests.
"""
import numpy

from alstop.data import TraceConfig, IterationRecord, RunTrace

INITIAL = 10


def uniform(rows, n_classes=2):
    return numpy.full((rows, n_classes), 1.0 / n_classes)


def make_record(t, batch_size=2, selected_posteriors=None, selected_labels=None, subsample=None,
                subsample_posteriors=None, subsample_predictions=None, stopset_predictions=None,
                test_accuracy=0.5, n_sub=6, n_classes=2, stopset_size=4):
    if selected_posteriors is None:
        selected_posteriors = uniform(batch_size, n_classes)
    selected_posteriors = numpy.asarray(selected_posteriors, dtype=numpy.float64)
    k = len(selected_posteriors)
    if selected_labels is None:
        selected_labels = numpy.zeros(k, dtype=numpy.int64)
    if subsample is None:
        subsample = numpy.arange(n_sub)
    if subsample_posteriors is None:
        subsample_posteriors = uniform(len(subsample), n_classes)
    subsample_posteriors = numpy.asarray(subsample_posteriors, dtype=numpy.float64)
    if subsample_predictions is None:
        subsample_predictions = numpy.argmax(subsample_posteriors, axis=1)
    if stopset_predictions is None:
        stopset_predictions = numpy.zeros(stopset_size, dtype=numpy.int64)
    selected_indices = 1000 + t * batch_size + numpy.arange(k)
    return IterationRecord.create(t, INITIAL + t * batch_size, selected_indices, selected_labels, selected_posteriors,
                                  subsample, subsample_posteriors, subsample_predictions, stopset_predictions,
                                  test_accuracy)


def make_trace(records, batch_size=2, classes=(0, 1), stopset_size=4, model='linear', dataset='toy', seed=0):
    config = TraceConfig.create(batch_size=batch_size, subsample_size=6, stopset_size=stopset_size, reserve=0,
                                initial_size=INITIAL, test_fraction=0.5)
    return RunTrace.create(dataset, model, seed, config, list(classes), stopset=list(range(stopset_size)), records=records)


def trace_from_series(n_rounds, batch_size=2, model='linear', **per_round):
    """
    A trace whose round t record is make_record(t, **{name: f(t)}) for every name=f given.
    """
    records = []
    for t in range(n_rounds):
        kargs = dict((name, f(t)) for name, f in per_round.items())
        records.append(make_record(t, batch_size=batch_size, **kargs))
    return make_trace(records, batch_size=batch_size, model=model)
