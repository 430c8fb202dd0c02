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
Run traces: a complete per-round record of an active learning run, from which every stopping
criterion can be evaluated offline.

Record r describes classifier C_r, trained on the labelled pool at that round (labels_used = its
size): its posteriors and predictions on the evaluation subsample, its predictions on the stop set,
its test accuracy, and the batch it selected for labelling next, with C_r's posteriors for that batch
(i.e. before retraining on it) and the oracle labels.
"""
import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.basic import sorted_index_array
from alstop.core.errors import TraceFormatError

POSTERIOR_TOLERANCE = 1e-9

TRACE_STATUS = ('running', 'complete', 'aborted')


def check_posteriors(posteriors, where):
    posteriors = numpy.asarray(posteriors, dtype=numpy.float64)
    if posteriors.size == 0:
        return posteriors
    if posteriors.ndim != 2:
        raise TraceFormatError(where + ": posteriors must be a matrix")
    if numpy.any(posteriors < 0) or numpy.any(numpy.abs(posteriors.sum(axis=1) - 1.0) > POSTERIOR_TOLERANCE):
        raise TraceFormatError(where + ": posterior rows must be nonnegative and sum to 1")
    return posteriors


class TraceConfig(AlstopObject):

    """
    The protocol parameters a trace was recorded under.
    """

    @alstop_typed_init({'batch_size': int, 'subsample_size': int, 'stopset_size': int, 'reserve': int,
                        'initial_size': int, 'test_fraction': float})
    def __init__(self, batch_size, subsample_size, stopset_size, reserve, initial_size, test_fraction):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.batch_size = batch_size
        self.subsample_size = subsample_size
        self.stopset_size = stopset_size
        self.reserve = reserve
        self.initial_size = initial_size
        self.test_fraction = test_fraction

    @classmethod
    def create(cls, batch_size=10, subsample_size=1000, stopset_size=1000, reserve=500, initial_size=10, test_fraction=0.5):
        if int(batch_size) < 1:
            raise TraceFormatError("alstop.data.TraceConfig.create: batch_size must be >= 1")
        if int(subsample_size) < 1 or int(initial_size) < 1 or int(stopset_size) < 0 or int(reserve) < 0:
            raise TraceFormatError("alstop.data.TraceConfig.create: sizes must be positive")
        if not (0.0 < float(test_fraction) < 1.0):
            raise TraceFormatError("alstop.data.TraceConfig.create: test_fraction must be in (0,1)")
        return cls(int(batch_size), int(subsample_size), int(stopset_size), int(reserve), int(initial_size), float(test_fraction))


class IterationRecord(AlstopObject):

    @alstop_typed_init({'round': int, 'labels_used': int,
                        'selected_indices': [int], 'selected_labels': [int], 'selected_posteriors': [[float]],
                        'subsample': [int], 'subsample_posteriors': [[float]], 'subsample_predictions': [int],
                        'stopset_predictions': [int], 'test_accuracy': float})
    def __init__(self, round, labels_used, selected_indices, selected_labels, selected_posteriors,
                 subsample, subsample_posteriors, subsample_predictions, stopset_predictions, test_accuracy):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.round = round
        self.labels_used = labels_used
        self.selected_indices = selected_indices
        self.selected_labels = selected_labels
        self.selected_posteriors = selected_posteriors
        self.subsample = subsample
        self.subsample_posteriors = subsample_posteriors
        self.subsample_predictions = subsample_predictions
        self.stopset_predictions = stopset_predictions
        self.test_accuracy = test_accuracy

    @classmethod
    def create(cls, round, labels_used, selected_indices, selected_labels, selected_posteriors,
               subsample, subsample_posteriors, subsample_predictions, stopset_predictions, test_accuracy):
        where = "alstop.data.IterationRecord.create (round " + str(round) + ")"
        if int(round) < 0:
            raise TraceFormatError(where + ": negative round")
        selected_indices = numpy.asarray(selected_indices, dtype=numpy.int64).reshape(-1)
        selected_labels = numpy.asarray(selected_labels, dtype=numpy.int64).reshape(-1)
        selected_posteriors = check_posteriors(selected_posteriors, where)
        if len(selected_labels) != len(selected_indices) or (len(selected_indices) > 0 and selected_posteriors.shape[0] != len(selected_indices)):
            raise TraceFormatError(where + ": selected indices, labels and posteriors differ in length")
        if len(selected_indices) == 0:
            selected_posteriors = selected_posteriors.reshape(0, 0) if selected_posteriors.size == 0 else selected_posteriors
        subsample = numpy.asarray(subsample, dtype=numpy.int64).reshape(-1)
        if numpy.any(numpy.diff(subsample) <= 0):
            raise TraceFormatError(where + ": subsample must be a sorted set of indices")
        subsample_posteriors = check_posteriors(subsample_posteriors, where)
        subsample_predictions = numpy.asarray(subsample_predictions, dtype=numpy.int64).reshape(-1)
        if len(subsample_predictions) != len(subsample) or (len(subsample) > 0 and subsample_posteriors.shape[0] != len(subsample)):
            raise TraceFormatError(where + ": subsample, posteriors and predictions differ in length")
        stopset_predictions = numpy.asarray(stopset_predictions, dtype=numpy.int64).reshape(-1)
        test_accuracy = float(test_accuracy)
        if not (0.0 <= test_accuracy <= 1.0):
            raise TraceFormatError(where + ": test_accuracy must be in [0,1]")
        for arr in (selected_indices, selected_labels, selected_posteriors, subsample, subsample_posteriors,
                    subsample_predictions, stopset_predictions):
            arr.setflags(write=False)
        return cls(int(round), int(labels_used), selected_indices, selected_labels, selected_posteriors,
                   subsample, subsample_posteriors, subsample_predictions, stopset_predictions, test_accuracy)

    @property
    def selected(self):
        """
        The selected batch as (row index, oracle label, pre-retrain posterior) triples.
        """
        return [(int(i), int(y), p) for i, y, p in zip(self.selected_indices, self.selected_labels, self.selected_posteriors)]

    @property
    def batch_size(self):
        return len(self.selected_indices)


class RunTrace(AlstopObject):

    @alstop_typed_init({'dataset': str, 'model': str, 'seed': int, 'config': TraceConfig, 'classes': [int],
                        'stopset': [int], 'records': [IterationRecord], 'status': str, 'message': str})
    def __init__(self, dataset, model, seed, config, classes, stopset, records, status, message):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.dataset = dataset
        self.model = model
        self.seed = seed
        self.config = config
        self.classes = classes
        self.stopset = stopset
        self.records = records
        self.status = status
        self.message = message

    @classmethod
    def create(cls, dataset, model, seed, config, classes, stopset=None, records=None, status='complete', message=''):
        if records is None:
            records = []
        if status not in TRACE_STATUS:
            raise TraceFormatError("alstop.data.RunTrace.create: unknown status " + str(status))
        if len(classes) < 2:
            raise TraceFormatError("alstop.data.RunTrace.create: need at least 2 classes")
        stopset = sorted_index_array([] if stopset is None else stopset)
        stopset.setflags(write=False)
        trace = cls(str(dataset), str(model), int(seed), config, [int(c) for c in classes], stopset, [], status,
                    '' if message is None else str(message))
        for record in records:
            trace.check_next(record)
            trace.records.append(record)
        return trace

    def check_next(self, record):
        """
        Raise TraceFormatError unless *record* may follow the current last record.
        """
        expected = len(self.records)
        if record.round != expected:
            raise TraceFormatError("alstop.data.RunTrace: records must be ordered by round without gaps, expected " + str(expected) + " got " + str(record.round), round_index=record.round)
        if len(record.selected_indices) > self.config.batch_size:
            raise TraceFormatError("alstop.data.RunTrace: selected batch larger than batch size", round_index=record.round)
        if len(self.records) > 0:
            prev = self.records[-1]
            if prev.batch_size != self.config.batch_size:
                raise TraceFormatError("alstop.data.RunTrace: only the final record may have a short batch", round_index=prev.round)
            if record.labels_used - prev.labels_used != prev.batch_size:
                raise TraceFormatError("alstop.data.RunTrace: labels_used must grow by the batch size", round_index=record.round)
        if len(record.stopset_predictions) != len(self.stopset):
            raise TraceFormatError("alstop.data.RunTrace: stop set predictions do not match stop set size", round_index=record.round)

    def append(self, record):
        self.check_next(record)
        self.records.append(record)
        self._hexhash = None

    @property
    def n_classes(self):
        return len(self.classes)

    @property
    def key(self):
        return (self.dataset, self.model, self.seed)

    def __len__(self):
        return len(self.records)
