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

import os, unittest, argparse, tempfile

import numpy
import scipy.sparse
from hypothesis import given, settings
from hypothesis.strategies import integers, floats

from alstop.core.errors import DataError, PoolError, TraceFormatError, TraceVersionError, TraceChecksumError
from alstop.data import (Dataset, PoolState, make_split, make_initial_set, draw_subsample, replenish_subsample,
                         draw_stopset, serialize_trace, deserialize_trace, read_trace, write_trace, TraceWriter, IterationRecord)
from alstop.core.ioadapters import IoAdapterString

from builders import make_record, make_trace, uniform


def alternating(n, n_classes=2):
    return Dataset.create('alt', numpy.arange(2 * n, dtype=float).reshape(n, 2), numpy.arange(n) % n_classes)


class TestDataset(unittest.TestCase):

    def test_label_count_mismatch(self):
        with self.assertRaises(DataError):
            Dataset.create('bad', numpy.zeros((3, 2)), [0, 1])

    def test_single_class(self):
        with self.assertRaises(DataError):
            Dataset.create('bad', numpy.zeros((3, 2)), [1, 1, 1])

    def test_sparse_stays_sparse(self):
        ds = Dataset.create('sp', scipy.sparse.coo_matrix(numpy.eye(4)), [0, 1, 0, 1])
        self.assertTrue(ds.is_sparse)
        self.assertTrue(scipy.sparse.isspmatrix_csr(ds.features))
        self.assertEqual(ds.rows([1, 2]).shape, (2, 4))
        self.assertTrue(numpy.array_equal(ds.to_dense().features, numpy.eye(4)))
        back = ds.to_dense().to_sparse()
        self.assertTrue(back.is_sparse)
        self.assertTrue(numpy.array_equal(back.features.toarray(), numpy.eye(4)))

    def test_subset_keeps_classes(self):
        ds = Dataset.create('d', numpy.zeros((4, 1)), [0, 1, 2, 0])
        sub = ds.subset([0, 1, 3])
        self.assertEqual(sub.classes, [0, 1, 2])
        self.assertEqual(sub.n_rows, 3)

    def test_class_position(self):
        ds = Dataset.create('d', numpy.zeros((3, 1)), [3, 7, 9])
        self.assertEqual(ds.class_position([9, 3]).tolist(), [2, 0])


class TestPool(unittest.TestCase):

    def test_split_sizes_and_determinism(self):
        ds = alternating(101)
        pool = make_split(ds, 7, 0.5)
        self.assertEqual(len(pool.test), 50)
        self.assertEqual(len(pool.unlabeled), 51)
        self.assertEqual(len(pool.labeled), 0)
        again = make_split(ds, 7, 0.5)
        self.assertTrue(numpy.array_equal(pool.test, again.test))
        other = make_split(ds, 8, 0.5)
        self.assertFalse(numpy.array_equal(pool.test, other.test))

    def test_bad_test_fraction(self):
        with self.assertRaises(PoolError):
            make_split(alternating(10), 0, 1.0)

    def test_initial_set_covers_classes(self):
        ds = alternating(90, n_classes=3)
        pool = make_initial_set(make_split(ds, 1, 0.5), ds, 2, 10)
        self.assertEqual(len(pool.labeled), 10)
        self.assertEqual(sorted(set(ds.labels[pool.labeled].tolist())), [0, 1, 2])
        small = make_initial_set(make_split(ds, 1, 0.5), ds, 2, 1)
        self.assertEqual(len(small.labeled), 3)

    def test_initial_set_missing_class(self):
        ds = Dataset.create('d', numpy.zeros((4, 1)), [0, 0, 0, 1])
        pool = PoolState.create(4, [], [0, 1, 2], [3])
        with self.assertRaises(PoolError):
            make_initial_set(pool, ds, 0, 2)

    def test_label_moves_instances(self):
        pool = PoolState.create(6, [0], [1, 2, 3, 4], [5], subsample=[2, 3])
        after = pool.label([2, 4])
        self.assertEqual(after.labeled.tolist(), [0, 2, 4])
        self.assertEqual(after.unlabeled.tolist(), [1, 3])
        self.assertEqual(after.subsample.tolist(), [3])
        with self.assertRaises(PoolError):
            pool.label([5])

    def test_overlapping_sets_rejected(self):
        with self.assertRaises(PoolError):
            PoolState.create(4, [0, 1], [1, 2], [3])

    def test_subsample_and_replenish(self):
        ds = alternating(200)
        pool = make_initial_set(make_split(ds, 3, 0.5), ds, 4, 10)
        pool = draw_subsample(pool, 5, 30)
        self.assertEqual(len(pool.subsample), 30)
        self.assertTrue(numpy.all(numpy.isin(pool.subsample, pool.unlabeled)))
        pool = pool.label(pool.subsample[:25])
        self.assertEqual(len(pool.subsample), 5)
        pool = replenish_subsample(pool, 6, 30)
        self.assertEqual(len(pool.subsample), 30)
        self.assertTrue(numpy.all(numpy.isin(pool.subsample, pool.unlabeled)))

    def test_subsample_capped_by_pool(self):
        pool = PoolState.create(5, [0], [1, 2], [3, 4])
        self.assertEqual(len(draw_subsample(pool, 0, 100).subsample), 2)
        self.assertEqual(len(draw_stopset(pool, 0, 100)), 2)

    @given(integers(4, 300), floats(0.05, 0.95), integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_split_partitions_rows(self, n, fraction, seed):
        pool = make_split(alternating(n), seed, fraction)
        everything = numpy.concatenate([pool.labeled, pool.unlabeled, pool.test])
        self.assertEqual(sorted(everything.tolist()), list(range(n)))


class TestTrace(unittest.TestCase):

    def three_rounds(self):
        records = [make_record(t, subsample_posteriors=numpy.array([[1 / 3.0, 2 / 3.0]] * 6), test_accuracy=0.1 * (t + 1))
                   for t in range(3)]
        return make_trace(records)

    def test_serialization_is_exact(self):
        trace = self.three_rounds()
        back = deserialize_trace(serialize_trace(trace))
        self.assertEqual(back, trace)
        self.assertEqual(back.hexhash, trace.hexhash)
        self.assertEqual(back.records[1].subsample_posteriors[0, 0], 1 / 3.0)
        self.assertEqual(back.status, 'complete')

    def test_checksum_mismatch_names_round(self):
        lines = serialize_trace(self.three_rounds()).decode('utf-8').split("\n")
        self.assertIn('"test_accuracy":0.2', lines[2])
        lines[2] = lines[2].replace('"test_accuracy":0.2', '"test_accuracy":0.25')
        with self.assertRaises(TraceChecksumError) as cm:
            deserialize_trace("\n".join(lines))
        self.assertEqual(cm.exception.round_index, 1)

    def test_version_mismatch(self):
        lines = serialize_trace(self.three_rounds()).decode('utf-8').split("\n")
        lines[0] = lines[0].replace('"version":1', '"version":2')
        with self.assertRaises(TraceVersionError):
            deserialize_trace("\n".join(lines))

    def test_truncated_record(self):
        lines = serialize_trace(self.three_rounds()).decode('utf-8').split("\n")
        # header, three records, footer, ''
        truncated = "\n".join(lines[:3]) + "\n" + lines[3][:40]
        with self.assertRaises(TraceFormatError) as cm:
            deserialize_trace(truncated)
        self.assertEqual(cm.exception.round_index, 2)

    def test_missing_footer_is_running(self):
        lines = serialize_trace(self.three_rounds()).decode('utf-8').split("\n")
        trace = deserialize_trace("\n".join(lines[:4]) + "\n")
        self.assertEqual(trace.status, 'running')
        self.assertEqual(len(trace), 3)

    def test_round_gap_rejected(self):
        with self.assertRaises(TraceFormatError):
            make_trace([make_record(0), make_record(2)])

    def test_labels_used_must_follow_batches(self):
        first = make_record(0)
        second = IterationRecord.create(1, 13, [1], [0], uniform(1), [0, 1], uniform(2), [0, 0], [0, 0, 0, 0], 0.5)
        with self.assertRaises(TraceFormatError):
            make_trace([first, second])

    def test_posteriors_must_be_distributions(self):
        with self.assertRaises(TraceFormatError):
            make_record(0, subsample_posteriors=numpy.full((6, 2), 0.6))

    def test_streaming_writer(self):
        trace = make_trace([])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'run.trace')
            writer = TraceWriter(path, trace)
            for t in range(2):
                writer.append(make_record(t))
            partial = read_trace(path)
            self.assertEqual(partial.status, 'running')
            self.assertEqual(len(partial), 2)
            writer.close('aborted', 'learner failed')
            done = read_trace(path)
        self.assertEqual(done.status, 'aborted')
        self.assertEqual(done.message, 'learner failed')
        self.assertEqual(len(done), 2)

    def test_compressed_and_in_memory_files(self):
        trace = make_trace([make_record(0), make_record(1)])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'run.trace')
            write_trace(trace, path + '.gz')
            self.assertEqual(read_trace(path + '.gz'), trace)
            # a missing file is also looked for with a compression suffix
            self.assertEqual(read_trace(path), trace)
        ioa = IoAdapterString()
        write_trace(trace, ioa)
        self.assertEqual(read_trace(IoAdapterString(ioa.string)), trace)


#############################################################################


if __name__ == '__main__':

    ap = argparse.ArgumentParser(description="Data tests")
    args, leftovers = ap.parse_known_args()

    suite = unittest.TestLoader().loadTestsFromTestCase(TestDataset)
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestPool))
    suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestTrace))
    unittest.TextTestRunner(verbosity=2).run(suite)
