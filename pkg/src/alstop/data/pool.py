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
Partitions of a dataset into labelled, unlabelled and test pools, and the seeded operations that
create and move between them.
"""
import math

import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.basic import sorted_index_array
from alstop.core.errors import PoolError


class PoolState(AlstopObject):

    """
    Labelled, unlabelled and test index sets (pairwise disjoint, together covering all rows of the
    dataset), plus the evaluation subsample, a subset of the unlabelled pool.
    """

    @alstop_typed_init({'n_rows': int, 'labeled': object, 'unlabeled': object, 'test': object, 'subsample': object})
    def __init__(self, n_rows, labeled, unlabeled, test, subsample):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.n_rows = n_rows
        self.labeled = labeled
        self.unlabeled = unlabeled
        self.test = test
        self.subsample = subsample

    @classmethod
    def create(cls, n_rows, labeled, unlabeled, test, subsample=None):
        labeled = sorted_index_array(labeled)
        unlabeled = sorted_index_array(unlabeled)
        test = sorted_index_array(test)
        subsample = sorted_index_array([] if subsample is None else subsample)
        total = len(labeled) + len(unlabeled) + len(test)
        union = numpy.union1d(numpy.union1d(labeled, unlabeled), test)
        if total != len(union) or total != n_rows:
            raise PoolError("alstop.data.PoolState.create: labeled, unlabeled and test must partition the " + str(n_rows) + " rows")
        if len(union) > 0 and (union[0] < 0 or union[-1] >= n_rows):
            raise PoolError("alstop.data.PoolState.create: index out of range")
        if len(numpy.setdiff1d(subsample, unlabeled, assume_unique=True)) > 0:
            raise PoolError("alstop.data.PoolState.create: subsample must be a subset of the unlabeled pool")
        for arr in (labeled, unlabeled, test, subsample):
            arr.setflags(write=False)
        return cls(int(n_rows), labeled, unlabeled, test, subsample)

    def label(self, indices):
        """
        Return a new PoolState where *indices* have moved from the unlabelled pool (and the subsample)
        to the labelled pool.
        """
        indices = sorted_index_array(indices)
        if len(numpy.setdiff1d(indices, self.unlabeled, assume_unique=True)) > 0:
            raise PoolError("alstop.data.PoolState.label: can only label instances from the unlabeled pool")
        return PoolState.create(self.n_rows, numpy.union1d(self.labeled, indices),
                                numpy.setdiff1d(self.unlabeled, indices, assume_unique=True),
                                self.test, numpy.setdiff1d(self.subsample, indices, assume_unique=True))

    def with_subsample(self, subsample):
        return PoolState.create(self.n_rows, self.labeled, self.unlabeled, self.test, subsample)


def _rng(seed):
    return numpy.random.default_rng(int(seed))


def make_split(dataset, seed, test_fraction):
    """
    Hold out floor(test_fraction*N) rows, drawn uniformly without replacement, as the test set.
    Everything else starts in the unlabelled pool.
    """
    if not (0.0 < test_fraction < 1.0):
        raise PoolError("alstop.data.make_split: test_fraction must be in (0,1), got " + str(test_fraction))
    if len(numpy.unique(dataset.labels)) < 2:
        raise PoolError("alstop.data.make_split: dataset " + str(dataset.name) + " has fewer than 2 classes present")
    n = dataset.n_rows
    n_test = int(math.floor(test_fraction * n))
    perm = _rng(seed).permutation(n)
    return PoolState.create(n, [], perm[n_test:], perm[:n_test])


def make_initial_set(pool, dataset, seed, min_size):
    """
    Move one uniformly chosen instance of each class, then uniformly random further instances until
    there are at least min_size, from the unlabelled pool to the labelled pool.
    """
    rng = _rng(seed)
    unlabeled = pool.unlabeled
    unlabeled_labels = dataset.labels[unlabeled]
    chosen = []
    for c in dataset.classes:
        candidates = unlabeled[unlabeled_labels == c]
        if len(candidates) == 0:
            raise PoolError("alstop.data.make_initial_set: class " + str(c) + " is absent from the unlabeled pool")
        chosen += [int(candidates[rng.integers(len(candidates))])]
    missing = int(min_size) - len(chosen)
    if missing > 0:
        rest = numpy.setdiff1d(unlabeled, chosen, assume_unique=True)
        if missing > len(rest):
            raise PoolError("alstop.data.make_initial_set: unlabeled pool too small for an initial set of " + str(min_size))
        chosen += rng.choice(rest, size=missing, replace=False).tolist()
    return pool.label(chosen)


def draw_subsample(pool, seed, size):
    """
    Draw min(size, |unlabeled|) unlabelled indices uniformly without replacement as the evaluation
    subsample.
    """
    if size < 1:
        raise PoolError("alstop.data.draw_subsample: size must be >= 1")
    if len(pool.unlabeled) == 0:
        raise PoolError("alstop.data.draw_subsample: the unlabeled pool is empty")
    k = min(int(size), len(pool.unlabeled))
    return pool.with_subsample(_rng(seed).choice(pool.unlabeled, size=k, replace=False))


def replenish_subsample(pool, seed, size):
    """
    Top the subsample up to min(size, |unlabeled|) with instances from the rest of the unlabelled pool.
    """
    rest = numpy.setdiff1d(pool.unlabeled, pool.subsample, assume_unique=True)
    k = min(int(size), len(pool.unlabeled)) - len(pool.subsample)
    if k <= 0 or len(rest) == 0:
        return pool
    extra = _rng(seed).choice(rest, size=min(k, len(rest)), replace=False)
    return pool.with_subsample(numpy.union1d(pool.subsample, extra))


def draw_stopset(pool, seed, size):
    """
    Fixed stop set for prediction-agreement criteria, drawn from the unlabelled pool independently of
    the evaluation subsample.
    """
    if len(pool.unlabeled) == 0:
        return sorted_index_array([])
    k = min(int(size), len(pool.unlabeled))
    return sorted_index_array(_rng(seed).choice(pool.unlabeled, size=k, replace=False))
