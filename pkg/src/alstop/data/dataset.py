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

import numpy
import scipy.sparse

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import DataError


class Dataset(AlstopObject):

    """
    A labelled dataset: a dense (numpy) or sparse (scipy CSR) feature matrix with one integer class id
    per row. Class ids are dense 0..C-1 when the dataset comes from the loaders; `class_names` keeps
    the original label strings, in id order.
    """

    @alstop_typed_init({'name': str, 'features': object, 'labels': object, 'classes': [int], 'class_names': [str]},
                       skip=['features'])
    def __init__(self, name, features, labels, classes, class_names=None):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.name = name
        self.features = features
        self.labels = labels
        self.classes = classes
        self.class_names = class_names

    @classmethod
    def create(cls, name, features, labels, classes=None, class_names=None):
        """
        Create a Dataset object.

        Args:
          features: 2d numpy array or any scipy.sparse matrix (converted to CSR).
          labels: integer class id per row.
          classes: ordered class ids; defaults to the sorted distinct labels.
        """
        if scipy.sparse.issparse(features):
            features = scipy.sparse.csr_matrix(features, dtype=numpy.float64)
            features.sort_indices()
        else:
            features = numpy.ascontiguousarray(numpy.asarray(features, dtype=numpy.float64))
            if features.ndim != 2:
                raise DataError("alstop.data.Dataset.create: features must be a 2d matrix, got shape " + str(features.shape))
        labels = numpy.asarray(labels)
        if labels.ndim != 1:
            raise DataError("alstop.data.Dataset.create: labels must be a vector")
        if len(labels) > 0 and not numpy.issubdtype(labels.dtype, numpy.integer):
            if not numpy.all(numpy.equal(numpy.mod(labels, 1), 0)):
                raise DataError("alstop.data.Dataset.create: labels must be integer class ids")
        labels = labels.astype(numpy.int64)
        if features.shape[0] != len(labels):
            raise DataError("alstop.data.Dataset.create: feature rows (" + str(features.shape[0]) + ") do not match label count (" + str(len(labels)) + ")")
        if classes is None:
            classes = sorted(set(labels.tolist()))
        classes = [int(c) for c in classes]
        if len(set(classes)) != len(classes):
            raise DataError("alstop.data.Dataset.create: duplicate class ids")
        if len(classes) < 2:
            raise DataError("alstop.data.Dataset.create: a dataset needs at least 2 classes")
        unknown = set(labels.tolist()) - set(classes)
        if len(unknown) > 0:
            raise DataError("alstop.data.Dataset.create: labels not among classes: " + str(sorted(unknown)))
        if class_names is not None:
            class_names = [str(x) for x in class_names]
            if len(class_names) != len(classes):
                raise DataError("alstop.data.Dataset.create: class_names must have one entry per class")
        return cls(name, features, labels, classes, class_names)

    @property
    def n_rows(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    @property
    def n_classes(self):
        return len(self.classes)

    @property
    def is_sparse(self):
        return scipy.sparse.issparse(self.features)

    def rows(self, indices):
        """
        Feature rows for *indices*, keeping the storage kind (dense or CSR).
        """
        return self.features[numpy.asarray(indices, dtype=numpy.int64)]

    def dense_rows(self, indices):
        rows = self.rows(indices)
        if scipy.sparse.issparse(rows):
            return rows.toarray()
        return rows

    def class_position(self, labels):
        """
        Map class ids to their position in self.classes (the posterior column).
        """
        lookup = dict((c, i) for i, c in enumerate(self.classes))
        return numpy.array([lookup[int(x)] for x in numpy.asarray(labels).ravel()], dtype=numpy.int64)

    def to_dense(self):
        if not self.is_sparse:
            return self
        return Dataset.create(self.name, self.features.toarray(), self.labels, self.classes, self.class_names)

    def to_sparse(self):
        if self.is_sparse:
            return self
        return Dataset.create(self.name, scipy.sparse.csr_matrix(self.features), self.labels, self.classes, self.class_names)

    def subset(self, indices, name=None):
        indices = numpy.asarray(indices, dtype=numpy.int64)
        return Dataset.create(self.name if name is None else name, self.rows(indices), self.labels[indices], self.classes, self.class_names)

    def to_tuple(self):
        # Feature matrices can be large; identify them by shape and a digest of their values
        if self.is_sparse:
            feat = self.features
            fingerprint = (feat.shape, tuple(feat.indptr.tolist()), tuple(feat.indices.tolist()), tuple(feat.data.tolist()))
        else:
            fingerprint = (self.features.shape, tuple(self.features.ravel().tolist()))
        return super(Dataset, self).to_tuple() + (('features', fingerprint),)
