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
Dataset ingestion: CSV files with a header line, svmlight/libsvm sparse files, and synthetic
Gaussian-blob datasets for desk-scale experiments.

Class labels are mapped to dense ids 0..C-1 in sorted label order (numerically when every label is a
number); the original label strings are kept as the dataset's class_names.
"""
import csv, os

import numpy
import scipy.sparse

from alstop.core.console import logger
from alstop.core.errors import DatasetFormatError, DataError
from alstop.core.ioadapters import IoAdapterFileReader
from alstop.data.dataset import Dataset

CSV_EXTENSIONS = ('.csv',)
SVMLIGHT_EXTENSIONS = ('.svm', '.svmlight', '.libsvm', '.txt', '.dat')


def _label_key(label):
    try:
        value = float(label)
    except ValueError:
        return (1, 0.0, label)
    if not numpy.isfinite(value):
        return (1, 0.0, label)
    return (0, value, label)


def map_labels(raw_labels):
    """
    Return (ids, class_names): a dense int id per label and the label strings in id order.
    """
    names = sorted(set(raw_labels), key=_label_key)
    lookup = dict((name, i) for i, name in enumerate(names))
    return numpy.array([lookup[x] for x in raw_labels], dtype=numpy.int64), names


def _canonical_label(token):
    token = token.strip()
    try:
        value = float(token)
    except ValueError:
        return token
    # nan and inf stay ordinary string labels
    if not numpy.isfinite(value):
        return token
    if value == int(value):
        return str(int(value))
    return repr(value)


def guess_format(path):
    base = os.path.basename(str(path)).lower()
    for ext in ('.gz', '.bz2'):
        if base.endswith(ext):
            base = base[:-len(ext)]
    _, ext = os.path.splitext(base)
    if ext in CSV_EXTENSIONS:
        return 'csv'
    if ext in SVMLIGHT_EXTENSIONS:
        return 'svmlight'
    raise DataError("alstop.harness.load_dataset: cannot tell the format of " + str(path) + ", give it explicitly (csv or svmlight)")


def read_csv(ioa, label_column=None, name=None):
    """
    Read a CSV file whose first line names the columns. *label_column* is a column name or a
    0-based position; by default the last column holds the label.
    """
    ioa = IoAdapterFileReader.use(ioa)
    filename = ioa.name
    try:
        reader = csv.reader(ioa.file)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetFormatError("alstop.harness.read_csv: empty file", filename=filename)
        header = [h.strip() for h in header]
        if label_column is None:
            li = len(header) - 1
        elif isinstance(label_column, int) or str(label_column).isdigit():
            li = int(label_column)
        elif label_column in header:
            li = header.index(label_column)
        else:
            raise DatasetFormatError("alstop.harness.read_csv: no label column named " + repr(label_column), line=1, filename=filename)
        if not (0 <= li < len(header)) or len(header) < 2:
            raise DatasetFormatError("alstop.harness.read_csv: need a label column and at least one feature column", line=1, filename=filename)
        rows, raw_labels = [], []
        for row in reader:
            lineno = reader.line_num
            if len(row) == 0 or all(c.strip() == '' for c in row):
                continue
            if len(row) != len(header):
                raise DatasetFormatError("alstop.harness.read_csv: expected " + str(len(header)) + " fields, got " + str(len(row)), line=lineno, filename=filename)
            label = row[li].strip()
            if label == '':
                raise DatasetFormatError("alstop.harness.read_csv: missing label", line=lineno, filename=filename)
            try:
                rows.append([float(c) for i, c in enumerate(row) if i != li])
            except ValueError:
                raise DatasetFormatError("alstop.harness.read_csv: non-numeric feature value", line=lineno, filename=filename)
            raw_labels.append(_canonical_label(label))
    finally:
        ioa.close()
    if len(rows) == 0:
        raise DatasetFormatError("alstop.harness.read_csv: no data rows", filename=filename)
    labels, names = map_labels(raw_labels)
    return Dataset.create(name or _stem(filename), numpy.array(rows), labels, list(range(len(names))), names)


def read_svmlight(ioa, n_features=None, name=None):
    """
    Read an svmlight/libsvm file: one instance per line, "<label> <index>:<value> ...", with 1-based
    feature indices on disk (0-based in memory). '#' starts a comment; qid tokens are ignored.
    """
    ioa = IoAdapterFileReader.use(ioa)
    filename = ioa.name
    data, indices, indptr, raw_labels = [], [], [0], []
    max_index = -1
    try:
        for lineno, line in enumerate(ioa.file, start=1):
            line = line.split('#', 1)[0].strip()
            if line == '':
                continue
            tokens = line.split()
            if ':' in tokens[0]:
                raise DatasetFormatError("alstop.harness.read_svmlight: missing label", line=lineno, filename=filename)
            seen = set()
            raw_labels.append(_canonical_label(tokens[0]))
            for token in tokens[1:]:
                idx, sep, val = token.partition(':')
                if sep == '':
                    raise DatasetFormatError("alstop.harness.read_svmlight: malformed feature " + repr(token), line=lineno, filename=filename)
                if idx == 'qid':
                    continue
                try:
                    j = int(idx) - 1
                    v = float(val)
                except ValueError:
                    raise DatasetFormatError("alstop.harness.read_svmlight: malformed feature " + repr(token), line=lineno, filename=filename)
                if j < 0:
                    raise DatasetFormatError("alstop.harness.read_svmlight: feature indices start at 1, got " + idx, line=lineno, filename=filename)
                if j in seen:
                    raise DatasetFormatError("alstop.harness.read_svmlight: feature " + idx + " given twice", line=lineno, filename=filename)
                if n_features is not None and j >= n_features:
                    raise DatasetFormatError("alstop.harness.read_svmlight: feature index " + idx + " exceeds " + str(n_features), line=lineno, filename=filename)
                seen.add(j)
                if v != 0.0:
                    indices.append(j)
                    data.append(v)
                max_index = max(max_index, j)
            indptr.append(len(indices))
    finally:
        ioa.close()
    if len(raw_labels) == 0:
        raise DatasetFormatError("alstop.harness.read_svmlight: empty file", filename=filename)
    width = max_index + 1 if n_features is None else int(n_features)
    X = scipy.sparse.csr_matrix((numpy.array(data, dtype=numpy.float64), numpy.array(indices, dtype=numpy.int64),
                                 numpy.array(indptr, dtype=numpy.int64)), shape=(len(raw_labels), max(width, 1)))
    labels, names = map_labels(raw_labels)
    return Dataset.create(name or _stem(filename), X, labels, list(range(len(names))), names)


def _stem(filename):
    if filename is None:
        return 'dataset'
    base = os.path.basename(str(filename))
    for ext in ('.gz', '.bz2'):
        if base.endswith(ext):
            base = base[:-len(ext)]
    return os.path.splitext(base)[0]


def subsample_rows(dataset, max_rows, seed):
    """
    Keep a uniformly drawn subset of at most *max_rows* rows, in their original order.
    """
    if max_rows is None or dataset.n_rows <= int(max_rows):
        return dataset
    keep = numpy.sort(numpy.random.default_rng(int(seed)).choice(dataset.n_rows, size=int(max_rows), replace=False))
    logger("alstop.harness.subsample_rows: keeping", len(keep), "of", dataset.n_rows, "rows of", dataset.name, loglevel=1)
    return dataset.subset(keep)


def load_dataset(path, format=None, label_column=None, name=None, max_rows=None, seed=0, n_features=None):
    """
    Load a dataset file.

    Args:
      format: 'csv' or 'svmlight'; guessed from the file extension when omitted.
      label_column: CSV only, column name or 0-based position of the label (default: last column).
      max_rows: keep a seeded uniform subsample of at most this many rows.
    """
    if format is None:
        format = guess_format(path)
    if format == 'csv':
        dataset = read_csv(path, label_column=label_column, name=name)
    elif format == 'svmlight':
        dataset = read_svmlight(path, n_features=n_features, name=name)
    else:
        raise DataError("alstop.harness.load_dataset: unknown format " + repr(format))
    logger("alstop.harness.load_dataset:", dataset.name, dataset.n_rows, "rows,", dataset.n_features, "features,",
           dataset.n_classes, "classes", "(sparse)" if dataset.is_sparse else "", loglevel=1)
    return subsample_rows(dataset, max_rows, seed)


def generate_synthetic(n_classes=2, per_class=500, separation=3.0, seed=0, clusters_per_class=1, n_features=2, name=None):
    """
    Gaussian blobs with unit standard deviation. Cluster q of class c sits at grid cell
    i = q * n_classes + c of a square grid with spacing *separation* in the first two features, so
    several clusters per class interleave like a checkerboard.
    """
    if int(n_classes) < 2 or int(per_class) < 1 or int(clusters_per_class) < 1 or int(n_features) < 1:
        raise DataError("alstop.harness.generate_synthetic: need n_classes >= 2 and positive per_class, clusters_per_class, n_features")
    if float(separation) < 0:
        raise DataError("alstop.harness.generate_synthetic: separation must be >= 0")
    n_classes, per_class, clusters_per_class, n_features = int(n_classes), int(per_class), int(clusters_per_class), int(n_features)
    rng = numpy.random.default_rng(int(seed))
    cells = n_classes * clusters_per_class
    width = cells if n_features == 1 else int(numpy.ceil(numpy.sqrt(cells)))
    X, y = [], []
    for c in range(n_classes):
        counts = numpy.full(clusters_per_class, per_class // clusters_per_class)
        counts[:per_class % clusters_per_class] += 1
        for q in range(clusters_per_class):
            i = q * n_classes + c
            center = numpy.zeros(n_features)
            center[0] = (i % width) * float(separation)
            if n_features > 1:
                center[1] = (i // width) * float(separation)
            X.append(center + rng.standard_normal((counts[q], n_features)))
            y += [c] * int(counts[q])
    X = numpy.vstack(X)
    y = numpy.array(y, dtype=numpy.int64)
    perm = rng.permutation(len(y))
    if name is None:
        name = "synthetic-%dc-%dx%d-s%g" % (n_classes, clusters_per_class, per_class, float(separation))
    return Dataset.create(name, X[perm], y[perm], list(range(n_classes)), [str(c) for c in range(n_classes)])
