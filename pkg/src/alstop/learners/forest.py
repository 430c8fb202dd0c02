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
Random forest of Gini-impurity decision trees.

Each tree is grown on a bootstrap sample of the training rows and considers floor(sqrt(d)) randomly
chosen features at every split. A leaf stores the class fractions of the training rows that reach it;
the forest posterior is the mean of the leaf distributions over all trees.

All trees are stored in flat node arrays (feature, threshold, left, right, value) with one root index
per tree, so that prediction can walk every tree for every row at once. Sparse features are never
densified: training reads CSC columns and prediction reads single CSR entries.
"""
import numpy
import scipy.sparse


def _column(X, rows, f):
    """
    Values of feature *f* on *rows*. Sparse input is expected in CSC form.
    """
    if scipy.sparse.issparse(X):
        return X[rows, f].toarray().ravel()
    return X[rows, f]


def _entries(X, rows, cols):
    """
    X[rows[i], cols[i]] for every i. Sparse input is expected in CSR form.
    """
    if scipy.sparse.issparse(X):
        return numpy.asarray(X[rows, cols]).ravel()
    return X[rows, cols]


def _best_split(x, y_onehot):
    """
    Best threshold on a single feature column. Returns (weighted gini, threshold) or None when the
    column is constant.
    """
    order = numpy.argsort(x, kind='stable')
    xs = x[order]
    counts = numpy.cumsum(y_onehot[order], axis=0)
    n = len(xs)
    valid = numpy.nonzero(xs[:-1] < xs[1:])[0]
    if len(valid) == 0:
        return None
    total = counts[-1]
    left = counts[valid]
    right = total[numpy.newaxis, :] - left
    n_left = (valid + 1).astype(numpy.float64)
    n_right = n - n_left
    gini_left = 1.0 - numpy.sum((left / n_left[:, numpy.newaxis])**2, axis=1)
    gini_right = 1.0 - numpy.sum((right / n_right[:, numpy.newaxis])**2, axis=1)
    weighted = (n_left * gini_left + n_right * gini_right) / n
    best = int(numpy.argmin(weighted))
    pos = valid[best]
    threshold = (xs[pos] + xs[pos + 1]) / 2.0
    if threshold >= xs[pos + 1]:
        threshold = xs[pos]
    return weighted[best], threshold


def _grow_tree(X, y, n_classes, rng, min_samples_split, max_depth, nodes):
    n_features = X.shape[1]
    n_try = max(1, int(numpy.floor(numpy.sqrt(n_features))))
    onehot = numpy.eye(n_classes)[y]

    root = len(nodes['feature'])
    stack = [(numpy.arange(len(y)), 0, None, None)]
    while stack:
        rows, depth, parent, side = stack.pop()
        node = len(nodes['feature'])
        if parent is not None:
            nodes[side][parent] = node
        value = onehot[rows].sum(axis=0) / len(rows)
        nodes['feature'].append(-1)
        nodes['threshold'].append(0.0)
        nodes['left'].append(-1)
        nodes['right'].append(-1)
        nodes['value'].append(value)

        if len(rows) < min_samples_split or numpy.max(value) == 1.0 or (max_depth > 0 and depth >= max_depth):
            continue
        best = None
        for f in rng.choice(n_features, size=n_try, replace=False):
            split = _best_split(_column(X, rows, f), onehot[rows])
            if split is not None and (best is None or split[0] < best[0]):
                best = (split[0], split[1], int(f))
        if best is None:
            continue
        _, threshold, f = best
        go_left = _column(X, rows, f) <= threshold
        nodes['feature'][node] = f
        nodes['threshold'][node] = threshold
        # Right child pushed first so that the left subtree is numbered first
        stack.append((rows[~go_left], depth + 1, node, 'right'))
        stack.append((rows[go_left], depth + 1, node, 'left'))
    return root


def train(X, y, n_classes, hyper, seed):
    if scipy.sparse.issparse(X):
        X = scipy.sparse.csc_matrix(X)
    rng = numpy.random.default_rng(seed)
    nodes = {'feature': [], 'threshold': [], 'left': [], 'right': [], 'value': []}
    roots = []
    n = X.shape[0]
    for _ in range(hyper['trees']):
        sample = rng.integers(0, n, size=n)
        roots.append(_grow_tree(X[sample], y[sample], n_classes, rng, hyper['min_samples_split'], hyper['max_depth'], nodes))
    return {'feature': numpy.array(nodes['feature'], dtype=numpy.int64),
            'threshold': numpy.array(nodes['threshold'], dtype=numpy.float64),
            'left': numpy.array(nodes['left'], dtype=numpy.int64),
            'right': numpy.array(nodes['right'], dtype=numpy.int64),
            'value': numpy.array(nodes['value'], dtype=numpy.float64).reshape(-1, n_classes),
            'roots': numpy.array(roots, dtype=numpy.int64)}


def leaf_distributions(params, X):
    """
    Leaf class distribution reached in every tree, shape (trees, rows, classes).
    """
    if scipy.sparse.issparse(X):
        X = scipy.sparse.csr_matrix(X)
    n = X.shape[0]
    node = numpy.repeat(params['roots'][:, numpy.newaxis], n, axis=1)
    rows = numpy.broadcast_to(numpy.arange(n)[numpy.newaxis, :], node.shape)
    while True:
        feature = params['feature'][node]
        inner = feature >= 0
        if not numpy.any(inner):
            break
        fvals = _entries(X, rows[inner], feature[inner])
        go_left = fvals <= params['threshold'][node[inner]]
        node[inner] = numpy.where(go_left, params['left'][node[inner]], params['right'][node[inner]])
    return params['value'][node]


def posterior(params, X):
    return leaf_distributions(params, X).mean(axis=0)


def confidence(params, X):
    leaves = leaf_distributions(params, X)
    predicted = numpy.argmax(leaves.mean(axis=0), axis=1)
    return leaves[:, numpy.arange(leaves.shape[1]), predicted].mean(axis=0)
