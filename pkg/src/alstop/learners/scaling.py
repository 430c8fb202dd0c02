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
Feature scaling shared by the gradient-trained learners.

Dense features are standardized (zero mean, unit variance per column, from the training rows).
Sparse features are only divided by the per-column maximum absolute value, so that they stay sparse.
"""
import numpy
import scipy.sparse
import scipy.special


def fit_scaler(X):
    if scipy.sparse.issparse(X):
        scale = numpy.asarray(abs(X).max(axis=0).todense()).ravel()
        center = numpy.zeros(X.shape[1])
    else:
        center = X.mean(axis=0)
        scale = X.std(axis=0)
    scale = numpy.where(scale > 0, scale, 1.0)
    return center, scale


def apply_scaler(X, center, scale):
    if scipy.sparse.issparse(X):
        return scipy.sparse.csr_matrix(X.multiply(1.0 / scale[numpy.newaxis, :]))
    return (X - center[numpy.newaxis, :]) / scale[numpy.newaxis, :]


def to_float_matrix(X):
    if scipy.sparse.issparse(X):
        return scipy.sparse.csr_matrix(X, dtype=numpy.float64)
    X = numpy.asarray(X, dtype=numpy.float64)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    return X


def softmax(Z):
    return scipy.special.softmax(Z, axis=1)
