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
One-vs-rest linear classifier.

Each class gets an L2-regularized linear scorer (logistic or squared hinge loss, unregularized bias)
trained by deterministic full-batch accelerated gradient descent with a fixed step 1/L, where L is an
upper bound of the loss gradient's Lipschitz constant computed from the Frobenius norm of the
(scaled) design matrix. Class posteriors are the softmax of the per-class decision values.
Confidence is tanh(margin/2) of the decision margin between the two best classes: 0 on the
decision boundary, approaching 1 far from it.
"""
import numpy
import scipy.sparse
import scipy.special

from alstop.learners.scaling import fit_scaler, apply_scaler, softmax


def _frobenius_sq(X):
    if scipy.sparse.issparse(X):
        return float(X.multiply(X).sum())
    return float(numpy.sum(X * X))


def _loss_gradient(X, Y, W, b, loss, reg):
    n = X.shape[0]
    Z = numpy.asarray(X @ W) + b[numpy.newaxis, :]
    if loss == 'logistic':
        G = -Y * scipy.special.expit(-Y * Z) / n
    else:
        margin = numpy.maximum(0.0, 1.0 - Y * Z)
        G = -2.0 * Y * margin / n
    gW = numpy.asarray(X.T @ G) + reg * W
    gb = G.sum(axis=0)
    return gW, gb


def train(X, y, n_classes, hyper, seed):
    center, scale = fit_scaler(X)
    Xs = apply_scaler(X, center, scale)
    n, d = Xs.shape
    Y = numpy.where(y[:, numpy.newaxis] == numpy.arange(n_classes)[numpy.newaxis, :], 1.0, -1.0)
    reg = hyper['regularization']
    curvature = 0.25 if hyper['loss'] == 'logistic' else 2.0
    lipschitz = curvature * (_frobenius_sq(Xs) + n) / n + reg
    step = 1.0 / lipschitz

    W = numpy.zeros((d, n_classes))
    b = numpy.zeros(n_classes)
    VW, Vb = W, b
    t = 1.0
    for _ in range(hyper['iterations']):
        gW, gb = _loss_gradient(Xs, Y, VW, Vb, hyper['loss'], reg)
        W_next = VW - step * gW
        b_next = Vb - step * gb
        t_next = (1.0 + numpy.sqrt(1.0 + 4.0 * t * t)) / 2.0
        momentum = (t - 1.0) / t_next
        VW = W_next + momentum * (W_next - W)
        Vb = b_next + momentum * (b_next - b)
        W, b, t = W_next, b_next, t_next
    return {'center': center, 'scale': scale, 'weights': W, 'bias': b}


def decision_function(params, X):
    Xs = apply_scaler(X, params['center'], params['scale'])
    return numpy.asarray(Xs @ params['weights']) + params['bias'][numpy.newaxis, :]


def posterior(params, X):
    return softmax(decision_function(params, X))


def confidence(params, X):
    Z = numpy.sort(decision_function(params, X), axis=1)
    margin = Z[:, -1] - Z[:, -2]
    return numpy.tanh(margin / 2.0)
