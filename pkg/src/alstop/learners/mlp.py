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
Single-hidden-layer neural network: tanh hidden units, softmax output, mean cross-entropy loss with
L2 weight decay, trained full-batch with Adam for a fixed number of epochs from a seeded Glorot
initialization.
"""
import numpy

from alstop.learners.scaling import fit_scaler, apply_scaler, softmax

ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8

WEIGHT_NAMES = ('W1', 'b1', 'W2', 'b2')


def init_weights(n_features, n_hidden, n_classes, rng):
    lim1 = numpy.sqrt(6.0 / (n_features + n_hidden))
    lim2 = numpy.sqrt(6.0 / (n_hidden + n_classes))
    return {'W1': rng.uniform(-lim1, lim1, size=(n_features, n_hidden)),
            'b1': numpy.zeros(n_hidden),
            'W2': rng.uniform(-lim2, lim2, size=(n_hidden, n_classes)),
            'b2': numpy.zeros(n_classes)}


def forward(weights, Xs):
    H = numpy.tanh(numpy.asarray(Xs @ weights['W1']) + weights['b1'][numpy.newaxis, :])
    Z = H @ weights['W2'] + weights['b2'][numpy.newaxis, :]
    return H, Z


def loss_and_gradient(weights, Xs, y, n_classes, reg):
    """
    Training loss and its analytic gradient with respect to every weight array.

    Args:
      weights: dict with W1 (d x h), b1 (h), W2 (h x C), b2 (C)
      Xs: scaled feature rows
      y: class positions 0..C-1
      reg: L2 coefficient (applied to W1 and W2, not to the biases)
    """
    n = Xs.shape[0]
    H, Z = forward(weights, Xs)
    P = softmax(Z)
    Y = numpy.eye(n_classes)[y]
    logp = Z - Z.max(axis=1, keepdims=True)
    logp = logp - numpy.log(numpy.exp(logp).sum(axis=1, keepdims=True))
    loss = -numpy.sum(Y * logp) / n + 0.5 * reg * (numpy.sum(weights['W1']**2) + numpy.sum(weights['W2']**2))

    dZ = (P - Y) / n
    dH = (dZ @ weights['W2'].T) * (1.0 - H * H)
    grads = {'W2': H.T @ dZ + reg * weights['W2'],
             'b2': dZ.sum(axis=0),
             'W1': numpy.asarray(Xs.T @ dH) + reg * weights['W1'],
             'b1': dH.sum(axis=0)}
    return loss, grads


def train(X, y, n_classes, hyper, seed):
    center, scale = fit_scaler(X)
    Xs = apply_scaler(X, center, scale)
    rng = numpy.random.default_rng(seed)
    weights = init_weights(Xs.shape[1], hyper['hidden'], n_classes, rng)
    m = dict((k, numpy.zeros_like(v)) for k, v in weights.items())
    v = dict((k, numpy.zeros_like(w)) for k, w in weights.items())
    lr = hyper['learning_rate']
    for epoch in range(1, hyper['epochs'] + 1):
        _, grads = loss_and_gradient(weights, Xs, y, n_classes, hyper['regularization'])
        for k in WEIGHT_NAMES:
            m[k] = ADAM_BETA1 * m[k] + (1.0 - ADAM_BETA1) * grads[k]
            v[k] = ADAM_BETA2 * v[k] + (1.0 - ADAM_BETA2) * grads[k]**2
            mhat = m[k] / (1.0 - ADAM_BETA1**epoch)
            vhat = v[k] / (1.0 - ADAM_BETA2**epoch)
            weights[k] = weights[k] - lr * mhat / (numpy.sqrt(vhat) + ADAM_EPS)
    params = {'center': center, 'scale': scale}
    params.update(weights)
    return params


def posterior(params, X):
    Xs = apply_scaler(X, params['center'], params['scale'])
    _, Z = forward(params, Xs)
    return softmax(Z)


def confidence(params, X):
    return posterior(params, X).max(axis=1)
