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
Ranked batch-mode uncertainty sampling.

A batch is built one pick at a time. Every remaining candidate x is scored

    score(x) = alpha * (1 - maxsim(x)) + (1 - alpha) * u(x)

where u(x) = 1 - confidence(x) under the current model, maxsim(x) is the largest similarity of x to
the labelled pool plus everything picked so far, and alpha = |remaining| / (|remaining| + |labelled
and picked|). The best-scoring candidate (lowest index on ties) is picked and the similarities
updated before the next pass. With nothing labelled or picked yet, maxsim is taken as 0.
"""
import numpy
import scipy.sparse
import scipy.spatial.distance

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import RunConfigError, RunError
from alstop.learners.model import confidence
from alstop.learners.scaling import to_float_matrix

SIMILARITIES = ('auto', 'cosine', 'euclidean-rbf')

# Rows used for the median-distance bandwidth estimate
BANDWIDTH_SAMPLE = 1000


class QueryConfig(AlstopObject):

    @alstop_typed_init({'batch_size': int, 'similarity': str})
    def __init__(self, batch_size, similarity):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.batch_size = batch_size
        self.similarity = similarity

    @classmethod
    def create(cls, batch_size=10, similarity='auto'):
        """
        Args:
          batch_size: instances per batch (k), at least 1
          similarity: 'cosine', 'euclidean-rbf' or 'auto' (cosine for sparse features, RBF otherwise)
        """
        if int(batch_size) < 1:
            raise RunConfigError("alstop.query.QueryConfig.create: batch_size must be >= 1")
        if similarity not in SIMILARITIES:
            raise RunConfigError("alstop.query.QueryConfig.create: similarity must be one of " + ", ".join(SIMILARITIES))
        return cls(int(batch_size), similarity)


def cosine_similarity(A, B):
    """
    Cosine similarity between the rows of A and B, clipped to [0,1]; all-zero rows have similarity 0.
    """
    def normalized(M):
        if scipy.sparse.issparse(M):
            norms = numpy.sqrt(numpy.asarray(M.multiply(M).sum(axis=1)).ravel())
            inv = numpy.where(norms > 0, 1.0 / numpy.where(norms > 0, norms, 1.0), 0.0)
            return scipy.sparse.diags(inv) @ M
        norms = numpy.sqrt(numpy.sum(M * M, axis=1))
        inv = numpy.where(norms > 0, 1.0 / numpy.where(norms > 0, norms, 1.0), 0.0)
        return M * inv[:, numpy.newaxis]
    S = normalized(A) @ normalized(B).T
    if scipy.sparse.issparse(S):
        S = S.toarray()
    return numpy.clip(numpy.asarray(S), 0.0, 1.0)


def median_bandwidth(X, seed=0):
    """
    Median of the nonzero pairwise euclidean distances among (at most BANDWIDTH_SAMPLE of) the rows
    of X; 1.0 if there are none.
    """
    X = X.toarray() if scipy.sparse.issparse(X) else X
    if X.shape[0] > BANDWIDTH_SAMPLE:
        rows = numpy.random.default_rng(seed).choice(X.shape[0], size=BANDWIDTH_SAMPLE, replace=False)
        X = X[numpy.sort(rows)]
    if X.shape[0] < 2:
        return 1.0
    d = scipy.spatial.distance.pdist(X)
    d = d[d > 0]
    if len(d) == 0:
        return 1.0
    return float(numpy.median(d))


def rbf_similarity(A, B, bandwidth):
    A = A.toarray() if scipy.sparse.issparse(A) else A
    B = B.toarray() if scipy.sparse.issparse(B) else B
    d2 = scipy.spatial.distance.cdist(A, B, 'sqeuclidean')
    return numpy.exp(-d2 / (2.0 * bandwidth * bandwidth))


def ranked_selection(uncertainty, candidate_similarity, labeled_similarity, batch_size, alpha=None):
    """
    The ranked-batch recursion on precomputed quantities.

    Args:
      uncertainty: u(x) per candidate
      candidate_similarity: candidates x candidates similarity matrix
      labeled_similarity: candidates x labelled similarity matrix (may have zero columns)
      batch_size: number of picks
      alpha: fixed blend weight; None for the adaptive |remaining| / (|remaining| + |labelled and picked|)

    Returns the picked candidate positions in pick order.
    """
    uncertainty = numpy.asarray(uncertainty, dtype=numpy.float64)
    n = len(uncertainty)
    n_known = labeled_similarity.shape[1]
    if n_known > 0:
        maxsim = numpy.asarray(labeled_similarity).max(axis=1).astype(numpy.float64)
    else:
        maxsim = numpy.zeros(n)
    available = numpy.ones(n, dtype=bool)
    picks = []
    for _ in range(min(int(batch_size), n)):
        remaining = int(available.sum())
        a = remaining / float(remaining + n_known + len(picks)) if alpha is None else float(alpha)
        score = a * (1.0 - maxsim) + (1.0 - a) * uncertainty
        score = numpy.where(available, score, -numpy.inf)
        best = int(numpy.argmax(score))
        picks.append(best)
        available[best] = False
        maxsim = numpy.maximum(maxsim, candidate_similarity[:, best])
    return picks


def rank_batch(model, candidates, labeled, config, seed=0, candidate_index=None):
    """
    Choose the next batch from *candidates* (feature rows) given the *labeled* feature rows.

    Returns min(batch_size, |candidates|) distinct entries of *candidate_index* (default: candidate
    row positions) in pick order.
    """
    C = to_float_matrix(candidates)
    if C.shape[0] == 0:
        raise RunError("alstop.query.rank_batch: empty candidate set")
    L = to_float_matrix(labeled) if labeled is not None else None
    if L is not None and L.shape[0] == 0:
        L = None
    sparse = scipy.sparse.issparse(C)
    kind = config.similarity
    if kind == 'auto':
        kind = 'cosine' if sparse else 'euclidean-rbf'

    if kind == 'cosine':
        cand_sim = cosine_similarity(C, C)
        lab_sim = cosine_similarity(C, L) if L is not None else numpy.zeros((C.shape[0], 0))
    else:
        pool = C if L is None else (scipy.sparse.vstack([C, L]).tocsr() if sparse else numpy.vstack([C, L]))
        h = median_bandwidth(pool, seed)
        cand_sim = rbf_similarity(C, C, h)
        lab_sim = rbf_similarity(C, L, h) if L is not None else numpy.zeros((C.shape[0], 0))

    u = 1.0 - confidence(model, C)
    picks = ranked_selection(u, cand_sim, lab_sim, config.batch_size)
    if candidate_index is None:
        return numpy.array(picks, dtype=numpy.int64)
    return numpy.asarray(candidate_index, dtype=numpy.int64)[picks]
