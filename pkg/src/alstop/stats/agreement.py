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
Agreement and correlation statistics: Cohen's kappa between label vectors and Pearson's product
moment correlation between real series.
"""
import numpy
import scipy.stats
from sklearn.metrics import cohen_kappa_score

from alstop.core.errors import StatsError, UndefinedCorrelation


def cohen_kappa(p, q):
    """
    Cohen's kappa, (p_o - p_e) / (1 - p_e), of two equally long label vectors.

    p_o is the fraction of positions where the vectors agree and p_e the agreement expected by chance
    from the two marginal label distributions. When both vectors are the same constant vector
    (p_e = p_o = 1) kappa is 1.
    """
    p = numpy.asarray(p).ravel()
    q = numpy.asarray(q).ravel()
    if len(p) != len(q):
        raise StatsError("alstop.stats.cohen_kappa: vectors differ in length (" + str(len(p)) + " vs " + str(len(q)) + ")")
    if len(p) == 0:
        raise StatsError("alstop.stats.cohen_kappa: empty vectors")
    labels = numpy.unique(numpy.concatenate([p, q]))
    # p_e = 1 only when both vectors hold one and the same label
    if len(labels) == 1:
        return 1.0
    return float(cohen_kappa_score(p, q, labels=labels))


def pearson(x, y):
    """
    Pearson correlation of two equally long real vectors (length >= 2). Raises UndefinedCorrelation
    when either vector is constant.
    """
    x = numpy.asarray(x, dtype=numpy.float64).ravel()
    y = numpy.asarray(y, dtype=numpy.float64).ravel()
    if len(x) != len(y):
        raise StatsError("alstop.stats.pearson: vectors differ in length (" + str(len(x)) + " vs " + str(len(y)) + ")")
    if len(x) < 2:
        raise StatsError("alstop.stats.pearson: need at least 2 points")
    if numpy.all(x == x[0]) or numpy.all(y == y[0]):
        raise UndefinedCorrelation("alstop.stats.pearson: correlation is undefined for a constant series")
    r, _ = scipy.stats.pearsonr(x, y)
    return float(numpy.clip(r, -1.0, 1.0))
