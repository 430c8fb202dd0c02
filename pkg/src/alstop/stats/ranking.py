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
Rank-based comparison of several criteria over many matched problems: the Friedman test and the
Nemenyi critical difference, and the data for a critical-difference diagram.
"""
import math

import numpy
import scipy.stats

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import StatsError

# Critical values q_alpha / sqrt(2) of the studentized range statistic at alpha = 0.05 for k = 2..20
# compared groups (infinite degrees of freedom)
NEMENYI_Q_005 = {
    2: 1.959964233, 3: 2.343700476, 4: 2.569032073, 5: 2.727774717, 6: 2.849705382, 7: 2.948319908,
    8: 3.030878867, 9: 3.10173026, 10: 3.16368342, 11: 3.218653901, 12: 3.268003591, 13: 3.312738701,
    14: 3.353617959, 15: 3.391230382, 16: 3.426041249, 17: 3.458424619, 18: 3.488684546,
    19: 3.517072762, 20: 3.543799277,
}


class RankMatrix(AlstopObject):

    """
    Rows are matched problems (e.g. dataset x split), columns are criteria, entries are costs
    (lower is better). Ranks are taken per row, 1 for the lowest cost, ties sharing their average rank.
    """

    @alstop_typed_init({'problems': [str], 'criteria': [str], 'values': [[float]]})
    def __init__(self, problems, criteria, values):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.problems = problems
        self.criteria = criteria
        self.values = values

    @classmethod
    def create(cls, values, criteria=None, problems=None):
        values = numpy.array(values, dtype=numpy.float64)
        if values.ndim != 2:
            raise StatsError("alstop.stats.RankMatrix.create: values must be a matrix")
        if not numpy.all(numpy.isfinite(values)):
            raise StatsError("alstop.stats.RankMatrix.create: missing or non-finite entries")
        n, k = values.shape
        if criteria is None:
            criteria = ["c" + str(i) for i in range(k)]
        if problems is None:
            problems = ["p" + str(i) for i in range(n)]
        if len(criteria) != k or len(problems) != n:
            raise StatsError("alstop.stats.RankMatrix.create: labels do not match the matrix shape " + str(values.shape))
        values.setflags(write=False)
        return cls([str(x) for x in problems], [str(x) for x in criteria], values)

    @property
    def shape(self):
        return self.values.shape

    @property
    def ranks(self):
        return scipy.stats.rankdata(self.values, method='average', axis=1)

    @property
    def mean_ranks(self):
        return self.ranks.mean(axis=0)


def _check_dims(matrix, where):
    n, k = matrix.shape
    if k < 2 or n < 2:
        raise StatsError(where + ": need at least 2 criteria and 2 problems, got " + str(k) + " and " + str(n))


def friedman(matrix):
    """
    Friedman chi-square statistic from the per-row average ranks,

        12 N / (k (k+1)) * (sum_j R_j^2 - k (k+1)^2 / 4)

    with R_j the mean rank of criterion j, and its chi-square (k-1 degrees of freedom) p-value.
    """
    _check_dims(matrix, "alstop.stats.friedman")
    n, k = matrix.shape
    R = matrix.mean_ranks
    stat = 12.0 * n / (k * (k + 1.0)) * (numpy.sum(R * R) - k * (k + 1.0)**2 / 4.0)
    stat = max(0.0, float(stat))
    p = float(scipy.stats.chi2.sf(stat, k - 1))
    return stat, p


def nemenyi_cd(k, n, alpha=0.05):
    """
    Nemenyi critical difference q_alpha(k) * sqrt(k (k+1) / (6 N)) for k criteria over N problems.
    Only alpha = 0.05 and 2 <= k <= 20 are tabulated.
    """
    if abs(alpha - 0.05) > 1e-12:
        raise StatsError("alstop.stats.nemenyi_cd: only alpha = 0.05 is supported, got " + str(alpha))
    if k not in NEMENYI_Q_005:
        raise StatsError("alstop.stats.nemenyi_cd: k must be between 2 and 20, got " + str(k))
    if n < 1:
        raise StatsError("alstop.stats.nemenyi_cd: need at least one problem")
    return NEMENYI_Q_005[k] * math.sqrt(k * (k + 1.0) / (6.0 * n))


def cd_groups(sorted_ranks, cd):
    """
    Maximal runs of consecutive criteria (in rank order) whose mean ranks differ by less than *cd*.
    Returns (first, last) position pairs; a criterion different from all others forms its own group.
    """
    groups = []
    last_end = -1
    m = len(sorted_ranks)
    for i in range(m):
        j = i
        while j + 1 < m and sorted_ranks[j + 1] - sorted_ranks[i] < cd:
            j += 1
        if j > last_end:
            groups.append((i, j))
            last_end = j
    return groups


def cd_diagram_data(matrix, alpha=0.05):
    """
    Everything a critical-difference diagram shows: criteria in mean-rank order, their mean ranks,
    the critical difference, the Friedman result and the groups of criteria that are not
    significantly different. Grouping is only done when the Friedman test rejects at *alpha*;
    otherwise all criteria form one group.
    """
    _check_dims(matrix, "alstop.stats.cd_diagram_data")
    n, k = matrix.shape
    stat, p = friedman(matrix)
    cd = nemenyi_cd(k, n, alpha)
    mean_ranks = matrix.mean_ranks
    order = numpy.argsort(mean_ranks, kind='stable')
    names = [matrix.criteria[i] for i in order]
    ranks = [float(mean_ranks[i]) for i in order]
    if p < alpha:
        groups = [names[a:b + 1] for a, b in cd_groups(ranks, cd)]
    else:
        groups = [list(names)]
    return {'criteria': names, 'mean_ranks': ranks, 'cd': cd, 'friedman_statistic': stat,
            'friedman_p': p, 'alpha': alpha, 'problems': n, 'groups': groups}
