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
Cost-optimal criterion selection: which criterion has the lowest mean cost, for one fixed scenario
(scenario_rank) or over a grid of scenarios spanned by the n*m product and the label cost (region_map).

Since the cost is linear in accuracy and labels, a criterion's mean cost over its runs equals the
cost of its mean accuracy and mean label count. A cell's winner is reported only when a paired
two-sided Wilcoxon signed-rank test of its per-run costs against those of the runner-up, over the
runs both have, rejects at the significance level; otherwise the cell is indeterminate.
"""
import numpy
import scipy.stats

from alstop.config import config
from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.console import logger
from alstop.core.errors import CostError
from alstop.cost.costmodel import run_costs
from alstop.cost.outcomes import apply_treatment
from alstop.stats.ranking import RankMatrix

INDETERMINATE = 'indeterminate'


def log_axis(start, decades, points):
    """
    *points* log-spaced values from *start* to start * 10**decades.
    """
    if start <= 0 or decades <= 0 or points < 2:
        raise CostError("alstop.cost.log_axis: need start > 0, decades > 0 and at least 2 points")
    return numpy.logspace(numpy.log10(start), numpy.log10(start) + decades, int(points)).tolist()


def default_axes():
    """
    The (nm, l) axes configured in the [cost] section.
    """
    decades = config.get_typed('cost', 'axis_decades', 6.0, float)
    points = config.get_typed('cost', 'axis_points', 25)
    nm_axis = log_axis(config.get_typed('cost', 'nm_axis_start', 1.0), decades, points)
    l_axis = log_axis(config.get_typed('cost', 'l_axis_start', 0.001), decades, points)
    return nm_axis, l_axis


def default_alpha():
    return config.get_typed('cost', 'significance_alpha', 0.05)


class RegionGrid(AlstopObject):

    """
    Winners over a grid of scenarios. Row i is l_axis[i], column k is nm_axis[k]. `best` holds the
    lowest-mean-cost criterion of each cell, `cells` the same or INDETERMINATE when that criterion is
    not significantly better than the runner-up, and `p_values` the test's p-value (None where no
    test could be made).
    """

    @alstop_typed_init({'nm_axis': [float], 'l_axis': [float], 'treatment': str, 'alpha': float,
                        'best': [[str]], 'cells': [[str]], 'p_values': [[float]]})
    def __init__(self, nm_axis, l_axis, treatment, alpha, best, cells, p_values):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.nm_axis = nm_axis
        self.l_axis = l_axis
        self.treatment = treatment
        self.alpha = alpha
        self.best = best
        self.cells = cells
        self.p_values = p_values

    @classmethod
    def create(cls, nm_axis, l_axis, treatment, alpha, best, cells, p_values):
        shape = (len(l_axis), len(nm_axis))
        for name, grid in (('best', best), ('cells', cells), ('p_values', p_values)):
            if len(grid) != shape[0] or any(len(row) != shape[1] for row in grid):
                raise CostError("alstop.cost.RegionGrid.create: " + name + " does not match the axes " + str(shape))
        return cls([float(x) for x in nm_axis], [float(x) for x in l_axis], str(treatment), float(alpha),
                   [list(r) for r in best], [list(r) for r in cells], [list(r) for r in p_values])

    @property
    def shape(self):
        return (len(self.l_axis), len(self.nm_axis))

    def winners(self):
        """
        The criteria that win at least one cell significantly.
        """
        return sorted(set(c for row in self.cells for c in row if c != INDETERMINATE))

    def to_rows(self):
        rows = []
        for i, l in enumerate(self.l_axis):
            for k, nm in enumerate(self.nm_axis):
                rows.append({'nm': nm, 'l': l, 'best': self.best[i][k], 'winner': self.cells[i][k], 'p_value': self.p_values[i][k]})
        return rows


def _order(means_cost, means_labels):
    return sorted(range(len(means_cost)), key=lambda c: (means_cost[c], means_labels[c], c))


def _paired_p(first, second, nm, l):
    """
    Wilcoxon signed-rank p-value for the per-run cost differences of two criteria over their common
    runs, or None when no difference is available to test.
    """
    a_runs = dict((r.key, r) for r in first.runs)
    pairs = [(a_runs[r.key], r) for r in second.runs if r.key in a_runs]
    if len(pairs) == 0:
        return None
    ca = run_costs([p[0].accuracy for p in pairs], [p[0].labels for p in pairs], nm, l)
    cb = run_costs([p[1].accuracy for p in pairs], [p[1].labels for p in pairs], nm, l)
    d = ca - cb
    scale = max(1.0, float(numpy.max(numpy.abs(numpy.concatenate([ca, cb])))))
    d[numpy.abs(d) <= 1e-12 * scale] = 0.0
    if not numpy.any(d != 0):
        return None
    try:
        p = scipy.stats.wilcoxon(d, alternative='two-sided').pvalue
    except ValueError:
        return None
    if not numpy.isfinite(p):
        return None
    return float(p)


def region_map(outcomes, nm_axis=None, l_axis=None, treatment='penalize', significance_alpha=None, dataset=None):
    """
    Determine the cost-optimal criterion in every (nm, l) cell.

    Args:
      outcomes: CriterionOutcome per criterion (before treatment).
      treatment: 'penalize', 'include' or 'exclude' for runs without a stop.
      dataset: restrict to the runs on one dataset (worst values for penalize are then that dataset's).
    """
    if nm_axis is None or l_axis is None:
        default_nm, default_l = default_axes()
        nm_axis = default_nm if nm_axis is None else nm_axis
        l_axis = default_l if l_axis is None else l_axis
    if len(nm_axis) == 0 or len(l_axis) == 0:
        raise CostError("alstop.cost.region_map: empty axis")
    if any(x < 0 for x in list(nm_axis) + list(l_axis)):
        raise CostError("alstop.cost.region_map: axis values must be >= 0")
    alpha = default_alpha() if significance_alpha is None else float(significance_alpha)
    if dataset is not None:
        outcomes = [o.for_dataset(dataset) for o in outcomes]
    outcomes = [o for o in apply_treatment(outcomes, treatment) if len(o.runs) > 0]
    if len(outcomes) < 2:
        raise CostError("alstop.cost.region_map: need at least 2 criteria after the " + treatment + " treatment, got " + str(len(outcomes)))

    mean_a = numpy.array([o.mean_accuracy for o in outcomes])
    mean_j = numpy.array([o.mean_labels for o in outcomes])
    best, cells, p_values = [], [], []
    for l in l_axis:
        brow, crow, prow = [], [], []
        for nm in nm_axis:
            order = _order(run_costs(mean_a, mean_j, nm, l).tolist(), mean_j.tolist())
            first, second = outcomes[order[0]], outcomes[order[1]]
            p = _paired_p(first, second, nm, l)
            brow.append(first.criterion)
            crow.append(first.criterion if p is not None and p < alpha else INDETERMINATE)
            prow.append(p)
        best.append(brow)
        cells.append(crow)
        p_values.append(prow)
    grid = RegionGrid.create(nm_axis, l_axis, treatment, alpha, best, cells, p_values)
    logger("alstop.cost.region_map:", len(outcomes), "criteria,", grid.shape[0] * grid.shape[1], "cells, significant winners:",
           ", ".join(grid.winners()) or "none", loglevel=1)
    return grid


def scenario_rank(outcomes, params, treatment='penalize'):
    """
    Rank criteria by mean cost under one scenario (ties go to fewer mean labels). Returns a list of
    dicts with rank, criterion, mean_cost, mean_accuracy, mean_labels, runs and stops.
    """
    treated = [o for o in apply_treatment(outcomes, treatment) if len(o.runs) > 0]
    if len(treated) == 0:
        raise CostError("alstop.cost.scenario_rank: no criteria left after the " + treatment + " treatment")
    stops = dict((o.criterion, o.stops) for o in outcomes)
    mean_a = numpy.array([o.mean_accuracy for o in treated])
    mean_j = numpy.array([o.mean_labels for o in treated])
    mean_cost = run_costs(mean_a, mean_j, params.nm, params.label_cost)
    ranking = []
    for rank, c in enumerate(_order(mean_cost.tolist(), mean_j.tolist()), start=1):
        o = treated[c]
        ranking.append({'rank': rank, 'criterion': o.criterion, 'mean_cost': float(mean_cost[c]),
                        'mean_accuracy': float(mean_a[c]), 'mean_labels': float(mean_j[c]),
                        'runs': len(o.runs), 'stops': stops[o.criterion]})
    return ranking


def cost_matrix(outcomes, params, treatment='penalize'):
    """
    RankMatrix of per-run costs: one row per (dataset, model, split) run that every remaining criterion
    has, one column per criterion.
    """
    treated = [o for o in apply_treatment(outcomes, treatment) if len(o.runs) > 0]
    if len(treated) == 0:
        raise CostError("alstop.cost.cost_matrix: no criteria left after the " + treatment + " treatment")
    common = set(r.key for r in treated[0].runs)
    for o in treated[1:]:
        common &= set(r.key for r in o.runs)
    keys = sorted(common)
    values = numpy.zeros((len(keys), len(treated)))
    for c, o in enumerate(treated):
        by_key = dict((r.key, r) for r in o.runs)
        runs = [by_key[k] for k in keys]
        values[:, c] = run_costs([r.accuracy for r in runs], [r.labels for r in runs], params.nm, params.label_cost)
    return RankMatrix.create(values, [o.criterion for o in treated], [d + "/" + m + "/" + str(s) if m else d + "/" + str(s) for d, m, s in keys])
