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
Report exports built from evaluation results: Pareto data and plot, cost-region maps (pooled and
per dataset), correlation tables and critical-difference diagram data.
"""
import os

import numpy

from alstop.core.basic import mkdir_p
from alstop.core.console import logger, warn
from alstop.core.errors import CostError
from alstop.core.tabular import write_csv, write_json
from alstop.cost.costio import region_grid_to_csv, region_grid_to_json
from alstop.cost.outcomes import apply_treatment, outcomes_from_rows
from alstop.cost.pareto import pareto_mask
from alstop.cost.regions import region_map, cost_matrix
from alstop.graphics.matplotlib import pareto_plot, region_plot, cd_plot, save_figure
from alstop.harness.evaluation import SUMMARY_FIELDS, summarize
from alstop.stats.ranking import cd_diagram_data

PARETO_FIELDS = ('criterion', 'runs', 'stops', 'mean_labels', 'labels_lo', 'labels_hi', 'mean_accuracy',
                 'accuracy_lo', 'accuracy_hi', 'frontier')


def pareto_points(outcomes, treatment='penalize'):
    """
    Per criterion: mean labels and accuracy over its runs after *treatment*, their 2.5% and 97.5%
    percentiles, and whether the mean point is on the Pareto frontier of all criteria.
    """
    stops = dict((o.criterion, o.stops) for o in outcomes)
    treated = [o for o in apply_treatment(outcomes, treatment) if len(o.runs) > 0]
    points = []
    for o in treated:
        j, a = o.labels, o.accuracies
        points.append({'criterion': o.criterion, 'runs': len(o.runs), 'stops': stops[o.criterion],
                       'mean_labels': float(numpy.mean(j)), 'labels_lo': float(numpy.percentile(j, 2.5)),
                       'labels_hi': float(numpy.percentile(j, 97.5)), 'mean_accuracy': float(numpy.mean(a)),
                       'accuracy_lo': float(numpy.percentile(a, 2.5)), 'accuracy_hi': float(numpy.percentile(a, 97.5))})
    if points:
        mask = pareto_mask([p['mean_labels'] for p in points], [p['mean_accuracy'] for p in points])
        for p, keep in zip(points, mask):
            p['frontier'] = bool(keep)
    return points


def rank_data(rows, params, treatment='penalize', alpha=0.05, model=None):
    """
    Critical-difference diagram data for the per-run costs of all criteria under one scenario.
    """
    outcomes = outcomes_from_rows(rows, model=model)
    return cd_diagram_data(cost_matrix(outcomes, params, treatment), alpha)


def _safe(name):
    return "".join(ch if ch.isalnum() or ch in '-_.' else '_' for ch in name)


def write_report(rows, directory, treatment='penalize', alpha=None, nm_axis=None, l_axis=None, model=None, figures=True):
    """
    Write pareto.csv/json, regions.csv/json (pooled and one set per dataset), correlations.csv and
    the matching SVG figures into *directory*. Returns the list of files written.
    """
    mkdir_p(directory)
    written = []

    def out(name):
        path = os.path.join(directory, name)
        written.append(path)
        return path

    outcomes = outcomes_from_rows(rows, model=model)
    points = pareto_points(outcomes, treatment)
    write_csv(points, PARETO_FIELDS, out('pareto.csv'))
    write_json({'treatment': treatment, 'model': model, 'points': points}, out('pareto.json'))
    if figures and points:
        save_figure(pareto_plot(points, title='labels vs accuracy (' + treatment + ')'), out('pareto.svg'))

    datasets = sorted(set(r['dataset'] for r in rows if not r.get('skipped')))
    for dataset in [None] + datasets:
        suffix = '' if dataset is None else '_' + _safe(dataset)
        try:
            grid = region_map(outcomes, nm_axis, l_axis, treatment, alpha, dataset=dataset)
        except CostError as e:
            warn("no region map", "" if dataset is None else "for " + dataset, ":", e)
            continue
        region_grid_to_csv(grid, out('regions' + suffix + '.csv'))
        region_grid_to_json(grid, out('regions' + suffix + '.json'))
        if figures:
            save_figure(region_plot(grid, title=None if dataset is None else dataset + ' (' + treatment + ')'), out('regions' + suffix + '.svg'))

    chosen = [r for r in rows if model is None or r['model'] == model]
    write_csv(summarize(chosen), SUMMARY_FIELDS, out('correlations.csv'))
    logger("alstop.harness.write_report: wrote", len(written), "files to", directory, loglevel=1)
    return written


def write_rank(data, directory, figures=True):
    mkdir_p(directory)
    write_json(data, os.path.join(directory, 'cd_diagram.json'))
    if figures:
        save_figure(cd_plot(data), os.path.join(directory, 'cd_diagram.svg'))
