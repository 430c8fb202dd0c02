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
Offline evaluation of all stopping criteria over a set of finished run traces, and the stop-rate and
correlation summaries derived from it.
"""
import glob, json, os
from collections import OrderedDict

import numpy
from joblib import Parallel, delayed

from alstop.core.console import logger, warn
from alstop.core.crypto import derive_seed
from alstop.core.errors import CriterionError, CriterionNotApplicable, UndefinedCorrelation, DataError
from alstop.core.tabular import write_csv, write_json
from alstop.criteria.evaluate import evaluate_criterion, metric_accuracy_correlation
from alstop.data.traceio import read_trace
from alstop.harness.experiment import ExperimentConfig
from alstop.harness.runner import MANIFEST_FORMAT, TRACE_SUFFIX

RESULT_FIELDS = ('dataset', 'model', 'seed', 'criterion', 'skipped', 'reason', 'stopped', 'stop_round',
                 'labels_used', 'accuracy', 'correlation')
SUMMARY_FIELDS = ('scope', 'criterion', 'dataset', 'model', 'runs', 'stops', 'stop_rate', 'mean_labels',
                  'mean_accuracy', 'correlation_mean', 'correlation_se', 'correlation_count')


def read_traces(directory):
    """
    Read every trace file under *directory* (or its traces/ subdirectory) in file-name order. Traces
    of aborted or unfinished runs are left out.
    """
    trace_dir = os.path.join(directory, 'traces') if os.path.isdir(os.path.join(directory, 'traces')) else directory
    paths = sorted(glob.glob(os.path.join(trace_dir, '*' + TRACE_SUFFIX)) + glob.glob(os.path.join(trace_dir, '*' + TRACE_SUFFIX + '.gz')))
    if len(paths) == 0:
        raise DataError("alstop.harness.read_traces: no trace files in " + str(trace_dir))
    traces = []
    for path in paths:
        trace = read_trace(path)
        if trace.status != 'complete':
            logger("alstop.harness.read_traces: leaving out", os.path.basename(path), "with status", trace.status, loglevel=1)
            continue
        traces.append(trace)
    return traces


def read_manifest(directory):
    path = os.path.join(directory, 'manifest.json')
    if not os.path.exists(path):
        return None
    with open(path, encoding='utf-8') as f:
        manifest = json.load(f)
    if manifest.get('format') != MANIFEST_FORMAT:
        raise DataError("alstop.harness.read_manifest: " + path + " is not an alstop manifest")
    return manifest


def evaluate_trace(trace, criteria, dataset=None):
    """
    One result row per criterion for *trace*: the StopDecision fields and the metric/accuracy
    correlation, or a skipped row when the criterion cannot be evaluated on this trace.
    """
    rows = []
    for spec in criteria:
        row = OrderedDict([('dataset', trace.dataset), ('model', trace.model), ('seed', trace.seed), ('criterion', spec.id)])
        try:
            decision = evaluate_criterion(trace, spec, dataset)
        except CriterionNotApplicable as e:
            row.update(skipped=True, reason='not applicable')
            logger(str(e), loglevel=2)
            rows.append(row)
            continue
        except CriterionError as e:
            row.update(skipped=True, reason=str(e))
            rows.append(row)
            continue
        row.update(skipped=False, reason='', stopped=decision.stopped, stop_round=decision.stop_round,
                   labels_used=decision.labels_used, accuracy=decision.accuracy)
        try:
            row['correlation'] = metric_accuracy_correlation(trace, spec, dataset)
        except UndefinedCorrelation:
            row['correlation'] = None
        rows.append(row)
    return rows


def _mean_se(values):
    values = [v for v in values if v is not None]
    if len(values) == 0:
        return None, None, 0
    mean = float(numpy.mean(values))
    se = float(numpy.std(values, ddof=1) / numpy.sqrt(len(values))) if len(values) > 1 else None
    return mean, se, len(values)


def _summary_row(scope, criterion, dataset, model, rows):
    evaluated = [r for r in rows if not r['skipped']]
    stops = sum(1 for r in evaluated if r['stopped'])
    datasets = sorted(set(r['dataset'] for r in evaluated))
    if len(datasets) > 1:
        # across datasets: one mean correlation per dataset
        per_dataset = [_mean_se([r['correlation'] for r in evaluated if r['dataset'] == d])[0] for d in datasets]
        mean, se, count = _mean_se(per_dataset)
    else:
        mean, se, count = _mean_se([r['correlation'] for r in evaluated])
    return OrderedDict([('scope', scope), ('criterion', criterion), ('dataset', dataset), ('model', model),
                        ('runs', len(evaluated)), ('stops', stops),
                        ('stop_rate', stops / float(len(evaluated)) if evaluated else None),
                        ('mean_labels', float(numpy.mean([r['labels_used'] for r in evaluated])) if evaluated else None),
                        ('mean_accuracy', float(numpy.mean([r['accuracy'] for r in evaluated])) if evaluated else None),
                        ('correlation_mean', mean), ('correlation_se', se), ('correlation_count', count)])


def summarize(rows):
    """
    Stop rate, mean labels/accuracy at the stop, and mean +- standard error of the metric/accuracy
    correlation per criterion: pooled over everything, per dataset, and per model. Groups whose
    rows were all skipped are left out.
    """
    criteria = list(OrderedDict.fromkeys(r['criterion'] for r in rows))
    datasets = sorted(set(r['dataset'] for r in rows))
    models = sorted(set(r['model'] for r in rows))
    summary = []
    for c in criteria:
        mine = [r for r in rows if r['criterion'] == c]
        groups = [('pooled', '*', '*', mine)]
        groups += [('dataset', d, '*', [r for r in mine if r['dataset'] == d]) for d in datasets]
        groups += [('model', '*', m, [r for r in mine if r['model'] == m]) for m in models]
        for scope, d, m, group in groups:
            if any(not r['skipped'] for r in group):
                summary.append(_summary_row(scope, c, d, m, group))
    return summary


def evaluate_all(traces, criteria, datasets=None, workers=1):
    """
    Evaluate every criterion on every trace.

    Args:
      datasets: dict of dataset name -> Dataset, needed by criteria that look at the features
        (SSNCut); without it those criteria are reported as skipped.

    Returns (rows, summary): the per (trace, criterion) result rows in trace order, and summarize(rows).
    """
    traces = list(traces)
    if len(traces) == 0:
        raise DataError("alstop.harness.evaluate_all: no traces to evaluate")
    datasets = datasets or {}
    per_trace = Parallel(n_jobs=workers, prefer="processes")(
        delayed(evaluate_trace)(trace, criteria, datasets.get(trace.dataset)) for trace in traces)
    rows = [row for trace_rows in per_trace for row in trace_rows]
    skipped = sum(1 for r in rows if r['skipped'])
    logger("alstop.harness.evaluate_all:", len(traces), "traces,", len(criteria), "criteria,", skipped, "skipped pairs", loglevel=1)
    return rows, summarize(rows)


def write_results(rows, summary, directory):
    write_csv(rows, RESULT_FIELDS, os.path.join(directory, 'results.csv'))
    write_csv(summary, SUMMARY_FIELDS, os.path.join(directory, 'summary.csv'))
    write_json({'results': rows, 'summary': summary}, os.path.join(directory, 'summary.json'))


def read_results(directory):
    """
    Read back the result rows written by write_results.
    """
    path = os.path.join(directory, 'summary.json')
    if not os.path.exists(path):
        raise DataError("alstop.harness.read_results: no evaluation results in " + str(directory) + ", run 'alstop evaluate' first")
    with open(path, encoding='utf-8') as f:
        return json.load(f)['results']


def load_manifest_datasets(directory):
    """
    Rebuild the datasets of the experiment recorded in <directory>/manifest.json, so feature-based
    criteria can be evaluated. Datasets that cannot be loaded any more are left out with a warning.
    """
    manifest = read_manifest(directory)
    if manifest is None:
        return {}
    cfg = ExperimentConfig.from_dict(manifest['config'])
    datasets = {}
    for source in cfg.datasets:
        try:
            datasets[source.name] = source.load(seed=derive_seed(cfg.base_seed, source.name, 'dataset'))
        except (DataError, IOError) as e:
            warn("cannot reload dataset", source.name, "(" + str(e) + "); feature-based criteria are skipped for it")
    return datasets
