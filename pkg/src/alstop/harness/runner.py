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
The active learning loop and the experiment runner.

Every random choice in a run (split, initial set, subsample, stop set, learner training, query
tie-breaking) draws from its own seed derived from the run seed, so a run is reproducible on its own
and traces do not depend on how runs are scheduled over workers.
"""
import itertools, math, os

import numpy
from joblib import Parallel, delayed

from alstop.core.basic import mkdir_p
from alstop.core.console import logger, warn
from alstop.core.crypto import derive_seed
from alstop.core.errors import LearnerError, RunConfigError
from alstop.core.tabular import write_json
from alstop.data.pool import make_split, make_initial_set, draw_subsample, replenish_subsample, draw_stopset
from alstop.data.trace import IterationRecord, RunTrace
from alstop.data.traceio import TraceWriter
from alstop.learners.model import fit, posterior, predict, argmax_positions
from alstop.query.rankedbatch import QueryConfig, rank_batch

MANIFEST_FORMAT = "alstop-manifest"
TRACE_SUFFIX = ".trace"


def expected_records(n_unlabeled, reserve, batch_size):
    """
    Number of records a run makes when it starts with *n_unlabeled* unlabelled instances.
    """
    return max(1, int(math.ceil((n_unlabeled - reserve) / float(batch_size))))


def check_feasible(dataset, trace_config):
    if trace_config.subsample_size < trace_config.batch_size:
        raise RunConfigError("alstop.harness.run_al: subsample_size (" + str(trace_config.subsample_size) + ") must be at least batch_size ("
                             + str(trace_config.batch_size) + ")")
    n_test = int(math.floor(trace_config.test_fraction * dataset.n_rows))
    n_initial = max(trace_config.initial_size, dataset.n_classes)
    left = dataset.n_rows - n_test - n_initial
    if left < 1:
        raise RunConfigError("alstop.harness.run_al: dataset " + dataset.name + " has " + str(dataset.n_rows) + " rows, too few for a test set of "
                             + str(n_test) + " and an initial set of " + str(n_initial) + " with anything left to query")
    return left


def test_accuracy(model, dataset, test):
    if len(test) == 0:
        return 0.0
    return float(numpy.mean(predict(model, dataset.rows(test)) == dataset.labels[test]))


def run_al(dataset, spec, trace_config, seed, similarity='auto', ioa=None):
    """
    Run batch-mode pool-based active learning on *dataset* and return its RunTrace.

    Each round trains a classifier on the labelled pool, records its posteriors and predictions on
    the evaluation subsample, its stop-set predictions and its test accuracy, queries a batch of
    batch_size instances from the subsample, and moves them to the labelled pool. The loop ends once
    at most `reserve` unlabelled instances are left. With *ioa* given, the trace is streamed there
    record by record.

    A learner failure ends the run with status 'aborted'; the trace so far is returned. Any other
    error also closes a streamed trace as aborted before it propagates.
    """
    check_feasible(dataset, trace_config)
    k = trace_config.batch_size
    pool = make_split(dataset, derive_seed(seed, 'split'), trace_config.test_fraction)
    pool = make_initial_set(pool, dataset, derive_seed(seed, 'initial'), trace_config.initial_size)
    if len(pool.unlabeled) == 0:
        raise RunConfigError("alstop.harness.run_al: nothing left to query after the initial set")
    stopset = draw_stopset(pool, derive_seed(seed, 'stopset'), trace_config.stopset_size)
    pool = draw_subsample(pool, derive_seed(seed, 'subsample'), trace_config.subsample_size)
    query = QueryConfig.create(k, similarity)

    trace = RunTrace.create(dataset.name, spec.kind, seed, trace_config, dataset.classes, stopset=stopset, status='running')
    writer = TraceWriter(ioa, trace) if ioa is not None else None
    add = writer.append if writer is not None else trace.append
    logger("alstop.harness.run_al:", dataset.name, spec.kind, "seed", seed, "expecting",
           expected_records(len(pool.unlabeled), trace_config.reserve, k), "rounds", loglevel=1)

    status, message = 'complete', ''
    t = 0
    try:
        while True:
            model = fit(spec.with_seed(derive_seed(seed, 'learner', t)), dataset.rows(pool.labeled),
                        dataset.labels[pool.labeled], classes=dataset.classes)
            subsample = pool.subsample
            P = posterior(model, dataset.rows(subsample))
            predictions = numpy.asarray(model.classes, dtype=numpy.int64)[argmax_positions(P)]
            stop_predictions = predict(model, dataset.rows(stopset)) if len(stopset) > 0 else []
            accuracy = test_accuracy(model, dataset, pool.test)
            batch = rank_batch(model, dataset.rows(subsample), dataset.rows(pool.labeled), query,
                               seed=derive_seed(seed, 'query', t), candidate_index=subsample)
            positions = numpy.searchsorted(subsample, batch)
            record = IterationRecord.create(t, len(pool.labeled), batch, dataset.labels[batch], P[positions],
                                            subsample, P, predictions, stop_predictions, accuracy)
            add(record)
            logger("alstop.harness.run_al: round", t, "labels", len(pool.labeled), "accuracy", "%.4f" % accuracy, loglevel=2)
            pool = pool.label(batch)
            if len(pool.unlabeled) <= trace_config.reserve:
                break
            if len(pool.subsample) < k + 1:
                pool = replenish_subsample(pool, derive_seed(seed, 'replenish', t), trace_config.subsample_size)
            t += 1
    except LearnerError as e:
        status, message = 'aborted', str(e)
        warn("run", dataset.name, spec.kind, "seed", seed, "aborted in round", t, ":", e)
    except BaseException as e:
        status, message = 'aborted', str(e) or type(e).__name__
        raise
    finally:
        if writer is not None:
            writer.close(status, message)
        else:
            trace.status, trace.message = status, message
            trace._hexhash = None
    logger("alstop.harness.run_al:", dataset.name, spec.kind, "seed", seed, status, "after", len(trace.records), "rounds", loglevel=1)
    return trace


def al_potential(dataset, spec, seed, test_fraction=0.5, initial_size=10):
    """
    Accuracy on the test half when training on the whole non-test half, minus the accuracy when
    training on the initial set alone. Split and initial set are those run_al draws for *seed*.
    """
    pool = make_split(dataset, derive_seed(seed, 'split'), test_fraction)
    pool = make_initial_set(pool, dataset, derive_seed(seed, 'initial'), initial_size)
    learner = spec.with_seed(derive_seed(seed, 'learner', 0))
    everything = numpy.union1d(pool.labeled, pool.unlabeled)
    full = fit(learner, dataset.rows(everything), dataset.labels[everything], classes=dataset.classes)
    initial = fit(learner, dataset.rows(pool.labeled), dataset.labels[pool.labeled], classes=dataset.classes)
    return test_accuracy(full, dataset, pool.test) - test_accuracy(initial, dataset, pool.test)


def run_seed(base_seed, dataset_name, repeat):
    return derive_seed(base_seed, dataset_name, repeat)


def trace_filename(dataset_name, learner_name, repeat):
    return "%s__%s__r%03d%s" % (dataset_name, learner_name, repeat, TRACE_SUFFIX)


def _run_job(dataset, spec, learner_name, trace_config, seed, repeat, similarity, path):
    trace = run_al(dataset, spec, trace_config, seed, similarity=similarity, ioa=path)
    return {'dataset': dataset.name, 'learner': learner_name, 'model': spec.kind, 'repeat': repeat, 'seed': seed,
            'trace': os.path.basename(path), 'status': trace.status, 'message': trace.message,
            'records': len(trace.records)}


def load_datasets(cfg):
    return [source.load(seed=derive_seed(cfg.base_seed, source.name, 'dataset')) for source in cfg.datasets]


def run_experiments(cfg, datasets=None):
    """
    Run every (dataset, learner, repeat) job of the experiment on a pool of cfg.workers workers,
    writing one trace file per job to <output>/traces and the list of jobs with their seeds and
    status to <output>/manifest.json. Returns the manifest entries in job order.
    """
    if datasets is None:
        datasets = load_datasets(cfg)
    for dataset in datasets:
        check_feasible(dataset, cfg.trace_config)
    trace_dir = os.path.join(cfg.output, 'traces')
    mkdir_p(trace_dir)
    jobs = []
    for dataset, (spec, name), repeat in itertools.product(datasets, zip(cfg.learners, cfg.learner_names), range(cfg.repeats)):
        seed = run_seed(cfg.base_seed, dataset.name, repeat)
        jobs.append((dataset, spec, name, cfg.trace_config, seed, repeat, cfg.similarity,
                     os.path.join(trace_dir, trace_filename(dataset.name, name, repeat))))
    logger("alstop.harness.run_experiments:", len(jobs), "runs on", cfg.workers, "workers", loglevel=1)
    entries = Parallel(n_jobs=cfg.workers, prefer="processes")(delayed(_run_job)(*job) for job in jobs)
    aborted = [e for e in entries if e['status'] != 'complete']
    if aborted:
        warn(len(aborted), "of", len(entries), "runs were aborted; they are listed in the manifest and left out of the analysis")
    write_json({'format': MANIFEST_FORMAT, 'config': cfg.to_dict(), 'runs': entries}, os.path.join(cfg.output, 'manifest.json'))
    return entries
