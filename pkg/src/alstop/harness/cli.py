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
Command line interface of the experiment harness: run, evaluate, cost, rank, potential, report.
"""
import os

import numpy

from alstop.core.basic import mkdir_p
from alstop.core.console import cout
from alstop.core.errors import UsageError, RunError
from alstop.core.tabular import write_csv
from alstop.cost.costio import ranking_to_csv, ranking_to_json
from alstop.cost.costmodel import CostParams, cost, scenario
from alstop.cost.outcomes import outcomes_from_rows, TREATMENTS
from alstop.cost.regions import scenario_rank, default_alpha
from alstop.criteria.catalogue import criteria_catalogue, catalogue_to_json, CRITERION_IDS
from alstop.harness.evaluation import read_traces, evaluate_all, write_results, read_results, load_manifest_datasets
from alstop.harness.experiment import ExperimentConfig, read_experiment_config
from alstop.harness.report import write_report, rank_data, write_rank
from alstop.harness.runner import run_experiments, load_datasets, al_potential, run_seed

help_text = """
experiment commands
   run        Run active learning experiments described by an experiment file
   evaluate   Evaluate the stopping criteria on the traces of a finished experiment
   cost       Cost of a stopping decision, or criteria ranked by cost for one scenario
   rank       Critical difference diagram data for criteria costs under one scenario
   potential  Accuracy gain available to active learning on each dataset
   report     Pareto, cost-region and correlation exports with figures
   catalogue  List the stopping criteria and their parameters as JSON
""".strip()

run_help_text = """
usage: alstop run <experiment file> [--workers <n>] [--output <dir>]

Runs every (dataset, learner, repeat) job of the experiment and writes one trace per job to
<output>/traces plus <output>/manifest.json.
""".strip()

evaluate_help_text = """
usage: alstop evaluate <experiment output dir> [--criteria <id,id,...>] [--workers <n>]

Evaluates the stopping criteria on every complete trace and writes results.csv, summary.csv and
summary.json to the experiment output directory.
""".strip()

cost_help_text = """
usage: alstop cost --accuracy <a> --labels <j> (--scenario <name> | --label-cost <l> --misclass-cost <m> --lifetime <n>)
       alstop cost <experiment output dir> (--scenario <name> | ...) [--treatment penalize|include|exclude] [--model <kind>]

Scenarios: mammogram, marketing.
""".strip()

rank_help_text = """
usage: alstop rank <experiment output dir> (--scenario <name> | ...) [--treatment <t>] [--alpha 0.05] [--model <kind>]
""".strip()

potential_help_text = """
usage: alstop potential <experiment file>

Accuracy when training on the whole non-test half minus accuracy when training on the initial
set, per dataset and learner, averaged over the experiment's repeats.
""".strip()

report_help_text = """
usage: alstop report <experiment output dir> [--treatment <t>] [--alpha <a>] [--model <kind>] [--no-figures]
""".strip()

command_help = {'run': run_help_text, 'evaluate': evaluate_help_text, 'cost': cost_help_text, 'rank': rank_help_text,
                'potential': potential_help_text, 'report': report_help_text}


def _one_path(commands, name):
    if len(commands) != 2:
        raise UsageError("alstop " + name + ": expected exactly one path argument\n" + command_help[name])
    return commands[1]


def _treatment(args):
    treatment = getattr(args, 'treatment', 'penalize')
    if treatment not in TREATMENTS:
        raise UsageError("alstop: --treatment must be one of " + ", ".join(TREATMENTS))
    return treatment


def cost_params(args):
    """
    The scenario from --scenario, optionally with --label-cost / --misclass-cost / --lifetime overriding
    its values, or from those three flags alone.
    """
    given = dict((k, getattr(args, k)) for k in ('label_cost', 'misclassification_cost', 'lifetime_predictions') if hasattr(args, k))
    name = getattr(args, 'scenario', None)
    if name is not None:
        base = scenario(name).to_dict()
        base.update(given)
        return CostParams.create(**base)
    if len(given) != 3:
        raise UsageError("alstop: give --scenario or all of --label-cost, --misclass-cost and --lifetime")
    return CostParams.create(**given)


def _print_rows(rows, fields):
    cout("  ".join(fields))
    for row in rows:
        cells = []
        for f in fields:
            v = row.get(f)
            cells.append('%.6g' % v if isinstance(v, float) else ('-' if v is None else str(v)))
        cout("  ".join(cells))


def main(commands, args):
    if len(commands) == 0:
        commands = ['help']

############## HELP ####################
    if commands[0] == "help":
        cout(help_text)
    elif len(commands) == 2 and commands[1] == "help" and commands[0] in command_help:
        cout(command_help[commands[0]])

############## RUN #####################
    elif commands[0] == "run":
        cfg = read_experiment_config(_one_path(commands, 'run'))
        overrides = {}
        if hasattr(args, 'workers'):
            overrides['workers'] = args.workers
        if hasattr(args, 'output'):
            overrides['output'] = os.path.abspath(args.output)
        if overrides:
            d = cfg.to_dict()
            d.update(overrides)
            cfg = ExperimentConfig.from_dict(d)
        entries = run_experiments(cfg)
        complete = sum(1 for e in entries if e['status'] == 'complete')
        cout("alstop run:", complete, "of", len(entries), "runs complete, traces in", os.path.join(cfg.output, 'traces'))
        if complete < len(entries):
            raise RunError("alstop run: " + str(len(entries) - complete) + " runs were aborted, see manifest.json")

############## EVALUATE ################
    elif commands[0] == "evaluate":
        directory = _one_path(commands, 'evaluate')
        ids = getattr(args, 'criteria', None)
        if ids is not None:
            unknown = [c for c in ids if c not in CRITERION_IDS]
            if unknown:
                raise UsageError("alstop evaluate: unknown criteria " + ", ".join(unknown))
        criteria = criteria_catalogue(ids)
        traces = read_traces(directory)
        rows, summary = evaluate_all(traces, criteria, load_manifest_datasets(directory), workers=getattr(args, 'workers', 1))
        write_results(rows, summary, directory)
        _print_rows([s for s in summary if s['scope'] == 'pooled'],
                    ('criterion', 'runs', 'stops', 'stop_rate', 'mean_labels', 'mean_accuracy', 'correlation_mean', 'correlation_se'))

############## COST ####################
    elif commands[0] == "cost":
        params = cost_params(args)
        if len(commands) == 1:
            if not (hasattr(args, 'accuracy') and hasattr(args, 'labels')):
                raise UsageError("alstop cost: give --accuracy and --labels, or an experiment output directory\n" + cost_help_text)
            cout("%.2f" % cost(args.accuracy, args.labels, params))
        else:
            directory = _one_path(commands, 'cost')
            treatment = _treatment(args)
            ranking = scenario_rank(outcomes_from_rows(read_results(directory), model=getattr(args, 'model', None)), params, treatment)
            ranking_to_csv(ranking, os.path.join(directory, 'ranking.csv'))
            ranking_to_json(ranking, params, treatment, os.path.join(directory, 'ranking.json'))
            _print_rows(ranking, ('rank', 'criterion', 'mean_cost', 'mean_accuracy', 'mean_labels', 'stops', 'runs'))

############## RANK ####################
    elif commands[0] == "rank":
        directory = _one_path(commands, 'rank')
        data = rank_data(read_results(directory), cost_params(args), _treatment(args),
                         getattr(args, 'alpha', 0.05), model=getattr(args, 'model', None))
        write_rank(data, directory, figures=getattr(args, 'figures', True))
        cout("Friedman statistic %.4g, p = %.4g, CD = %.4g over %d problems" % (data['friedman_statistic'], data['friedman_p'], data['cd'], data['problems']))
        for name, r in zip(data['criteria'], data['mean_ranks']):
            cout("  %-28s %.3f" % (name, r))
        for group in data['groups']:
            cout("  group:", ", ".join(group))

############## POTENTIAL ###############
    elif commands[0] == "potential":
        cfg = read_experiment_config(_one_path(commands, 'potential'))
        rows = []
        for dataset in load_datasets(cfg):
            for spec, name in zip(cfg.learners, cfg.learner_names):
                gains = [al_potential(dataset, spec, run_seed(cfg.base_seed, dataset.name, r),
                                      cfg.trace_config.test_fraction, cfg.trace_config.initial_size) for r in range(cfg.repeats)]
                se = float(numpy.std(gains, ddof=1) / numpy.sqrt(len(gains))) if len(gains) > 1 else None
                rows.append({'dataset': dataset.name, 'learner': name, 'rows': dataset.n_rows, 'features': dataset.n_features,
                             'classes': dataset.n_classes, 'potential': float(numpy.mean(gains)), 'potential_se': se})
        fields = ('dataset', 'learner', 'rows', 'features', 'classes', 'potential', 'potential_se')
        mkdir_p(cfg.output)
        write_csv(rows, fields, os.path.join(cfg.output, 'potential.csv'))
        _print_rows(rows, fields)

############## REPORT ##################
    elif commands[0] == "report":
        directory = _one_path(commands, 'report')
        alpha = getattr(args, 'alpha', None)
        written = write_report(read_results(directory), os.path.join(directory, 'report'), _treatment(args),
                               default_alpha() if alpha is None else alpha, model=getattr(args, 'model', None),
                               figures=getattr(args, 'figures', True))
        for path in written:
            cout(path)

############## CATALOGUE ###############
    elif commands[0] == "catalogue":
        cout(catalogue_to_json())

#######################################
    else:
        raise UsageError("Unknown command in experiment module: " + commands[0])
