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
The alstop.harness package

Experiment orchestration: dataset loaders, experiment files, the active learning run loop,
offline criterion evaluation and the report exports built on top of it.
"""

from alstop.harness.loaders import (map_labels, guess_format, read_csv, read_svmlight, subsample_rows, load_dataset,
                                    generate_synthetic)
from alstop.harness.experiment import (DatasetSource, ExperimentConfig, experiment_defaults, parse_synthetic,
                                       read_experiment_config)
from alstop.harness.runner import (run_al, al_potential, check_feasible, expected_records, run_seed, trace_filename,
                                   load_datasets, run_experiments)
from alstop.harness.evaluation import (RESULT_FIELDS, SUMMARY_FIELDS, read_traces, read_manifest, evaluate_trace,
                                       summarize, evaluate_all, write_results, read_results, load_manifest_datasets)
from alstop.harness.report import PARETO_FIELDS, pareto_points, rank_data, write_report, write_rank

__all__ = ["map_labels", "guess_format", "read_csv", "read_svmlight", "subsample_rows", "load_dataset",
           "generate_synthetic", "DatasetSource", "ExperimentConfig", "experiment_defaults", "parse_synthetic",
           "read_experiment_config", "run_al", "al_potential", "check_feasible", "expected_records", "run_seed",
           "trace_filename", "load_datasets", "run_experiments", "RESULT_FIELDS", "SUMMARY_FIELDS", "read_traces",
           "read_manifest", "evaluate_trace", "summarize", "evaluate_all", "write_results", "read_results",
           "load_manifest_datasets", "PARETO_FIELDS", "pareto_points", "rank_data", "write_report", "write_rank"]
