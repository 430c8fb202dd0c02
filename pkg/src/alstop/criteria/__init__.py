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
The alstop.criteria package

Stopping criteria as (metric, condition) pairs, evaluated offline on run traces.
"""

from alstop.criteria.uncertainty import normalized_entropy
from alstop.criteria.metrics import (metric_max_confidence, metric_entropy_mcs, metric_mes, metric_oracle_acc,
                                     metric_classification_change, metric_overall_uncertainty,
                                     metric_performance_convergence, metric_uncertainty_convergence,
                                     metric_contradictory_information, metric_stabilizing_predictions,
                                     metric_variance_uncertainty, metric_ssncut, spectral_bipartition)
from alstop.criteria.conditions import ConditionSpec, Threshold, ConsecutiveChange, WindowGradient, PatienceMinimum, condition_from_dict
from alstop.criteria.catalogue import CriterionSpec, CRITERION_IDS, CRITERION_NAMES, make_criterion, criteria_catalogue, catalogue_to_json
from alstop.criteria.evaluate import StopDecision, evaluate_criterion, metric_series, metric_accuracy_correlation, check_applicable

__all__ = ["normalized_entropy", "metric_max_confidence", "metric_entropy_mcs", "metric_mes", "metric_oracle_acc",
           "metric_classification_change", "metric_overall_uncertainty", "metric_performance_convergence",
           "metric_uncertainty_convergence", "metric_contradictory_information", "metric_stabilizing_predictions",
           "metric_variance_uncertainty", "metric_ssncut", "spectral_bipartition",
           "ConditionSpec", "Threshold", "ConsecutiveChange", "WindowGradient", "PatienceMinimum", "condition_from_dict",
           "CriterionSpec", "CRITERION_IDS", "CRITERION_NAMES", "make_criterion", "criteria_catalogue", "catalogue_to_json",
           "StopDecision", "evaluate_criterion", "metric_series", "metric_accuracy_correlation", "check_applicable"]
