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
The alstop.cost package

The labelling/misclassification cost of a stopping decision, treatments of runs that never stop,
scenario rankings, cost-optimal region maps and Pareto frontiers.
"""

from alstop.cost.costmodel import CostParams, cost, run_costs, scenario, SCENARIOS
from alstop.cost.outcomes import RunOutcome, CriterionOutcome, apply_treatment, worst_values, outcomes_from_rows, TREATMENTS
from alstop.cost.regions import RegionGrid, region_map, scenario_rank, cost_matrix, log_axis, default_axes, INDETERMINATE
from alstop.cost.pareto import pareto_frontier, pareto_mask
from alstop.cost.costio import ranking_to_csv, ranking_to_json, region_grid_to_csv, region_grid_to_json

__all__ = ["CostParams", "cost", "run_costs", "scenario", "SCENARIOS",
           "RunOutcome", "CriterionOutcome", "apply_treatment", "worst_values", "outcomes_from_rows", "TREATMENTS",
           "RegionGrid", "region_map", "scenario_rank", "cost_matrix", "log_axis", "default_axes", "INDETERMINATE",
           "pareto_frontier", "pareto_mask",
           "ranking_to_csv", "ranking_to_json", "region_grid_to_csv", "region_grid_to_json"]
