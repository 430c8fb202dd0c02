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
CSV and JSON export of region maps and scenario rankings.
"""
from alstop.core.tabular import write_csv, write_json

RANKING_FIELDS = ('rank', 'criterion', 'mean_cost', 'mean_accuracy', 'mean_labels', 'runs', 'stops')
REGION_FIELDS = ('nm', 'l', 'best', 'winner', 'p_value')


def ranking_to_csv(ranking, ioa):
    write_csv(ranking, RANKING_FIELDS, ioa)


def ranking_to_json(ranking, params, treatment, ioa):
    write_json({'scenario': params.to_dict(), 'treatment': treatment, 'ranking': ranking}, ioa)


def region_grid_to_csv(grid, ioa):
    write_csv(grid.to_rows(), REGION_FIELDS, ioa)


def region_grid_to_json(grid, ioa):
    write_json(grid.to_dict(), ioa)
