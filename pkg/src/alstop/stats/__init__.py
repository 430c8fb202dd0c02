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
The alstop.stats package

Statistical primitives: Cohen's kappa, Pearson correlation, the Friedman test and the Nemenyi
critical difference.
"""

from alstop.stats.agreement import cohen_kappa, pearson
from alstop.stats.ranking import RankMatrix, friedman, nemenyi_cd, cd_groups, cd_diagram_data, NEMENYI_Q_005

__all__ = ["cohen_kappa", "pearson", "RankMatrix", "friedman", "nemenyi_cd", "cd_groups", "cd_diagram_data", "NEMENYI_Q_005"]
