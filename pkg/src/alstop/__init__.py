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
The active-learning stopping toolkit (alstop)

A set of tools and utilities meant to help with:
   - Running batch-mode pool-based active learning experiments and recording every round in a trace
   - Evaluating published stopping criteria offline on the recorded traces
   - Selecting the cost-optimal criterion for given label and misclassification economics
   - Ranking statistics and figures (Pareto frontiers, cost-region maps, critical-difference diagrams)
"""
from alstop.config import *

__version__ = version

import alstop.core
from alstop.core import cout, cerr, warn, logger

__all__ = ["alstop_root", "python_root", "config", "__version__", "version_date", "copyright_note",
           "version", "major_version", "minor_version", "patch_version",
           "cout", "cerr", "warn", "logger", "core"]

cli_modules = {'experiment': 'alstop.harness.cli'}
