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
Figures drawn with matplotlib: Pareto plots, cost-region maps and critical difference diagrams.

Figures are built on matplotlib.figure.Figure directly, so no display backend is needed to save them.
"""

from alstop.graphics.matplotlib.paretoplot import pareto_plot
from alstop.graphics.matplotlib.regionplot import region_plot
from alstop.graphics.matplotlib.cdplot import cd_plot


def save_figure(fig, path):
    fig.savefig(path, format='svg' if str(path).lower().endswith('.svg') else None)


__all__ = ["pareto_plot", "region_plot", "cd_plot", "save_figure"]
