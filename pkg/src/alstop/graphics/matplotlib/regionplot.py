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
Map of the cost-optimal criterion over label cost and n*m.
"""
import numpy
from matplotlib.colors import ListedColormap
from matplotlib.figure import Figure
from matplotlib.patches import Patch

INDETERMINATE_COLOR = '#d9d9d9'


def _edges(axis):
    axis = numpy.asarray(axis, dtype=numpy.float64)
    if len(axis) == 1:
        return numpy.array([axis[0] / 2.0, axis[0] * 2.0]) if axis[0] > 0 else numpy.array([-0.5, 0.5])
    mids = numpy.sqrt(axis[1:] * axis[:-1]) if numpy.all(axis > 0) else (axis[1:] + axis[:-1]) / 2.0
    first = axis[0] ** 2 / mids[0] if axis[0] > 0 else axis[0] - (mids[0] - axis[0])
    last = axis[-1] ** 2 / mids[-1] if axis[-1] > 0 else axis[-1] + (axis[-1] - mids[-1])
    return numpy.concatenate([[first], mids, [last]])


def region_plot(grid, indeterminate='indeterminate', title=None, figsize=(7, 5.5)):
    """
    Colour every (nm, l) cell of a RegionGrid by its winner, grey where no criterion is significantly
    best. Returns a matplotlib Figure.
    """
    names = sorted(set(c for row in grid.cells for c in row if c != indeterminate))
    palette = [INDETERMINATE_COLOR] + ['C%d' % (i % 10) for i in range(len(names))]
    codes = dict((n, i + 1) for i, n in enumerate(names))
    codes[indeterminate] = 0
    Z = numpy.array([[codes[c] for c in row] for row in grid.cells])

    fig = Figure(figsize=figsize)
    ax = fig.add_subplot(1, 1, 1)
    ax.pcolormesh(_edges(grid.nm_axis), _edges(grid.l_axis), Z, cmap=ListedColormap(palette), vmin=-0.5,
                  vmax=len(palette) - 0.5, shading='flat')
    if numpy.all(numpy.asarray(grid.nm_axis) > 0):
        ax.set_xscale('log')
    if numpy.all(numpy.asarray(grid.l_axis) > 0):
        ax.set_yscale('log')
    ax.set_xlabel('misclassification cost x lifetime predictions (nm)')
    ax.set_ylabel('label cost (l)')
    ax.set_title(title if title is not None else 'cost-optimal criterion (' + grid.treatment + ')')
    handles = [Patch(color=palette[codes[n]], label=n) for n in names] + [Patch(color=INDETERMINATE_COLOR, label=indeterminate)]
    ax.legend(handles=handles, fontsize='small', loc='upper left', framealpha=0.9)
    fig.tight_layout()
    return fig
