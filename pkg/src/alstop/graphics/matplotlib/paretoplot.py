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
Labels-versus-accuracy plot of stopping criteria with their Pareto frontier.
"""
from matplotlib.figure import Figure


def pareto_plot(points, title=None, figsize=(7, 5)):
    """
    *points* is a list of dicts with criterion, mean_labels, mean_accuracy, the 2.5% and 97.5%
    percentiles (labels_lo, labels_hi, accuracy_lo, accuracy_hi) and a `frontier` flag. Returns a
    matplotlib Figure.
    """
    fig = Figure(figsize=figsize)
    ax = fig.add_subplot(1, 1, 1)
    for p in points:
        xerr = [[p['mean_labels'] - p['labels_lo']], [p['labels_hi'] - p['mean_labels']]]
        yerr = [[p['mean_accuracy'] - p['accuracy_lo']], [p['accuracy_hi'] - p['mean_accuracy']]]
        ax.errorbar([p['mean_labels']], [p['mean_accuracy']], xerr=xerr, yerr=yerr, fmt='o', capsize=3,
                    label=p['criterion'], alpha=0.85)
    frontier = sorted((p['mean_labels'], p['mean_accuracy']) for p in points if p['frontier'])
    if len(frontier) > 1:
        ax.plot([f[0] for f in frontier], [f[1] for f in frontier], linestyle='--', color='grey', zorder=0)
    ax.set_xlabel('labels used')
    ax.set_ylabel('accuracy')
    if title is not None:
        ax.set_title(title)
    ax.legend(fontsize='small', loc='lower right')
    fig.tight_layout()
    return fig
