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
Critical difference diagram: criteria placed on their mean rank, with bars joining criteria that are
not significantly different.
"""
from matplotlib.figure import Figure


def cd_plot(data, figsize=(8, None)):
    """
    Draw the dict returned by alstop.stats.cd_diagram_data. Returns a matplotlib Figure.
    """
    criteria = data['criteria']
    ranks = data['mean_ranks']
    k = len(criteria)
    half = (k + 1) // 2
    height = figsize[1] if figsize[1] is not None else 1.5 + 0.3 * half
    fig = Figure(figsize=(figsize[0], height))
    ax = fig.add_subplot(1, 1, 1)
    ax.set_xlim(k + 0.5, 0.5)
    ax.set_ylim(-(half + 1.5), 1.5)
    ax.axis('off')

    ax.plot([1, k], [0, 0], color='black', linewidth=1)
    for r in range(1, k + 1):
        ax.plot([r, r], [0, 0.15], color='black', linewidth=1)
        ax.text(r, 0.3, str(r), ha='center', va='bottom', fontsize='small')

    cd = data.get('cd')
    if cd is not None:
        ax.plot([1, 1 + cd], [1.1, 1.1], color='black', linewidth=2)
        ax.text(1 + cd / 2.0, 1.2, 'CD = %.2f' % cd, ha='center', va='bottom', fontsize='small')

    for i, (name, rank) in enumerate(zip(criteria, ranks)):
        level = -(i % half) - 1
        x_text = 0.6 if i < half else k + 0.4
        ax.plot([rank, rank, x_text], [0, level, level], color='black', linewidth=0.8)
        ax.text(x_text, level, ' ' + name + ' ', ha='right' if i < half else 'left', va='center', fontsize='small')

    rank_of = dict(zip(criteria, ranks))
    bars = [g for g in (data.get('groups') or []) if len(g) > 1]
    for g, members in enumerate(bars):
        y = -0.25 - 0.15 * g
        ax.plot([rank_of[members[0]] - 0.05, rank_of[members[-1]] + 0.05], [y, y], color='black', linewidth=3)

    p = data.get('friedman_p')
    if p is not None:
        ax.text((k + 1) / 2.0, -(half + 1.2), 'Friedman p = %.3g, N = %d' % (p, data.get('problems', 0)), ha='center', fontsize='small')
    fig.tight_layout()
    return fig
