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
Pareto frontier of (labels, accuracy) outcomes: fewer labels and higher accuracy are both better.
"""
import numpy


def pareto_mask(labels, accuracies):
    """
    Boolean mask of the non-dominated points. Point p is dominated when another point q has
    q.labels <= p.labels and q.accuracy >= p.accuracy with at least one inequality strict.
    """
    j = numpy.asarray(labels, dtype=numpy.float64)
    a = numpy.asarray(accuracies, dtype=numpy.float64)
    no_worse = (j[numpy.newaxis, :] <= j[:, numpy.newaxis]) & (a[numpy.newaxis, :] >= a[:, numpy.newaxis])
    better = (j[numpy.newaxis, :] < j[:, numpy.newaxis]) | (a[numpy.newaxis, :] > a[:, numpy.newaxis])
    return ~numpy.any(no_worse & better, axis=1)


def pareto_frontier(points):
    """
    The non-dominated members of *points*, a list of (labels, accuracy) pairs, in input order.
    """
    points = list(points)
    if len(points) == 0:
        return []
    mask = pareto_mask([p[0] for p in points], [p[1] for p in points])
    return [p for p, keep in zip(points, mask) if keep]
