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

import numpy

from alstop.core.errors import UndefinedMetric


def normalized_entropy(posteriors):
    """
    Per-row Shannon entropy of the posterior divided by ln(number of classes), so that one-hot rows
    give 0 and uniform rows give 1. Zero probabilities contribute nothing.
    """
    P = numpy.asarray(posteriors, dtype=numpy.float64)
    if P.ndim != 2 or P.shape[0] == 0:
        raise UndefinedMetric("alstop.criteria.normalized_entropy: no posterior rows")
    if P.shape[1] < 2:
        return numpy.zeros(P.shape[0])
    with numpy.errstate(divide='ignore', invalid='ignore'):
        terms = numpy.where(P > 0, P * numpy.log(numpy.where(P > 0, P, 1.0)), 0.0)
    H = -terms.sum(axis=1) / numpy.log(P.shape[1])
    return numpy.clip(H, 0.0, 1.0)
