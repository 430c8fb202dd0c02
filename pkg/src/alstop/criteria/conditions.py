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
Stopping conditions: boolean rules over the history of a metric.

Every condition works on a metric series (one value per round, None where the metric is undefined)
and reports the first round at which it fires together with the round the decision refers to,
which differs from the firing round only for PatienceMinimum with rollback.
"""
import numpy

from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import CriterionError


class ConditionSpec(AlstopObject):

    kind = None

    def first_firing(self, series):
        """
        Return (firing round, decision round) for the first round at which the condition holds,
        or None if it never does.
        """
        for t in range(len(series)):
            if self.fires(series, t):
                return t, self.decision_round(series, t)
        return None

    def decision_round(self, series, t):
        return t

    def fires(self, series, t):
        raise NotImplementedError

    def to_dict(self):
        d = super(ConditionSpec, self).to_dict()
        d['type'] = self.kind
        return d

    @classmethod
    def from_dict(cls, d):
        if cls is ConditionSpec:
            return condition_from_dict(d)
        return super(ConditionSpec, cls).from_dict(d)


class Threshold(ConditionSpec):

    """
    Fires on the first round whose metric is <= value (direction 'le') or >= value ('ge').
    """

    kind = 'threshold'

    @alstop_typed_init({'direction': str, 'value': float})
    def __init__(self, direction, value):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.direction = direction
        self.value = value

    @classmethod
    def create(cls, direction, value):
        if direction not in ('le', 'ge'):
            raise CriterionError("alstop.criteria.Threshold.create: direction must be 'le' or 'ge'")
        value = float(value)
        if not numpy.isfinite(value):
            raise CriterionError("alstop.criteria.Threshold.create: threshold must be finite")
        return cls(direction, value)

    def fires(self, series, t):
        v = series[t]
        if v is None:
            return False
        return v <= self.value if self.direction == 'le' else v >= self.value


class ConsecutiveChange(ConditionSpec):

    """
    Fires at round t when the metric strictly decreased, by at least min_delta, from each round to
    the next over the last `count` steps (rounds t-count+1 .. t).
    """

    kind = 'consecutive_change'

    @alstop_typed_init({'count': int, 'min_delta': float, 'direction': str})
    def __init__(self, count, min_delta, direction):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.count = count
        self.min_delta = min_delta
        self.direction = direction

    @classmethod
    def create(cls, count, min_delta=0.0, direction='decrease'):
        if direction != 'decrease':
            raise CriterionError("alstop.criteria.ConsecutiveChange.create: only 'decrease' is supported")
        if int(count) < 1 or float(min_delta) < 0:
            raise CriterionError("alstop.criteria.ConsecutiveChange.create: need count >= 1 and min_delta >= 0")
        return cls(int(count), float(min_delta), direction)

    def fires(self, series, t):
        if t < self.count:
            return False
        for s in range(t - self.count + 1, t + 1):
            prev, cur = series[s - 1], series[s]
            if prev is None or cur is None:
                return False
            drop = prev - cur
            if not (drop > 0 and drop >= self.min_delta):
                return False
        return True


class WindowGradient(ConditionSpec):

    """
    Smooths the metric with a trailing window, A_t = aggregate(metric[t-window+1 .. t]), and looks at
    its finite difference D_t = A_t - A_{t-1}. With extremum 'max' it fires when A_t is larger than
    every earlier A and 0 < D_t < epsilon; with 'min' when A_t is smaller than every earlier A and
    -epsilon < D_t < 0.
    """

    kind = 'window_gradient'

    @alstop_typed_init({'window': int, 'epsilon': float, 'aggregate': str, 'extremum': str})
    def __init__(self, window, epsilon, aggregate, extremum):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.window = window
        self.epsilon = epsilon
        self.aggregate = aggregate
        self.extremum = extremum

    @classmethod
    def create(cls, window, epsilon, aggregate='mean', extremum='max'):
        if int(window) < 1 or float(epsilon) <= 0:
            raise CriterionError("alstop.criteria.WindowGradient.create: need window >= 1 and epsilon > 0")
        if aggregate not in ('mean', 'median') or extremum not in ('max', 'min'):
            raise CriterionError("alstop.criteria.WindowGradient.create: aggregate must be mean|median and extremum max|min")
        return cls(int(window), float(epsilon), aggregate, extremum)

    def smoothed(self, series):
        out = []
        for t in range(len(series)):
            if t < self.window - 1:
                out.append(None)
                continue
            window = series[t - self.window + 1:t + 1]
            if any(v is None for v in window):
                out.append(None)
            elif self.aggregate == 'mean':
                out.append(float(numpy.mean(window)))
            else:
                out.append(float(numpy.median(window)))
        return out

    def first_firing(self, series):
        A = self.smoothed(series)
        for t in range(1, len(A)):
            if A[t] is None or A[t - 1] is None:
                continue
            earlier = [a for a in A[:t] if a is not None]
            d = A[t] - A[t - 1]
            if self.extremum == 'max':
                if A[t] > max(earlier) and 0.0 < d < self.epsilon:
                    return t, t
            else:
                if A[t] < min(earlier) and -self.epsilon < d < 0.0:
                    return t, t
        return None

    def fires(self, series, t):
        hit = self.first_firing(series[:t + 1])
        return hit is not None and hit[0] == t


class PatienceMinimum(ConditionSpec):

    """
    Fires once `patience` rounds have passed without a new (strictly lower) minimum of the metric.
    With rollback the decision refers to the round of that minimum, i.e. `patience` rounds back.
    """

    kind = 'patience_minimum'

    @alstop_typed_init({'patience': int, 'rollback': bool})
    def __init__(self, patience, rollback):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.patience = patience
        self.rollback = rollback

    @classmethod
    def create(cls, patience, rollback=True):
        if int(patience) < 1:
            raise CriterionError("alstop.criteria.PatienceMinimum.create: patience must be >= 1")
        return cls(int(patience), bool(rollback))

    def _best_round(self, series, t):
        best, best_round = None, None
        for s in range(t + 1):
            v = series[s]
            if v is not None and (best is None or v < best):
                best, best_round = v, s
        return best_round

    def fires(self, series, t):
        best_round = self._best_round(series, t)
        return best_round is not None and t - best_round >= self.patience

    def decision_round(self, series, t):
        return t - self.patience if self.rollback else t


def condition_from_dict(d):
    d = dict(d)
    kind = d.pop('type', None)
    for cls in (Threshold, ConsecutiveChange, WindowGradient, PatienceMinimum):
        if cls.kind == kind:
            return cls.create(**d)
    raise CriterionError("alstop.criteria.condition_from_dict: unknown condition type " + repr(kind))
