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
The alstop.data package

Core value types: datasets, pool partitions and the versioned run-trace format.
"""

from alstop.data.dataset import Dataset
from alstop.data.pool import PoolState, make_split, make_initial_set, draw_subsample, replenish_subsample, draw_stopset
from alstop.data.trace import TraceConfig, IterationRecord, RunTrace, check_posteriors, POSTERIOR_TOLERANCE
from alstop.data.traceio import serialize_trace, deserialize_trace, read_trace, write_trace, TraceWriter, TRACE_VERSION

__all__ = ["Dataset", "PoolState", "make_split", "make_initial_set", "draw_subsample", "replenish_subsample",
           "draw_stopset", "TraceConfig", "IterationRecord", "RunTrace", "check_posteriors", "POSTERIOR_TOLERANCE",
           "serialize_trace", "deserialize_trace", "read_trace", "write_trace", "TraceWriter", "TRACE_VERSION"]
