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
The alstop.query package

Ranked batch-mode uncertainty sampling: the query strategy that picks each round's batch.
"""

from alstop.query.rankedbatch import QueryConfig, rank_batch, ranked_selection, cosine_similarity, rbf_similarity, median_bandwidth

__all__ = ["QueryConfig", "rank_batch", "ranked_selection", "cosine_similarity", "rbf_similarity", "median_bandwidth"]
