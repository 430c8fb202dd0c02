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
The alstop.learners package

Probabilistic classifiers (one-vs-rest linear, random forest, single-hidden-layer neural network)
behind a common fit / posterior / predict / confidence contract.
"""

from alstop.learners.learnerspec import LearnerSpec, LEARNER_KINDS, LEARNER_DEFAULTS, LEARNER_CAPABILITIES, learner_defaults, has_capability
from alstop.learners.model import TrainedModel, fit, posterior, predict, confidence
from alstop.learners.modelio import model_to_json, model_from_json

__all__ = ["LearnerSpec", "LEARNER_KINDS", "LEARNER_DEFAULTS", "LEARNER_CAPABILITIES", "learner_defaults",
           "has_capability", "TrainedModel", "fit", "posterior", "predict", "confidence",
           "model_to_json", "model_from_json"]
