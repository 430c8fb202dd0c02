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
Version-tagged JSON serialization of trained models, for inspecting what a run trained.
"""
import json

import numpy

from alstop.core.crypto import canonical_json
from alstop.core.errors import LearnerError
from alstop.learners.learnerspec import LearnerSpec
from alstop.learners.model import TrainedModel

MODEL_FORMAT = "alstop-model"
MODEL_VERSION = 1


def _array_to_obj(arr):
    arr = numpy.asarray(arr)
    kind = 'int64' if numpy.issubdtype(arr.dtype, numpy.integer) else 'float64'
    return {'dtype': kind, 'shape': list(arr.shape), 'data': arr.ravel().tolist()}


def _obj_to_array(obj):
    return numpy.array(obj['data'], dtype=obj['dtype']).reshape(obj['shape'])


def model_to_json(model):
    obj = {'format': MODEL_FORMAT, 'version': MODEL_VERSION,
           'spec': model.spec.to_dict(), 'classes': model.classes, 'n_features': model.n_features,
           'degenerate': model.degenerate,
           'params': dict((k, _array_to_obj(v)) for k, v in model.params.items())}
    return canonical_json(obj)


def model_from_json(text):
    try:
        obj = json.loads(text)
    except ValueError:
        raise LearnerError("alstop.learners.model_from_json: not valid JSON")
    if not isinstance(obj, dict) or obj.get('format') != MODEL_FORMAT:
        raise LearnerError("alstop.learners.model_from_json: not a serialized alstop model")
    if obj.get('version') != MODEL_VERSION:
        raise LearnerError("alstop.learners.model_from_json: unsupported model version " + repr(obj.get('version')))
    try:
        spec = LearnerSpec.from_dict(obj['spec'])
        params = dict((k, _obj_to_array(v)) for k, v in obj['params'].items())
        return TrainedModel.create(spec, obj['classes'], obj['n_features'], params, degenerate=obj['degenerate'])
    except (KeyError, TypeError, ValueError) as e:
        raise LearnerError("alstop.learners.model_from_json: malformed model (" + str(e) + ")")
