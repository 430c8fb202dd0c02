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
Base class for alstop value objects.

Subclasses declare their constructor fields and types with the @alstop_typed_init decorator. The base
class then provides structural equality, a tuple representation, a sha1 hexhash, and conversion to and
from plain dicts (which is what the JSON formats are built from). Following the project coding
guidelines, constructors are private; objects are made with the .create classmethod, which validates.
"""
import numpy

from alstop.core.crypto import tuple_to_hexhash
from alstop.core.basic import is_sequence, to_plain


def alstop_typed_init(t, **kargs):
    def wrapfactory(func):
        func.typed_init = (lambda x=(t, kargs): x)
        return func
    return wrapfactory


def _to_tupleval(val):
    if isinstance(val, AlstopObject):
        return val.to_tuple()
    if isinstance(val, numpy.ndarray):
        return _to_tupleval(val.tolist())
    if isinstance(val, numpy.generic):
        return val.item()
    if isinstance(val, dict):
        return tuple(sorted((k, _to_tupleval(v)) for k, v in val.items()))
    if is_sequence(val):
        return tuple(_to_tupleval(x) for x in val)
    return val


def _to_dictval(val):
    if isinstance(val, AlstopObject):
        return val.to_dict()
    if isinstance(val, dict):
        return dict((k, _to_dictval(v)) for k, v in val.items())
    if isinstance(val, (list, tuple)):
        return [_to_dictval(x) for x in val]
    return to_plain(val)


def _from_dictval(t, val):
    if val is None:
        return None
    if isinstance(t, list):
        return [_from_dictval(t[0], x) for x in val]
    if isinstance(t, type) and issubclass(t, AlstopObject):
        return t.from_dict(val)
    return val


class AlstopObject(object):

    @classmethod
    def types(cls):
        if 'types_resolved' in cls.__dict__:
            return cls.types_resolved

        typedata = cls.__init__.typed_init()
        inputkeydict = typedata[0]
        data = dict(typedata[1])
        params = cls.__init__.__code__.co_varnames[1:cls.__init__.__code__.co_argcount]

        keys = []
        for param in params:
            if param in inputkeydict:
                keys += [(param, inputkeydict[param])]

        data['keys'] = keys
        data['name'] = cls.__name__
        data['keydict'] = dict(keys)
        if 'skip' not in data:
            data['skip'] = []

        cls.types_resolved = data
        return data

    def to_tuple(self):
        keys = [self.types()['name']]
        for param, _ in self.types()['keys']:
            if param in self.types()['skip']:
                continue
            keys += [(param, _to_tupleval(getattr(self, param)))]
        return tuple(keys)

    @property
    def hexhash(self):
        if getattr(self, '_hexhash', None) is None:
            self._hexhash = tuple_to_hexhash(self.to_tuple())
        return self._hexhash

    def to_dict(self):
        out = {}
        for param, _ in self.types()['keys']:
            if param in self.types()['skip']:
                continue
            out[param] = _to_dictval(getattr(self, param))
        return out

    @classmethod
    def from_dict(cls, d):
        kargs = {}
        for param, t in cls.types()['keys']:
            if param in d:
                kargs[param] = _from_dictval(t, d[param])
        return cls.create(**kargs)

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.to_tuple() == other.to_tuple()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.hexhash)

    def __repr__(self):
        fields = []
        for param, _ in self.types()['keys']:
            val = getattr(self, param)
            if isinstance(val, numpy.ndarray):
                val = "<array %s>" % (val.shape,)
            elif is_sequence(val) and len(val) > 6:
                val = "<%d items>" % (len(val),)
            fields += [param + "=" + repr(val) if not isinstance(val, str) or not val.startswith('<') else param + "=" + val]
        return self.__class__.__name__ + "(" + ", ".join(fields) + ")"
