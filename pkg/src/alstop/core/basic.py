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
Basic help functions
"""
import errno, os

import numpy


def is_sequence(arg):
    if isinstance(arg, (str, bytes)):
        return False
    if isinstance(arg, numpy.ndarray):
        return True
    return (not hasattr(arg, "strip") and
            hasattr(arg, "__getitem__") or
            hasattr(arg, "__iter__"))


def mkdir_p(path):
    try:
        os.makedirs(path)
    except OSError as exc:
        if exc.errno == errno.EEXIST and os.path.isdir(path):
            pass
        else:
            raise


def sorted_index_array(indices):
    """
    Return *indices* as a sorted, duplicate-free int64 numpy array.
    """
    if not isinstance(indices, numpy.ndarray):
        indices = list(indices)
    return numpy.unique(numpy.asarray(indices, dtype=numpy.int64))


def to_plain(val):
    """
    Convert numpy scalars and arrays (possibly nested in lists/tuples/dicts) into plain python values.
    """
    if isinstance(val, numpy.ndarray):
        return val.tolist()
    if isinstance(val, numpy.generic):
        return val.item()
    if isinstance(val, dict):
        return dict((k, to_plain(v)) for k, v in val.items())
    if isinstance(val, (list, tuple)):
        return [to_plain(x) for x in val]
    return val
