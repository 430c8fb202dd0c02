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
Provides a few central and very helpful functions for hashes: object hashes, record checksums and
reproducible seed derivation.
"""
import hashlib, json

from alstop.core.basic import to_plain


def hexhash_str(data, prepend=None):
    s = hashlib.sha1()
    s.update("alstop\0".encode("utf-8"))
    if prepend is not None:
        s.update(prepend.encode("utf-8"))
        s.update("\0".encode("utf-8"))
    s.update(data.encode("utf-8"))
    s.update(("\0%u\0" % len(data)).encode("utf-8"))
    return s.hexdigest()


def tuple_to_str(t):
    strlist = []
    for i in t:
        if isinstance(i, tuple):
            strlist.append("\n" + tuple_to_str(i))
        else:
            strlist.append(repr(i))
    return " ".join(strlist)


def tuple_to_hexhash(t):
    return hexhash_str(tuple_to_str(t))


def canonical_json(obj):
    """
    Deterministic JSON text for *obj*: sorted keys, no whitespace, shortest round-trip float repr.
    """
    return json.dumps(to_plain(obj), sort_keys=True, separators=(',', ':'), allow_nan=False)


def checksum_obj(obj, prepend=None):
    return hexhash_str(canonical_json(obj), prepend=prepend)


def derive_seed(base_seed, *parts):
    """
    Derive a 32-bit seed from a base seed and any number of identifying parts (dataset name, learner
    kind, repeat index, stage name, ...). The same inputs always give the same seed, independent of
    process, platform and scheduling order.
    """
    text = "\0".join([str(int(base_seed))] + [str(p) for p in parts])
    digest = hashlib.sha1(("alstop-seed\0" + text).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], 'big') % (2**32)
