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
IoAdapter classes let the readers and writers of datasets, traces and result tables take a
filename, an open file or an in-memory string without caring which. Files ending in .gz or .bz2
are (de)compressed on the fly.

  IoAdapterFileReader.use(x) / IoAdapterFileWriter.use(x) give an adapter with an open text
  file in .file; call .close() when done. Files the adapter opened itself are closed then, files
  handed in by the caller are left open.
"""
import os, bz2, gzip
from io import StringIO

_COMPRESSED = {'.gz': gzip.open, '.bz2': bz2.open}


def cleveropen(filename, mode):
    """
    Open *filename* as utf-8 text, (de)compressing .gz and .bz2 files. When reading, a missing
    file is also looked for with a .gz or .bz2 suffix added.
    """
    ext = os.path.splitext(filename)[1].lower()
    if ext in _COMPRESSED:
        return _COMPRESSED[ext](filename, mode + 't', encoding='utf-8')
    if mode != 'r':
        return open(filename, mode, encoding='utf-8', newline='')
    if os.path.exists(filename):
        return open(filename, 'r', encoding='utf-8', newline='')
    for suffix, opener in _COMPRESSED.items():
        if os.path.exists(filename + suffix):
            return opener(filename + suffix, 'rt', encoding='utf-8')
    raise IOError("alstop.core.ioadapters.cleveropen: file not found: " + str(filename))


class IoAdapterString(object):

    """
    In-memory text. Writers append to it; .string always holds the current content.
    """

    def __init__(self, string=None, name=None):
        self._string = "" if string is None else string
        self.name = name
        self._reroute = None

    @property
    def string(self):
        if self._reroute is not None:
            return self._reroute.getvalue()
        return self._string


class IoAdapterFilename(object):

    def __init__(self, filename, name=None):
        self.filename = os.fspath(filename)
        self.name = self.filename if name is None else name


def universal_opener(other):
    """
    Wrap a plain filename, path or file object in the matching adapter.
    """
    if isinstance(other, (IoAdapterString, IoAdapterFilename, _OpenFile)):
        return other
    if isinstance(other, (str, os.PathLike)):
        return IoAdapterFilename(other)
    if hasattr(other, 'read') or hasattr(other, 'write'):
        return _OpenFile(other, name=getattr(other, 'name', None))
    raise TypeError("alstop.core.ioadapters: cannot do io on a " + other.__class__.__name__)


class _OpenFile(object):

    def __init__(self, f, name=None, close=False):
        self.file = f
        self.name = name
        self.close_file = close

    def close(self):
        if self.file is not None and self.close_file:
            self.file.close()
        self.file = None


class IoAdapterFileReader(_OpenFile):

    @classmethod
    def use(cls, other):
        other = universal_opener(other)
        if isinstance(other, IoAdapterFileReader):
            return other
        if isinstance(other, IoAdapterString):
            return cls(StringIO(other.string), name=other.name)
        if isinstance(other, IoAdapterFilename):
            return cls(cleveropen(other.filename, 'r'), name=other.name, close=True)
        return cls(other.file, name=other.name, close=other.close_file)


class IoAdapterFileWriter(_OpenFile):

    @classmethod
    def use(cls, other):
        other = universal_opener(other)
        if isinstance(other, IoAdapterFileWriter):
            return other
        if isinstance(other, IoAdapterString):
            f = StringIO(other.string)
            f.seek(0, os.SEEK_END)
            other._reroute = f
            return cls(f, name=other.name)
        if isinstance(other, IoAdapterFilename):
            return cls(cleveropen(other.filename, 'w'), name=other.name, close=True)
        return cls(other.file, name=other.name, close=other.close_file)
