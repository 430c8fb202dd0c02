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

import sys, pprint

from alstop.config import config


def cout(*args):
    sys.stdout.write(' '.join(map(str, args))+'\n')


def cerr(*args):
    sys.stderr.write(' '.join(map(str, args))+'\n')


def warn(*args):
    sys.stderr.write('Warning: ' + ' '.join(map(str, args))+'\n')


_verbosity = None


def get_verbosity():
    global _verbosity
    if _verbosity is None:
        try:
            _verbosity = config.get_typed('general', 'verbosity', 0)
        except ValueError:
            _verbosity = 0
    return _verbosity


def set_verbosity(level):
    global _verbosity
    _verbosity = int(level)


def logger(*args, **kargs):
    """
    Default logging function for diagnostic output. Prints `args` on stderr when the
    designated loglevel is at most the configured verbosity ([general] verbosity).

    Args:
      args:
         list of arguments to print out
      kargs:
         keyword flags. These are:
         loglevel=n: the level designated to the diagnostic output (default 1).
         pretty=True: formats the output using pprint.pformat(arg).
    """
    loglevel = kargs.get('loglevel', 1)
    if loglevel > get_verbosity():
        return
    if kargs.get('pretty', False):
        for arg in args:
            sys.stderr.write(pprint.pformat(arg)+'\n')
    else:
        sys.stderr.write(' '.join(map(str, args))+'\n')
