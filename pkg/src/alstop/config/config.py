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
Read and setup alstop configuration and versioning data.

python_root is derived as the directory config.py is in + ..

config is a configparser.config object where:

- All assignments in a distdata.py file in python_root are read into the section [distdata]
- Read alstop.cfg in python_root (the shipped defaults)
- Read ~/.alstop/config (per-user overrides)
- Read the file named by the environment variable ALSTOP_CONFIG, if set

If the file distdata.py in python_root exists, the section [distdata] is looked up for version,
version_date, and copyright_note. If this file does not exist, they are instead derived using the 'git'
command. If that does not work, they are set to 'unknown', except for copyright_note, which is set to
a sensible default.

This python file has no dependencies except for the standard library (neither within alstop or outside).
It will always remain safe to import by itself, e.g.::

  (cd src/alstop/config; python -c "import sys, config; sys.stdout.write(config.version + '\\n')")
"""

_default_alstop_root = '../..'
_default_copyright_name = "The alstop developers"
_default_copyright_note = "(c) 2026, " + _default_copyright_name

import sys, os, inspect, subprocess, datetime
import codecs
import configparser
from io import StringIO

python_root = os.path.realpath(os.path.join(os.path.abspath(os.path.split(inspect.getfile(inspect.currentframe()))[0]), '..'))
alstop_root = None
_config = configparser.ConfigParser()


def read_config():
    global python_root, alstop_root, _config

    try:
        with open(os.path.join(python_root, "distdata.py"), 'r') as fp:
            distdata_str = fp.read()
            ini_fp = StringIO('[distdata]\n' + distdata_str)
            _config.read_file(ini_fp)
            alstop_root = os.path.realpath(os.path.join(python_root, _config.get('distdata', 'root').strip('"')))
    except (IOError, configparser.NoSectionError, configparser.NoOptionError):
        alstop_root = os.path.realpath(os.path.join(python_root, _default_alstop_root))

    internal_cfgpathstr = os.path.join(python_root, 'alstop.cfg')
    local_cfgpathstr = os.path.expanduser('~/.alstop/config')
    cfgpaths = [internal_cfgpathstr, local_cfgpathstr]
    if 'ALSTOP_CONFIG' in os.environ:
        cfgpaths += [os.environ['ALSTOP_CONFIG']]
    _config.read(cfgpaths)


def determine_version_data():
    global python_root, alstop_root, _config

    alstop_version = None
    if os.path.exists(os.path.join(python_root, "distdata.py")):
        try:
            alstop_version = _config.get('distdata', 'version').strip('"')
            alstop_version_date = _config.get('distdata', 'version_date').strip('"')
            alstop_copyright_note = _config.get('distdata', 'copyright_note').strip('"')
        except (configparser.NoSectionError, configparser.NoOptionError):
            alstop_version = None

    if alstop_version is None:
        try:
            bypass = _config.getboolean('general', 'bypass_git_version_lookup')
        except (configparser.NoSectionError, configparser.NoOptionError):
            bypass = False
        if (not bypass) and os.path.exists(os.path.join(alstop_root, '.git')):
            try:
                alstop_version = subprocess.check_output(["git", "describe", "--dirty", "--always"], cwd=python_root, stderr=subprocess.DEVNULL).strip()
                alstop_version = codecs.decode(alstop_version, 'utf-8')
                if alstop_version.endswith('-dirty'):
                    _git_commit_datetime = datetime.datetime.now()
                else:
                    _git_commit_datetime = datetime.datetime.fromtimestamp(int(subprocess.check_output(["git", "log", "-1", '--format=%ct'], cwd=python_root)))
                alstop_version_date = "%d-%02d-%02d" % (_git_commit_datetime.year, _git_commit_datetime.month, _git_commit_datetime.day)
                alstop_copyright_note = "(c) 2026 - " + str(_git_commit_datetime.year) + " " + _default_copyright_name

                # PEP 440 compliance
                alstop_version = alstop_version.lstrip('v')
                alstop_version = alstop_version.replace('-', '.dev', 1)
                alstop_version = alstop_version.replace('-', '+', 1)
                if alstop_version.endswith('-dirty'):
                    alstop_version = alstop_version.replace('-dirty', '.d')

            except Exception as e:
                sys.stderr.write("Note: failed to obtain alstop version from git: " + str(e) + "\n")
                alstop_version = None

        if alstop_version is None:
            alstop_version = _config.get('general', 'fallback_version', fallback='unknown')
            alstop_version_date = 'unknown'
            alstop_copyright_note = _default_copyright_note

    return {'alstop_version': alstop_version, 'alstop_version_date': alstop_version_date, 'alstop_copyright_note': alstop_copyright_note}

read_config()
_version_data = determine_version_data()
version = _version_data['alstop_version']
if version == 'unknown':
    major_version = '0'
    minor_version = '0'
    patch_version = 'unknown'
else:
    try:
        _version_list = version.split('.')
        major_version = int(_version_list[0])
        minor_version = int(_version_list[1])
        patch_version = '.'.join(_version_list[2:])
    except Exception:
        sys.stderr.write("Warning: could not determine version numbers. Version string was:" + str(version) + "\n")
        major_version = '0'
        minor_version = '0'
        patch_version = 'unknown'
version_date = _version_data['alstop_version_date']
copyright_note = _version_data['alstop_copyright_note']


class ExceptionlessConfig(object):
    """
    Wraps a ConfigParser so that lookups of missing sections or options return None instead of raising.
    """

    def __init__(self, config):
        self._config = config

    def __getattr__(self, attr):
        configattr = getattr(self._config, attr)
        if hasattr(configattr, '__call__'):
            def wrapped_func(*args, **kargs):
                try:
                    return configattr(*args, **kargs)
                except (configparser.NoSectionError, configparser.NoOptionError):
                    return None
            return wrapped_func
        else:
            return configattr

    def get_typed(self, section, option, default, kind=None):
        """
        Look up an option and convert it to the type of *default* (or *kind*); return *default* when absent.
        """
        if kind is None:
            kind = type(default)
        if not self._config.has_option(section, option):
            return default
        raw = self._config.get(section, option).strip()
        if raw == '':
            return default
        if kind is bool:
            return self._config.getboolean(section, option)
        return kind(raw)


config = ExceptionlessConfig(_config)
