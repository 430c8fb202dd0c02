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
Exception hierarchy shared by all alstop modules.

The command line maps the three top-level families to exit codes: UsageError -> 1, DataError -> 2,
RunError -> 3. Errors outside these families (criterion, cost, stats) are programming or input
errors of the library API and surface as exit code 1 from the CLI.
"""

#### Custom Exceptions

class AlstopError(Exception):
    exit_code = 1


class UsageError(AlstopError):
    exit_code = 1


class DataError(AlstopError):
    exit_code = 2


class DatasetFormatError(DataError):
    def __init__(self, message, line=None, filename=None):
        if line is not None:
            message = message + " (line " + str(line) + ")"
        if filename is not None:
            message = message + " in " + str(filename)
        super(DatasetFormatError, self).__init__(message)
        self.line = line
        self.filename = filename


class PoolError(DataError):
    pass


class TraceFormatError(DataError):
    def __init__(self, message, round_index=None):
        if round_index is not None:
            message = message + " (round " + str(round_index) + ")"
        super(TraceFormatError, self).__init__(message)
        self.round_index = round_index


class TraceVersionError(TraceFormatError):
    pass


class TraceChecksumError(TraceFormatError):
    pass


class RunError(AlstopError):
    exit_code = 3


class RunConfigError(RunError):
    pass


class LearnerError(RunError):
    pass


class CriterionError(AlstopError):
    pass


class CriterionNotApplicable(CriterionError):
    pass


class UndefinedMetric(CriterionError):
    pass


class CostError(AlstopError):
    pass


class StatsError(AlstopError):
    pass


class UndefinedCorrelation(StatsError):
    pass
