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
Writers for the CSV tables and JSON summaries alstop produces. Both accept anything the IoAdapter
layer accepts (filenames, open files, IoAdapterString).
"""
import csv, json

from alstop.core.basic import to_plain
from alstop.core.ioadapters import IoAdapterFileWriter


def write_csv(rows, fieldnames, ioa):
    """
    Write a list of dicts as CSV with a header line. Missing keys give empty cells, None is written
    as an empty cell, and floats use their shortest round-trip repr.
    """
    ioa = IoAdapterFileWriter.use(ioa)
    try:
        writer = csv.DictWriter(ioa.file, fieldnames=list(fieldnames), extrasaction='ignore', lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow(dict((k, '' if v is None else to_plain(v)) for k, v in row.items()))
    finally:
        ioa.close()


def write_json(obj, ioa):
    ioa = IoAdapterFileWriter.use(ioa)
    try:
        ioa.file.write(json.dumps(to_plain(obj), sort_keys=True, indent=2) + "\n")
    finally:
        ioa.close()
