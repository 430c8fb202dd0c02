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
Trace files: newline-delimited JSON.

Line 1 is a header object identifying the format and version and carrying the run metadata and
config snapshot. Every following line holds one iteration record together with a sha1 checksum of
its canonical JSON. A final footer line records how the run ended; a trace without a footer is a run
still in progress (or one that died without closing its file). Floats are written with the shortest
repr that round-trips, so reading a trace back gives bit-identical values.
"""
import json

from alstop.core.crypto import canonical_json, checksum_obj
from alstop.core.errors import TraceFormatError, TraceVersionError, TraceChecksumError
from alstop.core.ioadapters import IoAdapterFileWriter, IoAdapterFileReader
from alstop.data.trace import TraceConfig, IterationRecord, RunTrace

TRACE_FORMAT = "alstop-trace"
TRACE_VERSION = 1


def _header_obj(trace):
    header = {'format': TRACE_FORMAT, 'version': TRACE_VERSION, 'dataset': trace.dataset, 'model': trace.model,
              'seed': trace.seed, 'config': trace.config.to_dict(), 'classes': trace.classes,
              'stopset': trace.stopset}
    return {'header': header, 'checksum': checksum_obj(header)}


def _record_line(record):
    rec = record.to_dict()
    return canonical_json({'record': rec, 'checksum': checksum_obj(rec)})


def _footer_line(trace):
    return canonical_json({'footer': {'status': trace.status, 'message': trace.message, 'records': len(trace.records)}})


class TraceWriter(object):

    """
    Single-writer, append-only streaming writer. The header is written on construction, each record
    as soon as it is appended, and the footer on close.
    """

    def __init__(self, ioa, trace):
        self.ioa = IoAdapterFileWriter.use(ioa)
        self.trace = trace
        self._write(canonical_json(_header_obj(trace)))
        for record in trace.records:
            self._write(_record_line(record))

    def _write(self, line):
        self.ioa.file.write(line + "\n")
        self.ioa.file.flush()

    def append(self, record):
        self.trace.append(record)
        self._write(_record_line(record))

    def close(self, status='complete', message=''):
        self.trace.status = status
        self.trace.message = message
        self.trace._hexhash = None
        self._write(_footer_line(self.trace))
        self.ioa.close()


def serialize_trace(trace):
    """
    Serialize *trace* to bytes (UTF-8 encoded newline-delimited JSON).
    """
    lines = [canonical_json(_header_obj(trace))]
    for record in trace.records:
        lines.append(_record_line(record))
    if trace.status != 'running':
        lines.append(_footer_line(trace))
    return ("\n".join(lines) + "\n").encode('utf-8')


def write_trace(trace, ioa):
    ioa = IoAdapterFileWriter.use(ioa)
    try:
        ioa.file.write(serialize_trace(trace).decode('utf-8'))
    finally:
        ioa.close()


def deserialize_trace(data):
    """
    Parse trace bytes (or text) back into a RunTrace.

    Raises TraceVersionError for another format version, TraceChecksumError when a record does not
    match its checksum, and TraceFormatError for malformed or truncated lines; record errors name
    the round index that failed.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError:
            raise TraceFormatError("alstop.data.deserialize_trace: trace is not valid UTF-8")
    truncated_tail = len(data) > 0 and not data.endswith("\n")
    lines = data.split("\n")
    if lines and lines[-1] == '':
        lines = lines[:-1]
    if len(lines) == 0:
        raise TraceFormatError("alstop.data.deserialize_trace: empty trace")

    try:
        head = json.loads(lines[0])
        header = head['header']
    except (ValueError, KeyError, TypeError):
        raise TraceFormatError("alstop.data.deserialize_trace: malformed header line")
    if header.get('format') != TRACE_FORMAT:
        raise TraceFormatError("alstop.data.deserialize_trace: not an alstop trace (format " + repr(header.get('format')) + ")")
    if header.get('version') != TRACE_VERSION:
        raise TraceVersionError("alstop.data.deserialize_trace: trace version " + repr(header.get('version')) + " is not supported (expected " + str(TRACE_VERSION) + ")")
    if head.get('checksum') != checksum_obj(header):
        raise TraceChecksumError("alstop.data.deserialize_trace: header checksum mismatch")

    try:
        trace = RunTrace.create(header['dataset'], header['model'], header['seed'],
                                TraceConfig.from_dict(header['config']), header['classes'],
                                stopset=header['stopset'], status='running')
    except KeyError as e:
        raise TraceFormatError("alstop.data.deserialize_trace: header lacks field " + str(e))

    footer = None
    for lineno, line in enumerate(lines[1:], start=1):
        expected_round = len(trace.records)
        is_last = (lineno == len(lines) - 1)
        if footer is not None:
            raise TraceFormatError("alstop.data.deserialize_trace: data after footer")
        try:
            obj = json.loads(line)
        except ValueError:
            if is_last and truncated_tail:
                raise TraceFormatError("alstop.data.deserialize_trace: truncated record", round_index=expected_round)
            raise TraceFormatError("alstop.data.deserialize_trace: corrupted record", round_index=expected_round)
        if not isinstance(obj, dict):
            raise TraceFormatError("alstop.data.deserialize_trace: corrupted record", round_index=expected_round)
        if 'footer' in obj:
            footer = obj['footer']
            continue
        if 'record' not in obj or 'checksum' not in obj:
            raise TraceFormatError("alstop.data.deserialize_trace: corrupted record", round_index=expected_round)
        rec = obj['record']
        if obj['checksum'] != checksum_obj(rec):
            raise TraceChecksumError("alstop.data.deserialize_trace: checksum mismatch", round_index=expected_round)
        try:
            record = IterationRecord.from_dict(rec)
        except (KeyError, TypeError, ValueError) as e:
            raise TraceFormatError("alstop.data.deserialize_trace: invalid record (" + str(e) + ")", round_index=expected_round)
        trace.append(record)

    if footer is not None:
        if footer.get('records') != len(trace.records):
            raise TraceFormatError("alstop.data.deserialize_trace: footer record count does not match", round_index=len(trace.records))
        trace.status = footer.get('status', 'complete')
        trace.message = footer.get('message', '')
        trace._hexhash = None
    return trace


def read_trace(ioa):
    ioa = IoAdapterFileReader.use(ioa)
    try:
        data = ioa.file.read()
    finally:
        ioa.close()
    return deserialize_trace(data)
