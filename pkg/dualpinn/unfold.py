# Copyright (C) 2026 The dualpinn developers
#
# This file is part of dualpinn.
#
# dualpinn is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# dualpinn is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE.  See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# dualpinn.  If not, see <http://www.gnu.org/licenses/>.

from . import error as _error


def _remove_newline(line):
    for newline in ['\r\n', '\n']:
        if line.endswith(newline):
            return line[:-len(newline)]
    return line


def unfold(stream):
    r"""Iterate through ``(line number, semantic line)`` pairs

    A line starting with a space or tab continues the previous one
    (the single leading blank is dropped).  Blank lines and lines
    starting with ``#`` are skipped, so experiment files can carry
    comments.  The line number is that of the first physical line.

    >>> import io
    >>> stream = io.StringIO('\n'.join([
    ...             'BEGIN:EXPERIMENT',
    ...             '# dual network, two phases',
    ...             'LAYERS:48,48,48,48,',
    ...             ' 48,48',
    ...             '',
    ...             'END:EXPERIMENT',
    ...             ]))
    >>> for number, line in unfold(stream=stream):
    ...     print(number, repr(line))
    1 'BEGIN:EXPERIMENT'
    3 'LAYERS:48,48,48,48,48,48'
    6 'END:EXPERIMENT'
    """
    semantic_line_chunks = []
    first = None
    for number, line in enumerate(stream, 1):
        line = _remove_newline(line)
        if line[:1] in (' ', '\t'):
            if not semantic_line_chunks:
                raise _error.ConfigurationError(
                    ('whitespace-prefixed line {!r} is not a continuation '
                     'of a previous line').format(line), line=number)
            semantic_line_chunks.append(line[1:])
            continue
        if semantic_line_chunks:
            yield first, ''.join(semantic_line_chunks)
            semantic_line_chunks = []
        if not line.strip() or line.startswith('#'):
            continue
        first = number
        semantic_line_chunks = [line]
    if semantic_line_chunks:
        yield first, ''.join(semantic_line_chunks)
