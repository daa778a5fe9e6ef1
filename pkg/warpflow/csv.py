# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Copyright (c) 2026 The warpflow developers
# All rights reserved.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
This module provides the CSV (Comma Separated Values) wrappers used for every
tabular file the package reads or writes: run records, hypersurface
snapshots, isoperimetric profile tables and tabulated warping functions.

The :class:`CSVTarget` class is a context manager with a
:meth:`~CSVTarget.write` method that accepts row tuples, optionally preceded
by ``#`` comment lines (the provenance header) and a header row taken from
the ``_fields`` of the first namedtuple written. The :class:`CSVSource` class
reads numeric rows back, skipping comments and an optional header row.


Classes
=======

.. autoclass:: CSVTarget(fileobj, header=False, comments=(), dialect=CSV_DIALECT, encoding='utf-8', **kwargs)
   :members:

.. autoclass:: CSVSource(fileobj, columns=None, dialect=CSV_DIALECT, encoding='utf-8', **kwargs)
   :members:

.. class:: CSV_DIALECT

    The default dialect, :class:`csv.excel` with UNIX line endings
    (``'\\n'``), so that output files are byte-identical across platforms.


Exceptions
==========

.. autoexception:: CSVError


Examples
========

Writing a run record with its provenance header::

    import io
    from warpflow import csv

    with io.open('record.csv', 'wb') as outfile:
        with csv.CSVTarget(outfile, header=True,
                           comments=['generator: warpflow 0.1']) as target:
            for row in result.record:
                target.write(row)

Reading a tabulated warping function::

    with io.open('profile.csv', 'rb') as infile:
        with csv.CSVSource(infile, columns=2) as source:
            rows = list(source)
"""

import csv as csv_
import codecs
import logging

from .exc import WarpflowError


class CSV_DIALECT(csv_.excel):
    # pylint: disable=invalid-name,too-few-public-methods
    lineterminator = '\n'


class CSVError(WarpflowError):
    """
    Raised when a CSV source contains a malformed row.

    :param str message: The error message
    :param int line_number: The line of the source containing the error
    """
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        super(CSVError, self).__init__(message)

    def __str__(self):
        result = super(CSVError, self).__str__()
        if self.line_number is not None:
            result = 'Line %d: %s' % (self.line_number, result)
        return result


class CSVSource(object):
    """
    Wraps a stream containing numeric CSV rows.

    Iterating over the source yields a tuple of floats per row. Blank lines
    and lines starting with ``#`` are skipped, as is a first row that does
    not parse as numbers (a header row). If *columns* is given, every row
    must have exactly that many values.

    .. warning::

        *fileobj* must be a binary stream (``'rb'``); the source decodes
        its own input.
    """
    # pylint: disable=too-few-public-methods

    def __init__(
            self, fileobj, columns=None, dialect=CSV_DIALECT,
            encoding='utf-8', **kwargs):
        # pylint: disable=too-many-arguments
        self.fileobj = fileobj
        self.columns = columns
        self.dialect = dialect
        self.encoding = encoding
        self.keywords = kwargs
        self.count = 0

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback):
        logging.debug('Read %d CSV rows', self.count)

    def __iter__(self):
        reader = codecs.getreader(self.encoding)(self.fileobj)
        first = True
        for line_number, line in enumerate(reader, start=1):
            if not line.strip() or line.lstrip().startswith('#'):
                continue
            row = next(csv_.reader(
                [line], dialect=self.dialect, **self.keywords))
            if self.columns is not None and len(row) != self.columns:
                raise CSVError(
                    'expected %d columns, found %d' % (
                        self.columns, len(row)), line_number)
            try:
                values = tuple(float(value) for value in row)
            except ValueError:
                if first:
                    logging.debug('Skipping header row')
                    first = False
                    continue
                raise CSVError('non-numeric value in row', line_number)
            first = False
            self.count += 1
            yield values


class CSVTarget(object):
    """
    Writes records, snapshots and profiles as CSV.

    Each call to :meth:`write` emits one row. Python floats come out in
    their shortest form that reads back to the same value, so two runs of
    the same configuration produce identical files; None becomes an empty
    cell. The strings in *comments* are written before anything else, one
    ``# `` line each, and with *header* set the field names of the first
    row (which must then be a namedtuple) follow as a header line. Every
    later row must have as many cells as the first.

    :class:`CSV_DIALECT` is used unless *dialect* says otherwise, and
    keyword arguments override single dialect attributes, for example::

        CSVTarget(outfile, dialect=CSV_DIALECT, delimiter='\\t')

    .. warning::

        *fileobj* must be a binary stream (``'wb'``): the target encodes
        its own output and the dialect fixes the line terminator.
    """
    # pylint: disable=too-few-public-methods,too-many-instance-attributes

    def __init__(
            self, fileobj, header=False, comments=(), dialect=CSV_DIALECT,
            encoding='utf-8', **kwargs):
        # pylint: disable=too-many-arguments
        self.fileobj = fileobj
        self.header = header
        self.dialect = dialect
        self.encoding = encoding
        self.keywords = kwargs
        self.count = 0
        self._width = None
        # csv writes text, the target is binary
        stream = codecs.getwriter(encoding)(fileobj)
        self._writer = csv_.writer(stream, dialect=dialect, **kwargs)
        terminator = kwargs.get('lineterminator', dialect.lineterminator)
        for comment in comments:
            stream.write('# %s%s' % (comment, terminator))

    def __enter__(self):
        logging.debug('Opening CSV output')
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback):
        self.close()

    def close(self):
        """
        Finish the output; :meth:`write` may not be called afterwards.
        """
        logging.debug('Closing CSV output after %d rows', self.count)
        self._writer = None
        self._width = None

    def write(self, row):
        """
        Write *row*, a tuple (usually a namedtuple) of cell values.

        :raises TypeError: if *row* is wider or narrower than the first row
        """
        if self._width is None:
            self._width = len(row)
            if self.header and hasattr(row, '_fields'):
                self._writer.writerow(row._fields)
        elif len(row) != self._width:
            raise TypeError(
                'expected %d cells in row %d, found %d' % (
                    self._width, self.count + 1, len(row)))
        self._writer.writerow(row)
        self.count += 1
