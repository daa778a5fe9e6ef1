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
This module draws the console status line of a flow run: a bar over simulated
time ``t / t_max`` followed by the step count and the current largest tilt
η. The :class:`RunMeter` class is the major element that this module
provides; :func:`render_bar` is exposed for reuse.


Classes
=======

.. autoclass:: RunMeter
   :members:


Functions
=========

.. autofunction:: render_bar


Examples
========

The flow driver calls ``update(t, steps, eta)`` on whatever meter it is
given, so a meter can be handed straight to :func:`~warpflow.flow.run`::

    from warpflow import flow, progress

    config = flow.FlowConfig(t_max=10.0)
    with progress.RunMeter(t_max=config.t_max) as meter:
        result = flow.run(space, initial, config, meter=meter)

Runs take many thousands of steps, so :meth:`RunMeter.update` only redraws
once :attr:`RunMeter.max_wait` seconds have passed since the last redraw.
"""

import sys
import time


def render_bar(fraction, width=30):
    """
    Return a bar *width* characters wide between brackets, filled to
    *fraction* (clipped to [0, 1]), followed by the percentage.
    """
    fraction = min(max(fraction, 0.0), 1.0)
    filled = int((width - 1) * fraction)
    return '[%s>%s] %3d%%' % (
        '=' * filled, ' ' * (width - 1 - filled), int(100 * fraction))


class RunMeter(object):
    """
    Draws and redraws the status line of a run on *stream*. Used as a
    context manager, the line is drawn on entry and erased on exit (or left
    in place, followed by a newline, if *hide_on_finish* is False).

    :param float t_max: The simulated time at which the run stops
    :param float max_wait: The least number of seconds between redraws
    :param file stream: Where to draw, defaults to stderr
    :param int width: The width of the bar between its brackets
    :param bool hide_on_finish: Erase the line when the context exits
    """
    # pylint: disable=too-many-instance-attributes

    def __init__(
            self, t_max, max_wait=0.1, stream=None, width=30,
            hide_on_finish=True):
        # pylint: disable=too-many-arguments
        if not t_max > 0:
            raise ValueError('t_max must be positive')
        self.t_max = float(t_max)
        self.max_wait = max_wait
        self.stream = sys.stderr if stream is None else stream
        self.width = width
        self.hide_on_finish = hide_on_finish
        self.t = 0.0
        self.steps = None
        self.eta = None
        self._drawn = ''
        self._drawn_t = None
        self._drawn_at = None

    def status(self):
        """
        Return the status line for the latest update.
        """
        line = '%s t=%.4g' % (render_bar(self.t / self.t_max, self.width),
                              self.t)
        if self.steps is not None:
            line += ' step=%d' % self.steps
        if self.eta is not None:
            line += ' eta=%.2e' % self.eta
        return line

    def update(self, t, steps=None, eta=None):
        """
        Record the run at simulated time *t* (clipped to *t_max*) after
        *steps* steps with largest tilt *eta*, and redraw if the time has
        moved and :attr:`max_wait` has elapsed.
        """
        self.t = min(float(t), self.t_max)
        self.steps = steps
        self.eta = eta
        if self.t == self._drawn_t:
            return
        now = time.time()
        if self._drawn_at is None or now > self._drawn_at + self.max_wait:
            self._draw()
            self._drawn_at = now

    def show(self):
        """
        Draw the status line now.
        """
        self._draw()
        self._drawn_at = time.time()

    def hide(self):
        """
        Erase the status line; the next update draws immediately.
        """
        self._erase()
        self._drawn_at = None

    def _erase(self):
        if self._drawn:
            size = len(self._drawn)
            self.stream.write('\b' * size + ' ' * size + '\b' * size)
            self.stream.flush()
            self._drawn = ''

    def _draw(self):
        self._erase()
        self._drawn = self.status()
        self._drawn_t = self.t
        self.stream.write(self._drawn)
        self.stream.flush()

    def __enter__(self):
        self.show()
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback):
        self.hide()
        if not self.hide_on_finish:
            self._draw()
            self.stream.write('\n')
