"""!
@brief Additive circuit diagrams.

Every dimension is a horizontal wire. Ry⁺ is a box over two wires, Rz⁺ a circle labeled with its angle and X⁺ a
crossing. Wires are reordered (drawn as crossings) whenever a Ry⁺ acts on two wires that are not adjacent, so boxes
always span two neighboring rows; the circuit itself is not modified.

Given an input basis state, each wire segment is styled by the amplitude it carries at that point: transparency
encodes the magnitude and color the phase.
"""
import colorsys
import math
from typing import List, NamedTuple, Optional

import drawsvg as draw

from . import trace as logging
from .angles import PHASE_PERIOD
from .circuit import AdditiveCircuit, RyPlus, RzPlus
from .semantics import trace_state

_logger = logging.getLogger('addcirc.render')

MARGIN = 40
COLUMN_WIDTH = 60
ROW_HEIGHT = 40
BOX_WIDTH = 40


class WireStyle(NamedTuple):
    # |amplitude|, clamped to [0, 1].
    opacity: float
    # Phase as a fraction of a full turn, in [0, 1).
    hue: float

    @property
    def color(self) -> str:
        """!
        @brief The stroke color: black at phase 0, running around the color wheel as the phase grows.
        """
        value = abs(math.sin(math.pi * self.hue))
        r, g, b = colorsys.hsv_to_rgb(self.hue, 1.0, value)
        return '#%02x%02x%02x' % (int(round(r * 255)), int(round(g * 255)), int(round(b * 255)))


def wire_style(amplitude: complex) -> WireStyle:
    magnitude = abs(amplitude)
    if magnitude == 0.0:
        return WireStyle(0.0, 0.0)
    hue = (math.atan2(amplitude.imag, amplitude.real) % PHASE_PERIOD) / PHASE_PERIOD
    return WireStyle(min(magnitude, 1.0), hue % 1.0)


def trace_styles(circuit: AdditiveCircuit, input: int) -> List[List[WireStyle]]:
    """!
    @brief The style of every wire before the first gate and after each gate, indexed `[step][dim]`.
    """
    return [[wire_style(complex(a)) for a in snapshot] for snapshot in trace_state(circuit, input).snapshots]


class _Column(NamedTuple):
    # Gate index; the state entering the column is snapshot `step`.
    step: int
    # Row of every dimension on the left and right side of the column.
    rows_in: List[int]
    rows_out: List[int]


def _layout(circuit: AdditiveCircuit) -> List[_Column]:
    order = list(range(circuit.dim))
    columns = []
    for step, gate in enumerate(circuit.gates):
        rows_in = [0] * circuit.dim
        for row, d in enumerate(order):
            rows_in[d] = row
        if isinstance(gate, RyPlus) and abs(rows_in[gate.i] - rows_in[gate.j]) != 1:
            order.remove(gate.j)
            order.insert(order.index(gate.i) + 1, gate.j)
        rows_out = [0] * circuit.dim
        for row, d in enumerate(order):
            rows_out[d] = row
        columns.append(_Column(step, rows_in, rows_out))
    return columns


def _y(row: int) -> float:
    return MARGIN + row * ROW_HEIGHT


def render_svg(circuit: AdditiveCircuit, input: Optional[int] = None) -> str:
    """!
    @brief Draw an additive circuit as SVG.

    @param circuit The circuit to draw.
    @param input If set, style every wire segment by the amplitude it carries for this input basis state.

    @return The SVG document.
    """
    if input is not None and (input < 0 or input >= circuit.dim):
        raise ValueError('Basis index %d out of range [0, %d).' % (input, circuit.dim))

    styles = trace_styles(circuit, input) if input is not None else None
    columns = _layout(circuit)
    width = 2 * MARGIN + (len(columns) + 1) * COLUMN_WIDTH
    height = 2 * MARGIN + max(circuit.dim - 1, 0) * ROW_HEIGHT

    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill='white'))

    def _wire(dim: int, step: int, x0: float, row0: int, x1: float, row1: int):
        kwargs = {'stroke': 'black', 'stroke_width': 2}
        if styles is not None:
            style = styles[step][dim]
            kwargs = {'stroke': style.color, 'stroke_width': 2, 'stroke_opacity': style.opacity}
        d.append(draw.Line(x0, _y(row0), x1, _y(row1), class_='wire', data_dim=dim, data_step=step, **kwargs))

    for dim in range(circuit.dim):
        d.append(draw.Text(str(dim), 12, MARGIN / 2, _y(dim), text_anchor='middle', dominant_baseline='middle'))

    # Segments leading into each column, then the column itself.
    x = MARGIN
    rows = list(range(circuit.dim))
    for column, gate in zip(columns, circuit.gates):
        mid = x + COLUMN_WIDTH / 2
        for dim in range(circuit.dim):
            # Reordering happens in the first half of the column.
            _wire(dim, column.step, x, column.rows_in[dim], mid, column.rows_out[dim])

        after = column.step + 1
        rows = column.rows_out
        if isinstance(gate, RyPlus):
            for dim in range(circuit.dim):
                _wire(dim, after, mid, rows[dim], x + COLUMN_WIDTH, rows[dim])
            top = min(rows[gate.i], rows[gate.j])
            d.append(draw.Rectangle(mid - BOX_WIDTH / 2, _y(top) - ROW_HEIGHT / 4, BOX_WIDTH, ROW_HEIGHT * 1.5,
                                    fill='white', stroke='black', stroke_width=1.5, class_='ry'))
            d.append(draw.Text('%.3g' % gate.theta, 10, mid, _y(top) + ROW_HEIGHT / 2, text_anchor='middle',
                               dominant_baseline='middle'))
        elif isinstance(gate, RzPlus):
            for dim in range(circuit.dim):
                _wire(dim, after, mid, rows[dim], x + COLUMN_WIDTH, rows[dim])
            d.append(draw.Circle(mid, _y(rows[gate.k]), 12, fill='white', stroke='black', stroke_width=1.5,
                                 class_='rz'))
            d.append(draw.Text('%.3g' % gate.theta, 8, mid, _y(rows[gate.k]), text_anchor='middle',
                               dominant_baseline='middle'))
        else:
            # The amplitudes of the two dimensions trade wires.
            swapped = {gate.i: gate.j, gate.j: gate.i}
            for dim in range(circuit.dim):
                _wire(swapped.get(dim, dim), after, mid, rows[dim], x + COLUMN_WIDTH, rows[swapped.get(dim, dim)])
        x += COLUMN_WIDTH

    for dim in range(circuit.dim):
        _wire(dim, len(circuit.gates), x, rows[dim], x + COLUMN_WIDTH, rows[dim])

    _logger.trace('Rendered %d gates over %d wires.' % (len(circuit), circuit.dim))
    return d.as_svg()


def render_text(circuit: AdditiveCircuit) -> str:
    """!
    @brief Draw an additive circuit as plain text, one line per dimension and one column per gate.

    Ry⁺ cells are marked `a` on the first dimension and `b` on the second.
    """
    label_width = len('d%d' % (circuit.dim - 1)) + 1
    cells = [[('d%d' % dim).ljust(label_width)] for dim in range(circuit.dim)]
    for gate in circuit.gates:
        labels = {}
        if isinstance(gate, RyPlus):
            labels[gate.i] = '[Ry+ a %.3g]' % gate.theta
            labels[gate.j] = '[Ry+ b %.3g]' % gate.theta
        elif isinstance(gate, RzPlus):
            labels[gate.k] = '(Rz+ %.3g)' % gate.theta
        else:
            labels[gate.i] = 'x%d' % gate.j
            labels[gate.j] = 'x%d' % gate.i
        width = max(len(label) for label in labels.values())
        for dim in range(circuit.dim):
            cells[dim].append('-' + labels.get(dim, '').center(width, '-') + '-')

    return '\n'.join(''.join(row) for row in cells) + '\n'
