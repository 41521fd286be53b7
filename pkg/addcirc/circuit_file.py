"""!
@brief Plain-text circuit file formats.

Additive files:
```
dims 4
phase 0.25          # optional, global phase
ry 2 3 pi/2         # RyPlus(i, j, θ)
rz 1 0.5            # RzPlus(k, θ)
swap 0 1            # XPlus(i, j)
```

Multiplicative files:
```
qubits 2
ry 0 0.5
rz 1 0.5
x 0
cx 1 0              # control, target
mcx 0,1 2           # controls, target
mcry 1 0 0.7        # controls, target, θ
cphase 0,1 pi/4     # controls, θ
```

`#` starts a comment; blank lines are ignored. Angles accept decimal or `pi`-fraction literals and are written with 17
significant digits.
"""
from typing import Callable, List, Tuple, Union

from . import trace as logging
from .angles import format_angle, parse_angle
from .circuit import (CX, MCX, AdditiveCircuit, CPhase, MCRy, MultCircuit,
                      Ry, RyPlus, Rz, RzPlus, X, XPlus)

_logger = logging.getLogger('addcirc.circuit_file')

ADDITIVE = 'additive'
MULTIPLICATIVE = 'multiplicative'


class CircuitFileError(ValueError):
    def __init__(self, line_number: int, reason: str):
        super().__init__('line %d: %s' % (line_number, reason))
        self.line_number = line_number
        self.reason = reason


def _tokenize(text: str) -> List[Tuple[int, List[str]]]:
    result = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            result.append((line_number, line.split()))
    return result


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError("Malformed integer '%s'." % token)


def _parse_controls(token: str) -> List[int]:
    return [_parse_int(t) for t in token.split(',')]


def _expect_args(keyword: str, args: List[str], count: int):
    if len(args) != count:
        raise ValueError("'%s' expects %d argument(s), got %d." % (keyword, count, len(args)))


def _parse_header(lines: List[Tuple[int, List[str]]], keyword: str) -> int:
    if len(lines) == 0:
        raise CircuitFileError(1, "Expected a '%s N' header." % keyword)
    line_number, tokens = lines[0]
    if tokens[0] != keyword or len(tokens) != 2:
        raise CircuitFileError(line_number, "Expected a '%s N' header, got '%s'." % (keyword, ' '.join(tokens)))
    try:
        size = _parse_int(tokens[1])
    except ValueError as e:
        raise CircuitFileError(line_number, str(e))
    if size < 1:
        raise CircuitFileError(line_number, "'%s' must be positive, got %d." % (keyword, size))
    return size


def _parse_body(lines, check_gate: Callable, parse_gate: Callable) -> Tuple[list, float]:
    gates = []
    phase = 0.0
    for line_number, tokens in lines[1:]:
        keyword, args = tokens[0].lower(), tokens[1:]
        try:
            if keyword == 'phase':
                _expect_args(keyword, args, 1)
                phase += parse_angle(args[0])
                continue
            gate = parse_gate(keyword, args)
            check_gate(gate)
        except CircuitFileError:
            raise
        except ValueError as e:
            raise CircuitFileError(line_number, str(e))
        gates.append(gate)
    return gates, phase


def _parse_additive_gate(keyword: str, args: List[str]):
    if keyword == 'ry':
        _expect_args(keyword, args, 3)
        return RyPlus(_parse_int(args[0]), _parse_int(args[1]), parse_angle(args[2]))
    elif keyword == 'rz':
        _expect_args(keyword, args, 2)
        return RzPlus(_parse_int(args[0]), parse_angle(args[1]))
    elif keyword == 'swap':
        _expect_args(keyword, args, 2)
        return XPlus(_parse_int(args[0]), _parse_int(args[1]))
    else:
        raise ValueError("Unknown keyword '%s'." % keyword)


def _parse_mult_gate(keyword: str, args: List[str]):
    if keyword == 'ry':
        _expect_args(keyword, args, 2)
        return Ry(_parse_int(args[0]), parse_angle(args[1]))
    elif keyword == 'rz':
        _expect_args(keyword, args, 2)
        return Rz(_parse_int(args[0]), parse_angle(args[1]))
    elif keyword == 'x':
        _expect_args(keyword, args, 1)
        return X(_parse_int(args[0]))
    elif keyword == 'cx':
        _expect_args(keyword, args, 2)
        return CX(_parse_int(args[0]), _parse_int(args[1]))
    elif keyword == 'mcx':
        _expect_args(keyword, args, 2)
        return MCX(_parse_controls(args[0]), _parse_int(args[1]))
    elif keyword == 'mcry':
        _expect_args(keyword, args, 3)
        return MCRy(_parse_controls(args[0]), _parse_int(args[1]), parse_angle(args[2]))
    elif keyword == 'cphase':
        _expect_args(keyword, args, 2)
        return CPhase(_parse_controls(args[0]), parse_angle(args[1]))
    else:
        raise ValueError("Unknown keyword '%s'." % keyword)


def parse_additive(text: str) -> AdditiveCircuit:
    """!
    @brief Parse an additive circuit file.

    @throws CircuitFileError on the first malformed line.
    """
    lines = _tokenize(text)
    dim = _parse_header(lines, 'dims')
    circuit = AdditiveCircuit(dim)
    gates, phase = _parse_body(lines, circuit.check_gate, _parse_additive_gate)
    _logger.trace('Parsed %d additive gates over %d dimensions.' % (len(gates), dim))
    return AdditiveCircuit(dim, gates, phase)


def parse_mult(text: str) -> MultCircuit:
    """!
    @brief Parse a multiplicative circuit file.

    @throws CircuitFileError on the first malformed line.
    """
    lines = _tokenize(text)
    n = _parse_header(lines, 'qubits')
    circuit = MultCircuit(n)
    gates, phase = _parse_body(lines, circuit.check_gate, _parse_mult_gate)
    _logger.trace('Parsed %d gates over %d qubits.' % (len(gates), n))
    return MultCircuit(n, gates, phase)


def detect_kind(text: str) -> str:
    """!
    @brief Identify a circuit file by its header: @ref ADDITIVE for `dims`, @ref MULTIPLICATIVE for `qubits`.
    """
    lines = _tokenize(text)
    if len(lines) > 0:
        line_number, tokens = lines[0]
        if tokens[0] == 'dims':
            return ADDITIVE
        elif tokens[0] == 'qubits':
            return MULTIPLICATIVE
        else:
            raise CircuitFileError(line_number, "Expected a 'dims N' or 'qubits N' header, got '%s'." % tokens[0])
    raise CircuitFileError(1, "Expected a 'dims N' or 'qubits N' header.")


def parse_circuit(text: str) -> Union[AdditiveCircuit, MultCircuit]:
    if detect_kind(text) == ADDITIVE:
        return parse_additive(text)
    else:
        return parse_mult(text)


def _join(values) -> str:
    return ','.join('%d' % v for v in values)


def emit_additive(circuit: AdditiveCircuit) -> str:
    lines = ['dims %d' % circuit.dim]
    if circuit.global_phase != 0.0:
        lines.append('phase %s' % format_angle(circuit.global_phase))
    for gate in circuit.gates:
        if isinstance(gate, RyPlus):
            lines.append('ry %d %d %s' % (gate.i, gate.j, format_angle(gate.theta)))
        elif isinstance(gate, RzPlus):
            lines.append('rz %d %s' % (gate.k, format_angle(gate.theta)))
        else:
            lines.append('swap %d %d' % (gate.i, gate.j))
    return '\n'.join(lines) + '\n'


def emit_mult(circuit: MultCircuit) -> str:
    lines = ['qubits %d' % circuit.n_qubits]
    if circuit.global_phase != 0.0:
        lines.append('phase %s' % format_angle(circuit.global_phase))
    for gate in circuit.gates:
        if isinstance(gate, Ry):
            lines.append('ry %d %s' % (gate.q, format_angle(gate.theta)))
        elif isinstance(gate, Rz):
            lines.append('rz %d %s' % (gate.q, format_angle(gate.theta)))
        elif isinstance(gate, X):
            lines.append('x %d' % gate.q)
        elif isinstance(gate, CX):
            lines.append('cx %d %d' % (gate.control, gate.target))
        elif isinstance(gate, MCX):
            lines.append('mcx %s %d' % (_join(gate.controls), gate.target))
        elif isinstance(gate, MCRy):
            lines.append('mcry %s %d %s' % (_join(gate.controls), gate.target, format_angle(gate.theta)))
        else:
            lines.append('cphase %s %s' % (_join(gate.controls), format_angle(gate.theta)))
    return '\n'.join(lines) + '\n'
