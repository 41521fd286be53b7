"""!
@brief Additive (⊕) and multiplicative (⊗) circuit representations.

Gate lists are applied left to right: gate 0 acts first. All types are immutable values.
"""
from collections import Counter
from dataclasses import dataclass, replace
from numbers import Integral
from typing import Dict, Iterable, Iterator, Tuple, Union

from .angles import check_finite


def _check_index(value: int, size: int, what: str):
    if not isinstance(value, Integral) or isinstance(value, bool):
        raise ValueError('%s index must be an integer, got %r.' % (what, value))
    if value < 0 or value >= size:
        raise ValueError('%s index %d out of range [0, %d).' % (what, value, size))


def _normalize_controls(controls: Iterable[int]) -> Tuple[int, ...]:
    result = tuple(sorted(int(c) for c in controls))
    if len(set(result)) != len(result):
        raise ValueError('Duplicate control qubit in %s.' % (result,))
    return result


################################################################################
# Additive gates
################################################################################

@dataclass(frozen=True)
class RyPlus:
    """!
    @brief Additive Y-rotation: rotates the two-dimensional subspace spanned by dimensions `i` and `j`.

    The block on rows/columns (i, j), with row `i` first, is [[cos(θ/2), -sin(θ/2)], [sin(θ/2), cos(θ/2)]].
    """
    i: int
    j: int
    theta: float

    def __post_init__(self):
        object.__setattr__(self, 'theta', check_finite(self.theta))
        if self.i == self.j:
            raise ValueError('RyPlus requires two distinct dimensions, got i = j = %d.' % self.i)

    def dims(self) -> Tuple[int, ...]:
        return (self.i, self.j)

    def inverse(self) -> 'RyPlus':
        return RyPlus(self.i, self.j, -self.theta)

    def __str__(self):
        return 'RyPlus(%d, %d, %.6g)' % (self.i, self.j, self.theta)


@dataclass(frozen=True)
class RzPlus:
    """!
    @brief Additive Z-rotation: multiplies dimension `k` by e^{iθ}.
    """
    k: int
    theta: float

    def __post_init__(self):
        object.__setattr__(self, 'theta', check_finite(self.theta))

    def dims(self) -> Tuple[int, ...]:
        return (self.k,)

    def inverse(self) -> 'RzPlus':
        return RzPlus(self.k, -self.theta)

    def __str__(self):
        return 'RzPlus(%d, %.6g)' % (self.k, self.theta)


@dataclass(frozen=True)
class XPlus:
    """!
    @brief Transposition of dimensions `i` and `j`.
    """
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError('XPlus requires two distinct dimensions, got i = j = %d.' % self.i)

    def dims(self) -> Tuple[int, ...]:
        return (self.i, self.j)

    def inverse(self) -> 'XPlus':
        return self

    def __str__(self):
        return 'XPlus(%d, %d)' % (self.i, self.j)


AdditiveGate = Union[RyPlus, RzPlus, XPlus]


@dataclass(frozen=True)
class AdditiveCircuit:
    """!
    @brief An additive circuit over an N-dimensional state space.

    `dim` need not be a power of two. `global_phase` is the accumulated scalar e^{iφ} applied on top of the gates.
    """
    dim: int
    gates: Tuple[AdditiveGate, ...] = ()
    global_phase: float = 0.0

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError('Circuit dimension must be a positive integer, got %r.' % (self.dim,))
        object.__setattr__(self, 'gates', tuple(self.gates))
        object.__setattr__(self, 'global_phase', check_finite(self.global_phase))
        for gate in self.gates:
            self.check_gate(gate)

    def check_gate(self, gate: AdditiveGate):
        if not isinstance(gate, (RyPlus, RzPlus, XPlus)):
            raise ValueError('Not an additive gate: %r.' % (gate,))
        for d in gate.dims():
            _check_index(d, self.dim, 'Dimension')

    def append(self, gate: AdditiveGate) -> 'AdditiveCircuit':
        """!
        @brief Return a new circuit with `gate` applied after all existing gates.
        """
        return self.extend((gate,))

    def extend(self, gates: Iterable[AdditiveGate]) -> 'AdditiveCircuit':
        return replace(self, gates=self.gates + tuple(gates))

    def with_gates(self, gates: Iterable[AdditiveGate]) -> 'AdditiveCircuit':
        return replace(self, gates=tuple(gates))

    def inverse(self) -> 'AdditiveCircuit':
        return AdditiveCircuit(self.dim, [g.inverse() for g in reversed(self.gates)], -self.global_phase)

    def gate_counts(self) -> Dict[str, int]:
        return dict(Counter(type(g).__name__ for g in self.gates))

    def __len__(self):
        return len(self.gates)

    def __iter__(self) -> Iterator[AdditiveGate]:
        return iter(self.gates)


def new_additive_circuit(dim: int) -> AdditiveCircuit:
    return AdditiveCircuit(dim)


################################################################################
# Multiplicative gates
################################################################################

@dataclass(frozen=True)
class Ry:
    q: int
    theta: float

    def __post_init__(self):
        object.__setattr__(self, 'theta', check_finite(self.theta))

    def qubits(self) -> Tuple[int, ...]:
        return (self.q,)

    def inverse(self) -> 'Ry':
        return Ry(self.q, -self.theta)


@dataclass(frozen=True)
class Rz:
    q: int
    theta: float

    def __post_init__(self):
        object.__setattr__(self, 'theta', check_finite(self.theta))

    def qubits(self) -> Tuple[int, ...]:
        return (self.q,)

    def inverse(self) -> 'Rz':
        return Rz(self.q, -self.theta)


@dataclass(frozen=True)
class X:
    q: int

    def qubits(self) -> Tuple[int, ...]:
        return (self.q,)

    def inverse(self) -> 'X':
        return self


@dataclass(frozen=True)
class CX:
    control: int
    target: int

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError('control equals target (%d).' % self.target)

    def qubits(self) -> Tuple[int, ...]:
        return (self.control, self.target)

    def inverse(self) -> 'CX':
        return self


@dataclass(frozen=True)
class MCX:
    controls: Tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, 'controls', _normalize_controls(self.controls))
        if self.target in self.controls:
            raise ValueError('control equals target (%d).' % self.target)

    def qubits(self) -> Tuple[int, ...]:
        return self.controls + (self.target,)

    def inverse(self) -> 'MCX':
        return self


@dataclass(frozen=True)
class MCRy:
    controls: Tuple[int, ...]
    target: int
    theta: float

    def __post_init__(self):
        object.__setattr__(self, 'controls', _normalize_controls(self.controls))
        object.__setattr__(self, 'theta', check_finite(self.theta))
        if self.target in self.controls:
            raise ValueError('control equals target (%d).' % self.target)

    def qubits(self) -> Tuple[int, ...]:
        return self.controls + (self.target,)

    def inverse(self) -> 'MCRy':
        return MCRy(self.controls, self.target, -self.theta)


@dataclass(frozen=True)
class CPhase:
    """!
    @brief Multiplies every basis state whose control bits are all set by e^{iθ}.

    With a single control this is the single-qubit phase gate diag(1, e^{iθ}).
    """
    controls: Tuple[int, ...]
    theta: float

    def __post_init__(self):
        object.__setattr__(self, 'controls', _normalize_controls(self.controls))
        object.__setattr__(self, 'theta', check_finite(self.theta))
        if len(self.controls) == 0:
            raise ValueError('CPhase requires at least one qubit.')

    def qubits(self) -> Tuple[int, ...]:
        return self.controls

    def inverse(self) -> 'CPhase':
        return CPhase(self.controls, -self.theta)


MultGate = Union[Ry, Rz, X, CX, MCX, MCRy, CPhase]

_MULT_GATE_TYPES = (Ry, Rz, X, CX, MCX, MCRy, CPhase)


def controlled_x(controls: Iterable[int], target: int) -> MultGate:
    """!
    @brief Return the simplest named form of a multi-controlled X: X, CX or MCX.
    """
    controls = _normalize_controls(controls)
    if len(controls) == 0:
        return X(target)
    elif len(controls) == 1:
        return CX(controls[0], target)
    else:
        return MCX(controls, target)


@dataclass(frozen=True)
class MultCircuit:
    n_qubits: int
    gates: Tuple[MultGate, ...] = ()
    global_phase: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n_qubits, int) or self.n_qubits < 1:
            raise ValueError('Qubit count must be a positive integer, got %r.' % (self.n_qubits,))
        object.__setattr__(self, 'gates', tuple(self.gates))
        object.__setattr__(self, 'global_phase', check_finite(self.global_phase))
        for gate in self.gates:
            self.check_gate(gate)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def check_gate(self, gate: MultGate):
        if not isinstance(gate, _MULT_GATE_TYPES):
            raise ValueError('Not a multiplicative gate: %r.' % (gate,))
        for q in gate.qubits():
            _check_index(q, self.n_qubits, 'Qubit')

    def append(self, gate: MultGate) -> 'MultCircuit':
        return self.extend((gate,))

    def extend(self, gates: Iterable[MultGate]) -> 'MultCircuit':
        return replace(self, gates=self.gates + tuple(gates))

    def inverse(self) -> 'MultCircuit':
        return MultCircuit(self.n_qubits, [g.inverse() for g in reversed(self.gates)], -self.global_phase)

    def gate_counts(self) -> Dict[str, int]:
        return dict(Counter(type(g).__name__ for g in self.gates))

    def __len__(self):
        return len(self.gates)

    def __iter__(self) -> Iterator[MultGate]:
        return iter(self.gates)
