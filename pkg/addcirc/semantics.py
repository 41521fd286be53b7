"""!
@brief Dense unitary evaluation of additive and multiplicative circuits.

This is the verification oracle for every transformation in the package. Each gate is applied through its sparse
action (diagonal scale, two-row rotation, row swap) on the accumulated matrix, so evaluation costs O(N^2) per gate.
"""
import math
from typing import List, NamedTuple, Union

import numpy as np

from . import trace as logging
from .bits import controlled_indices, pair_family
from .circuit import (CX, MCX, AdditiveCircuit, AdditiveGate, CPhase, MCRy,
                      MultCircuit, MultGate, Ry, RyPlus, Rz, RzPlus, X, XPlus)
from .permutation import Permutation

EQUIV_TOL = 1e-10

_logger = logging.getLogger('addcirc.semantics')


class StateTrace(NamedTuple):
    """!
    @brief State snapshots before the first gate and after every gate.
    """
    snapshots: List[np.ndarray]

    @property
    def final(self) -> np.ndarray:
        return self.snapshots[-1]


def _rotate_rows(U: np.ndarray, low, high, theta: float):
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    a = U[low].copy()
    b = U[high].copy()
    U[low] = c * a - s * b
    U[high] = s * a + c * b


def _swap_rows(U: np.ndarray, low, high):
    a = U[low].copy()
    U[low] = U[high]
    U[high] = a


def apply_additive_gate(gate: AdditiveGate, U: np.ndarray):
    """!
    @brief Left-multiply `U` (a matrix or a state vector) in place by the matrix of `gate`.
    """
    if isinstance(gate, RzPlus):
        U[gate.k] *= np.exp(1j * gate.theta)
    elif isinstance(gate, RyPlus):
        _rotate_rows(U, [gate.i], [gate.j], gate.theta)
    elif isinstance(gate, XPlus):
        _swap_rows(U, [gate.i], [gate.j])
    else:
        raise ValueError('Not an additive gate: %r.' % (gate,))


def apply_mult_gate(gate: MultGate, U: np.ndarray, n: int):
    """!
    @brief Left-multiply `U` in place by the 2^n x 2^n matrix of `gate`.
    """
    if isinstance(gate, Ry):
        _rotate_rows(U, *pair_family(n, (), gate.q), gate.theta)
    elif isinstance(gate, MCRy):
        _rotate_rows(U, *pair_family(n, gate.controls, gate.target), gate.theta)
    elif isinstance(gate, Rz):
        low, high = pair_family(n, (), gate.q)
        U[low] *= np.exp(-0.5j * gate.theta)
        U[high] *= np.exp(0.5j * gate.theta)
    elif isinstance(gate, CPhase):
        U[controlled_indices(n, gate.controls)] *= np.exp(1j * gate.theta)
    elif isinstance(gate, X):
        _swap_rows(U, *pair_family(n, (), gate.q))
    elif isinstance(gate, CX):
        _swap_rows(U, *pair_family(n, (gate.control,), gate.target))
    elif isinstance(gate, MCX):
        _swap_rows(U, *pair_family(n, gate.controls, gate.target))
    else:
        raise ValueError('Not a multiplicative gate: %r.' % (gate,))


def gate_matrix_additive(gate: AdditiveGate, dim: int) -> np.ndarray:
    AdditiveCircuit(dim).check_gate(gate)
    U = np.eye(dim, dtype=complex)
    apply_additive_gate(gate, U)
    return U


def gate_matrix_mult(gate: MultGate, n: int) -> np.ndarray:
    MultCircuit(n).check_gate(gate)
    U = np.eye(1 << n, dtype=complex)
    apply_mult_gate(gate, U, n)
    return U


def eval_additive(circuit: AdditiveCircuit) -> np.ndarray:
    U = np.eye(circuit.dim, dtype=complex)
    for gate in circuit.gates:
        apply_additive_gate(gate, U)
    if circuit.global_phase != 0.0:
        U *= np.exp(1j * circuit.global_phase)
    return U


def eval_mult(circuit: MultCircuit) -> np.ndarray:
    U = np.eye(circuit.dim, dtype=complex)
    for gate in circuit.gates:
        apply_mult_gate(gate, U, circuit.n_qubits)
    if circuit.global_phase != 0.0:
        U *= np.exp(1j * circuit.global_phase)
    return U


def permutation_matrix(perm: Permutation) -> np.ndarray:
    M = np.zeros((perm.dim, perm.dim), dtype=complex)
    M[list(perm.image), list(range(perm.dim))] = 1.0
    return M


def fidelity(U: np.ndarray, V: np.ndarray) -> float:
    """!
    @brief Hilbert-Schmidt fidelity |tr(U^† V)| / N, insensitive to global phase.
    """
    if U.shape != V.shape or U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValueError('Matrix dimension mismatch: %s vs %s.' % (U.shape, V.shape))
    return float(abs(np.trace(U.conj().T @ V)) / U.shape[0])


def equiv_up_to_phase(U: np.ndarray, V: np.ndarray, tol: float = EQUIV_TOL) -> bool:
    return fidelity(U, V) >= 1.0 - tol


def is_unitary(U: np.ndarray, tol: float = EQUIV_TOL) -> bool:
    return bool(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))) < tol)


def _initial_state(dim: int, input: Union[int, np.ndarray]) -> np.ndarray:
    if isinstance(input, (int, np.integer)):
        if input < 0 or input >= dim:
            raise ValueError('Basis index %d out of range [0, %d).' % (input, dim))
        state = np.zeros(dim, dtype=complex)
        state[input] = 1.0
        return state

    state = np.array(input, dtype=complex)
    if state.shape != (dim,):
        raise ValueError('State dimension %s does not match circuit dimension %d.' % (state.shape, dim))
    return state


def trace_state(circuit: AdditiveCircuit, input: Union[int, np.ndarray]) -> StateTrace:
    """!
    @brief Evolve a basis state or state vector through `circuit`, recording a snapshot around every gate.

    The final snapshot of a basis input `b` is column `b` of `eval_additive(circuit)`, which is how the matrix is read
    off an additive circuit one input wire at a time.
    """
    state = _initial_state(circuit.dim, input)
    phase = np.exp(1j * circuit.global_phase)
    snapshots = [state * phase]
    for gate in circuit.gates:
        apply_additive_gate(gate, state)
        snapshots.append(state * phase)
    _logger.trace('Traced %d snapshots over dimension %d.' % (len(snapshots), circuit.dim))
    return StateTrace(snapshots)


def apply_additive(circuit: AdditiveCircuit, input: Union[int, np.ndarray]) -> np.ndarray:
    return trace_state(circuit, input).final
