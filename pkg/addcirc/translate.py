"""!
@brief ⊗ → ⊕ translation.

A gate acting on target qubit `t` conditioned on a control set is block diagonal in the computational basis: it acts on
every index pair that differs only in bit `t` and has all control bits set, and as the identity elsewhere. Index pairs
are enumerated directly by bit arithmetic, so no explicit wire permutation is needed.
"""
from typing import List, Tuple

from . import trace as logging
from .bits import controlled_indices, pair_family
from .circuit import (CX, MCX, AdditiveCircuit, AdditiveGate, CPhase, MCRy,
                      MultCircuit, MultGate, Ry, RyPlus, Rz, RzPlus, X, XPlus)

_logger = logging.getLogger('addcirc.translate')


def translate_gate(gate: MultGate, n: int) -> Tuple[List[AdditiveGate], float]:
    """!
    @brief Translate one multiplicative gate into additive gates.

    @param gate The gate to translate.
    @param n The qubit count of the enclosing circuit.

    @return A tuple `(gates, phase)`, where `phase` is the global phase the additive gates omit. Only `Rz` contributes
            a phase: Rz(θ) = e^{-iθ/2} diag(1, e^{iθ}).
    """
    MultCircuit(n).check_gate(gate)

    if isinstance(gate, Ry):
        low, high = pair_family(n, (), gate.q)
        return [RyPlus(i, j, gate.theta) for i, j in zip(low.tolist(), high.tolist())], 0.0
    elif isinstance(gate, MCRy):
        low, high = pair_family(n, gate.controls, gate.target)
        return [RyPlus(i, j, gate.theta) for i, j in zip(low.tolist(), high.tolist())], 0.0
    elif isinstance(gate, Rz):
        indices = controlled_indices(n, (gate.q,))
        return [RzPlus(k, gate.theta) for k in indices.tolist()], -gate.theta / 2.0
    elif isinstance(gate, CPhase):
        indices = controlled_indices(n, gate.controls)
        return [RzPlus(k, gate.theta) for k in indices.tolist()], 0.0
    elif isinstance(gate, X):
        low, high = pair_family(n, (), gate.q)
    elif isinstance(gate, CX):
        low, high = pair_family(n, (gate.control,), gate.target)
    elif isinstance(gate, MCX):
        low, high = pair_family(n, gate.controls, gate.target)
    else:
        raise ValueError('Not a multiplicative gate: %r.' % (gate,))

    return [XPlus(i, j) for i, j in zip(low.tolist(), high.tolist())], 0.0


def translate_circuit(circuit: MultCircuit) -> AdditiveCircuit:
    """!
    @brief Translate a multiplicative circuit into an equivalent additive circuit over 2^n dimensions.

    The result is exactly equal to the input, global phase included.
    """
    gates = []
    phase = circuit.global_phase
    for gate in circuit.gates:
        translated, gate_phase = translate_gate(gate, circuit.n_qubits)
        _logger.trace('%s -> %d additive gates.' % (gate, len(translated)))
        gates.extend(translated)
        phase += gate_phase

    result = AdditiveCircuit(circuit.dim, gates, phase)
    _logger.debug('Translated %d gates on %d qubits into %d additive gates.' %
                  (len(circuit), circuit.n_qubits, len(result)))
    return result
