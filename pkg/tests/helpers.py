"""!
@brief Random circuit generators shared by the tests.
"""
import numpy as np

from addcirc.circuit import (CX, MCX, AdditiveCircuit, CPhase, MCRy,
                             MultCircuit, Ry, RyPlus, Rz, RzPlus, X, XPlus)

MULT_KINDS = ('ry', 'rz', 'x', 'cx', 'mcx', 'mcry', 'cphase')
# The gate set of the end-to-end round-trip checks.
ROUND_TRIP_KINDS = ('ry', 'rz', 'x', 'cx', 'mcx', 'mcry')
ADDITIVE_KINDS = ('ry', 'rz', 'swap')


def _angle(rng: np.random.Generator) -> float:
    return float(rng.uniform(-np.pi, np.pi))


def random_mult_circuit(rng: np.random.Generator, n: int, num_gates: int, kinds=MULT_KINDS) -> MultCircuit:
    gates = []
    for _ in range(num_gates):
        kind = kinds[int(rng.integers(len(kinds)))]
        qubits = [int(q) for q in rng.permutation(n)]
        if n < 2 and kind in ('cx', 'mcx', 'mcry'):
            kind = 'ry'

        if kind == 'ry':
            gates.append(Ry(qubits[0], _angle(rng)))
        elif kind == 'rz':
            gates.append(Rz(qubits[0], _angle(rng)))
        elif kind == 'x':
            gates.append(X(qubits[0]))
        elif kind == 'cx':
            gates.append(CX(qubits[0], qubits[1]))
        elif kind == 'mcx':
            num_controls = int(rng.integers(1, n))
            gates.append(MCX(qubits[1:1 + num_controls], qubits[0]))
        elif kind == 'mcry':
            num_controls = int(rng.integers(1, n))
            gates.append(MCRy(qubits[1:1 + num_controls], qubits[0], _angle(rng)))
        else:
            num_controls = int(rng.integers(1, n + 1))
            gates.append(CPhase(qubits[:num_controls], _angle(rng)))
    return MultCircuit(n, gates)


def random_additive_circuit(rng: np.random.Generator, dim: int, num_gates: int,
                            kinds=ADDITIVE_KINDS) -> AdditiveCircuit:
    gates = []
    for _ in range(num_gates):
        kind = kinds[int(rng.integers(len(kinds)))]
        i, j = [int(d) for d in rng.choice(dim, size=2, replace=False)]
        if kind == 'ry':
            gates.append(RyPlus(i, j, _angle(rng)))
        elif kind == 'rz':
            gates.append(RzPlus(i, _angle(rng)))
        else:
            gates.append(XPlus(i, j))
    return AdditiveCircuit(dim, gates)
