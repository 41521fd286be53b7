"""!
@brief ⊕ → ⊗ synthesis.

The pipeline:
1. Fuse the DAG's vertices into stacked vertices and split them into power-of-two stacks.
2. Route: walk the stacks, inserting bitstring permutations wherever a stack violates the connectivity constraints.
3. For every routed stack emit the routing permutation (a reversible circuit), the phases on the stack's incoming
   edges (a phase polynomial) and the stack itself (one controlled Ry).
4. Finish with the output edge phases and a permutation from the final placement onto the trailing wire permutation.
"""
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from . import trace as logging
from .bits import bit, hamming, num_qubits_for_dim
from .circuit import (AdditiveCircuit, CPhase, MCRy, MultCircuit, MultGate, Ry,
                      RyPlus, RzPlus, X, XPlus)
from .dag import AdditiveDag
from .permutation import Permutation
from .phase_poly import synth_phases
from .placement import PlacementMap, check_constraints, choose_routing, route
from .reversible import synth_permutation
from .stacking import StackedVertex, split_power_of_two, stack_vertices

_logger = logging.getLogger('addcirc.synth')


@dataclass(frozen=True)
class SynthesisReport:
    output: MultCircuit
    num_routing_permutations: int = 0
    num_stacks: int = 0

    @property
    def counts(self) -> Dict[str, int]:
        return self.output.gate_counts()

    def summary(self) -> str:
        lines = ['Qubits: %d' % self.output.n_qubits,
                 'Gates: %d' % len(self.output),
                 'Stacks: %d' % self.num_stacks,
                 'Routing permutations: %d' % self.num_routing_permutations]
        for name, count in sorted(self.counts.items()):
            lines.append('  %s: %d' % (name, count))
        return '\n'.join(lines)


def _qubit_count(dim: int) -> int:
    n = num_qubits_for_dim(dim)
    if n == 0:
        raise ValueError('Synthesis requires at least 2 dimensions.')
    return n


def synth_stacked_vertex(stack: StackedVertex, placement: PlacementMap, n: int) -> List[MultGate]:
    """!
    @brief Synthesize a placed stack as one multi-controlled Ry.

    The controls are the bits shared by every placed bitstring; those that are 0 are conjugated with X. A stack
    spanning the whole hypercube has no controls and becomes a bare Ry.

    Example:
    ```py
    stack = StackedVertex(theta, [(0, 1)])
    synth_stacked_vertex(stack, PlacementMap.identity(2), 2)  # [X(1), MCRy((1,), 0, theta), X(1)]
    ```
    """
    report = check_constraints(stack, placement)
    if not report.ok:
        raise ValueError('Stack %s violates the connectivity constraints under the current placement. [%s]' %
                         (stack, report))

    a, b = stack.members[0]
    target = (placement[a] ^ placement[b]).bit_length() - 1
    theta = -stack.theta if bit(placement[a], target) else stack.theta

    placed = [placement[d] for d in stack.dims()]
    varying = 0
    for x in placed:
        varying |= x ^ placed[0]
    controls = [q for q in range(n) if not (varying >> q) & 1]

    if len(controls) == 0:
        return [Ry(target, theta)]

    flips = [X(q) for q in controls if not bit(placed[0], q)]
    return flips + [MCRy(controls, target, theta)] + flips


def _phase_vector(phases_by_dim: Dict[int, float], placement: PlacementMap) -> np.ndarray:
    result = np.zeros(1 << placement.n)
    for d, phase in phases_by_dim.items():
        result[placement[d]] += phase
    return result


def synthesize(dag: AdditiveDag) -> SynthesisReport:
    """!
    @brief Synthesize a multiplicative circuit from an additive DAG.

    @param dag The DAG to synthesize. Its dimension must be a power of two.

    @return A @ref SynthesisReport whose output is equal to the DAG's circuit up to global phase. The global phase
            shed by the phase polynomials is tracked in the output, so in practice the two are exactly equal.
    """
    n = _qubit_count(dag.dim)

    stacks = []
    for stack in stack_vertices(dag):
        stacks.extend(split_power_of_two(stack))
    schedule, permutations = route(stacks, PlacementMap.identity(n))

    gates = []
    global_phase = dag.global_phase
    for segment in schedule:
        if segment.permutation is not None:
            gates.extend(synth_permutation(segment.permutation, n))

        incoming = {}
        for vertex_id in segment.stack.vertex_ids:
            for edge in dag.in_edges(vertex_id):
                incoming[edge.dim] = incoming.get(edge.dim, 0.0) + edge.phase
        phase_gates, offset = synth_phases(_phase_vector(incoming, segment.placement), n, return_global_phase=True)
        gates.extend(phase_gates)
        global_phase += offset

        gates.extend(synth_stacked_vertex(segment.stack, segment.placement, n))

    placement = schedule[-1].placement if schedule else PlacementMap.identity(n)
    phase_gates, offset = synth_phases(_phase_vector(dag.output_phases(), placement), n, return_global_phase=True)
    gates.extend(phase_gates)
    global_phase += offset

    # Move every dimension d from its final bitstring to trailing(d).
    final = placement.as_permutation().inverse().then(dag.trailing_perm)
    gates.extend(synth_permutation(final, n))

    report = SynthesisReport(MultCircuit(n, gates, global_phase), len(permutations), len(schedule))
    _logger.debug('Synthesized %d vertices into %d gates. [stacks=%d, routing permutations=%d]' %
                  (dag.num_vertices, len(report.output), report.num_stacks, report.num_routing_permutations))
    return report


def synthesize_naive(circuit: AdditiveCircuit) -> SynthesisReport:
    """!
    @brief Synthesize an additive circuit gate by gate, without canonicalization or stacking.

    Every Ry⁺ becomes a fully controlled Ry (routed onto a hypercube edge and back when needed), every Rz⁺ a fully
    controlled phase and every X⁺ a reversible circuit for its transposition. This is the baseline the DAG pipeline is
    compared against.
    """
    n = _qubit_count(circuit.dim)
    identity = PlacementMap.identity(n)

    gates = []
    num_routed = 0
    for gate in circuit.gates:
        if isinstance(gate, RyPlus):
            stack = StackedVertex(gate.theta, [(gate.i, gate.j)])
            if hamming(gate.i, gate.j) == 1:
                gates.extend(synth_stacked_vertex(stack, identity, n))
            else:
                perm = choose_routing(stack, identity)
                gates.extend(synth_permutation(perm, n))
                gates.extend(synth_stacked_vertex(stack, identity.permuted(perm), n))
                gates.extend(synth_permutation(perm.inverse(), n))
                num_routed += 1
        elif isinstance(gate, RzPlus):
            flips = [X(q) for q in range(n) if not bit(gate.k, q)]
            gates.extend(flips + [CPhase(range(n), gate.theta)] + flips)
        elif isinstance(gate, XPlus):
            gates.extend(synth_permutation(Permutation.transposition(circuit.dim, gate.i, gate.j), n))

    report = SynthesisReport(MultCircuit(n, gates, circuit.global_phase), num_routed, len(circuit))
    _logger.debug('Naively synthesized %d gates into %d gates.' % (len(circuit), len(report.output)))
    return report
