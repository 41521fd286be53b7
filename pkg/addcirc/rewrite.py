"""!
@brief Additive circuit identities and canonicalization.

The rewrite rules used here:
1. Gates can be pushed through wire swaps X⁺, relabeling their dimensions.
2. Swapping the two dimensions of a Ry⁺ flips the sign of its angle.
3. Ry⁺ (Rz⁺) gates on the same wires merge by adding angles.
4. Gates on disjoint wires commute.
"""
from typing import List, Sequence, Tuple

import networkx as nx

from . import trace as logging
from .angles import canonical_phase, canonical_ry, is_zero_phase, is_zero_ry
from .circuit import AdditiveCircuit, AdditiveGate, RyPlus, RzPlus, XPlus
from .permutation import Permutation

_logger = logging.getLogger('addcirc.rewrite')

_KIND_RANK = {RzPlus: 0, RyPlus: 1, XPlus: 2}


def push_swaps_right(circuit: AdditiveCircuit) -> Tuple[AdditiveCircuit, Permutation]:
    """!
    @brief Commute every X⁺ to the end of the circuit.

    A running permutation σ is maintained so that the gates seen so far equal S_σ · (swap-free gates so far). A gate
    arriving after S_σ is relabeled through σ⁻¹ and emitted before it.

    @return A tuple `(swapfree, trailing)` with eval(circuit) = matrix(trailing) · eval(swapfree).
    """
    sigma = list(range(circuit.dim))
    sigma_inv = list(range(circuit.dim))
    gates = []
    for gate in circuit.gates:
        if isinstance(gate, XPlus):
            # σ' = τ_ij ∘ σ
            a, b = gate.i, gate.j
            pa, pb = sigma_inv[a], sigma_inv[b]
            sigma[pa], sigma[pb] = b, a
            sigma_inv[a], sigma_inv[b] = pb, pa
        elif isinstance(gate, RzPlus):
            gates.append(RzPlus(sigma_inv[gate.k], gate.theta))
        else:
            gates.append(RyPlus(sigma_inv[gate.i], sigma_inv[gate.j], gate.theta))

    trailing = Permutation(tuple(sigma))
    _logger.trace('Pushed %d swaps to the end. [trailing=%s]' % (len(circuit) - len(gates), trailing))
    return circuit.with_gates(gates), trailing


def normalize_ry_orientation(gate: RyPlus) -> RyPlus:
    """!
    @brief Order the dimensions of a Ry⁺ ascending, flipping the angle sign if they were swapped.
    """
    if gate.i < gate.j:
        return gate
    return RyPlus(gate.j, gate.i, -gate.theta)


def commutes(a: AdditiveGate, b: AdditiveGate) -> bool:
    if set(a.dims()).isdisjoint(b.dims()):
        return True
    if isinstance(a, RzPlus) and isinstance(b, RzPlus):
        return True
    if isinstance(a, RyPlus) and isinstance(b, RyPlus):
        return set(a.dims()) == set(b.dims())
    return False


def _is_identity_gate(gate: AdditiveGate) -> bool:
    if isinstance(gate, RyPlus):
        return is_zero_ry(gate.theta)
    elif isinstance(gate, RzPlus):
        return is_zero_phase(gate.theta)
    return False


def _try_merge(earlier: AdditiveGate, later: AdditiveGate):
    if isinstance(earlier, RzPlus) and isinstance(later, RzPlus) and earlier.k == later.k:
        return RzPlus(earlier.k, earlier.theta + later.theta)
    if isinstance(earlier, RyPlus) and isinstance(later, RyPlus) and earlier.dims() == later.dims():
        return RyPlus(earlier.i, earlier.j, earlier.theta + later.theta)
    return None


def _merge_pass(gates: Sequence[AdditiveGate]) -> Tuple[List[AdditiveGate], bool]:
    out = []
    changed = False
    for gate in gates:
        if _is_identity_gate(gate):
            changed = True
            continue

        # Walk back through gates that commute with this one, looking for a merge partner. The partner commutes with
        # everything after it, so the merged gate takes the later gate's position.
        merged = False
        k = len(out) - 1
        while k >= 0:
            merged_gate = _try_merge(out[k], gate)
            if merged_gate is not None:
                del out[k]
                if not _is_identity_gate(merged_gate):
                    out.append(merged_gate)
                merged = True
                break
            if not commutes(out[k], gate):
                break
            k -= 1

        if merged:
            changed = True
        else:
            out.append(gate)
    return out, changed


def merge_adjacent(circuit: AdditiveCircuit) -> AdditiveCircuit:
    """!
    @brief Merge same-wire rotations to a fixpoint, commuting gates on disjoint wires to bring them together, and
           drop zero-angle gates.

    @param circuit A swap-free circuit.
    """
    if any(isinstance(g, XPlus) for g in circuit.gates):
        raise ValueError('merge_adjacent() requires a swap-free circuit. Run push_swaps_right() first.')

    gates = [normalize_ry_orientation(g) if isinstance(g, RyPlus) else g for g in circuit.gates]
    # No rule increases the gate count, so running into the cap means a rule is cycling.
    max_passes = 10 * max(1, len(gates))
    for num_passes in range(1, max_passes + 1):
        gates, changed = _merge_pass(gates)
        if not changed:
            _logger.trace('Merge fixpoint reached after %d passes.' % num_passes)
            return circuit.with_gates(gates)

    raise RuntimeError('Rotation merging did not reach a fixpoint after %d passes.' % max_passes)


def _order_key(gate: AdditiveGate) -> tuple:
    dims = gate.dims()
    angle = canonical_phase(gate.theta) if isinstance(gate, RzPlus) else \
        canonical_ry(getattr(gate, 'theta', 0.0))
    return (min(dims), _KIND_RANK[type(gate)], max(dims), angle)


def canonical_order(gates: Sequence[AdditiveGate]) -> List[AdditiveGate]:
    """!
    @brief Reorder mutually commuting gates into a deterministic order.

    Among the gates whose non-commuting predecessors have all been emitted, the one with the smallest (min touched
    index, kind, max touched index, angle) key goes next. Circuits that differ only by commutations get the same order.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(gates)))
    for j in range(len(gates)):
        for i in range(j):
            if not commutes(gates[i], gates[j]):
                graph.add_edge(i, j)

    order = nx.lexicographical_topological_sort(graph, key=lambda idx: _order_key(gates[idx]) + (idx,))
    return [gates[idx] for idx in order]


def canonicalize(circuit: AdditiveCircuit) -> Tuple[AdditiveCircuit, Permutation]:
    """!
    @brief Reduce an additive circuit to canonical form.

    @return A tuple `(canonical, trailing)` with eval(circuit) = matrix(trailing) · eval(canonical). `canonical` is
            swap-free, every Ry⁺ has ascending dimensions, no two gates can be merged, and commuting gates appear in
            @ref canonical_order().
    """
    swapfree, trailing = push_swaps_right(circuit)

    # Reordering can bring new merge partners next to each other, so alternate until the gate list is stable.
    result = swapfree
    max_passes = 10 * max(1, len(swapfree))
    for _ in range(max_passes):
        merged = merge_adjacent(result)
        ordered = merged.with_gates(canonical_order(merged.gates))
        if ordered.gates == result.gates:
            break
        result = ordered
    else:
        raise RuntimeError('Canonicalization did not reach a fixpoint after %d passes.' % max_passes)

    _logger.debug('Canonicalized %d gates into %d gates. [trailing=%s]' % (len(circuit), len(result), trailing))
    return result, trailing
