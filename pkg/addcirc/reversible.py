"""!
@brief Reversible classical circuit synthesis for bitstring permutations.
"""
from typing import List

from . import trace as logging
from .bits import gray_path
from .circuit import MultGate, X, controlled_x
from .permutation import Permutation

_logger = logging.getLogger('addcirc.reversible')


def _adjacent_transposition(x: int, y: int, n: int) -> List[MultGate]:
    """!
    @brief Swap two bitstrings that differ in a single bit: an X on that bit, controlled on every other bit matching
           `x`.
    """
    target = (x ^ y).bit_length() - 1
    controls = [q for q in range(n) if q != target]
    flips = [X(q) for q in controls if not (x >> q) & 1]
    return flips + [controlled_x(controls, target)] + flips


def _cancel_adjacent_x(gates: List[MultGate]) -> List[MultGate]:
    result = []
    for gate in gates:
        if isinstance(gate, X) and result and result[-1] == gate:
            result.pop()
        else:
            result.append(gate)
    return result


def synth_transposition(a: int, b: int, n: int) -> List[MultGate]:
    """!
    @brief Synthesize the transposition of bitstrings `a` and `b`.

    The swap is walked along a Gray code path a = g_0, ..., g_k = b as the adjacent swaps
    (g_0 g_1) ... (g_{k-1} g_k) ... (g_0 g_1), 2k - 1 in total.
    """
    path = gray_path(a, b)
    steps = list(zip(path[:-1], path[1:]))
    steps = steps + list(reversed(steps[:-1]))
    gates = []
    for x, y in steps:
        gates.extend(_adjacent_transposition(x, y, n))
    return gates


def synth_permutation(perm: Permutation, n: int) -> List[MultGate]:
    """!
    @brief Synthesize a permutation of n-bit bitstrings as X, CX and MCX gates.

    @param perm A permutation of [0, 2^n).
    @param n The number of qubits.

    @return Gates whose combined unitary is exactly the permutation matrix of `perm`.
    """
    if perm.dim != 1 << n:
        raise ValueError('Permutation over %d elements does not match %d qubits.' % (perm.dim, n))

    gates = []
    for a, b in perm.transpositions():
        gates.extend(synth_transposition(a, b, n))
    gates = _cancel_adjacent_x(gates)
    _logger.trace('Synthesized %s into %d gates.' % (perm, len(gates)))
    return gates
