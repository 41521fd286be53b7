"""!
@brief Diagonal (phase polynomial) synthesis.

A diagonal unitary diag(e^{iφ_x}) over n qubits is written as φ_x = Σ_{S ⊆ bits(x)} c_S, with one multi-controlled
phase gate per nonzero coefficient c_S for nonempty S. The coefficients follow from Möbius inversion over the subset
lattice: c_S = Σ_{T ⊆ S} (-1)^{|S|-|T|} φ_T. c_∅ = φ_0 is a global phase.
"""
from typing import List, Sequence, Tuple, Union

import numpy as np

from . import trace as logging
from .angles import canonical_phase, is_zero_phase
from .bits import is_power_of_two
from .circuit import CPhase, MultGate

_logger = logging.getLogger('addcirc.phase_poly')


def phase_coefficients(phases: Sequence[float]) -> np.ndarray:
    """!
    @brief Möbius-invert a phase vector of length 2^n: the result holds c_S at index mask(S).
    """
    c = np.array(phases, dtype=float)
    if not is_power_of_two(len(c)):
        raise ValueError('dimension must be a power of two, got %d.' % len(c))

    indices = np.arange(len(c))
    for q in range(len(c).bit_length() - 1):
        upper = indices[(indices >> q) & 1 == 1]
        c[upper] -= c[upper ^ (1 << q)]
    return c


def synth_phases(phases: Sequence[float], n: int,
                 return_global_phase: bool = False) -> Union[List[MultGate], Tuple[List[MultGate], float]]:
    """!
    @brief Synthesize diag(e^{iφ_0}, ..., e^{iφ_{N-1}}) up to global phase.

    @param phases The N = 2^n phases, indexed by basis state.
    @param n The number of qubits.
    @param return_global_phase If `True`, also return the omitted global phase φ_0.

    @return The list of @ref CPhase gates, in increasing order of control mask, or a tuple `(gates, phase)`.
    """
    if len(phases) != 1 << n:
        raise ValueError('Expected %d phases for %d qubits, got %d.' % (1 << n, n, len(phases)))

    c = phase_coefficients(phases)
    gates = []
    for mask in range(1, 1 << n):
        if is_zero_phase(c[mask]):
            continue
        controls = [q for q in range(n) if (mask >> q) & 1]
        gates.append(CPhase(controls, canonical_phase(float(c[mask]))))

    _logger.trace('Synthesized %d phases into %d gates.' % (len(phases), len(gates)))
    if return_global_phase:
        return gates, float(c[0])
    else:
        return gates
