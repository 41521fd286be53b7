import numpy as np
import pytest

from addcirc import trace as logging
from addcirc.circuit import MultCircuit
from addcirc.phase_poly import phase_coefficients, synth_phases
from addcirc.semantics import eval_mult

logging.getLogger('addcirc').setLevel(logging.TRACE)


def test_coefficients():
    theta = 0.7
    assert np.allclose(phase_coefficients([0, theta, 0, 0]), [0, theta, 0, -theta])
    # A phase on every state with qubit 1 set is a single term.
    assert np.allclose(phase_coefficients([0, 0, theta, theta]), [0, 0, theta, 0])

    with pytest.raises(ValueError, match='power of two'):
        phase_coefficients([0, 1, 2])


def test_single_state_phase():
    theta = 0.7
    gates = synth_phases([0, theta, 0, 0], 2)
    assert [g.controls for g in gates] == [(0,), (0, 1)]
    assert gates[0].theta == pytest.approx(theta)
    assert gates[1].theta == pytest.approx(-theta)


def test_zero_phases():
    assert synth_phases([0, 0, 0, 0], 2) == []
    # Multiples of 2π vanish.
    assert synth_phases([0, 2 * np.pi], 1) == []

    gates, phase = synth_phases([0.4, 0.4, 0.4, 0.4], 2, return_global_phase=True)
    assert gates == []
    assert phase == pytest.approx(0.4)


def test_random_diagonals():
    rng = np.random.default_rng(71)
    for n in (1, 2, 3, 4):
        phases = rng.uniform(-np.pi, np.pi, size=1 << n)
        gates, phase = synth_phases(phases, n, return_global_phase=True)
        assert np.allclose(eval_mult(MultCircuit(n, gates, phase)), np.diag(np.exp(1j * phases)))


def test_phase_count_mismatch():
    with pytest.raises(ValueError):
        synth_phases([0, 1], 2)
