import numpy as np
import pytest

from addcirc import trace as logging
from addcirc.circuit import CX, MCX, CPhase, MCRy, MultCircuit, Ry, RyPlus, Rz, RzPlus, X, XPlus
from addcirc.rewrite import canonicalize
from addcirc.semantics import eval_additive, eval_mult
from addcirc.translate import translate_circuit, translate_gate
from helpers import random_mult_circuit

logging.getLogger('addcirc').setLevel(logging.TRACE)


def test_translate_rz():
    gates, phase = translate_gate(Rz(0, 0.6), 1)
    assert gates == [RzPlus(1, 0.6)]
    assert phase == pytest.approx(-0.3)


def test_translate_ry():
    gates, phase = translate_gate(Ry(1, 0.6), 2)
    assert gates == [RyPlus(0, 2, 0.6), RyPlus(1, 3, 0.6)]
    assert phase == 0.0


def test_translate_controlled():
    assert translate_gate(CX(1, 0), 2) == ([XPlus(2, 3)], 0.0)
    assert translate_gate(X(0), 1) == ([XPlus(0, 1)], 0.0)
    assert translate_gate(CPhase((0, 1), 0.5), 2) == ([RzPlus(3, 0.5)], 0.0)
    assert translate_gate(MCX((0, 1), 2), 4) == ([XPlus(3, 7), XPlus(11, 15)], 0.0)


def test_translated_gate_counts():
    # A gate with c controls on n qubits acts on 2^(n - 1 - c) index pairs.
    n = 4
    for controls in ((), (1,), (1, 2), (1, 2, 3)):
        gates, _ = translate_gate(MCRy(controls, 0, 0.3) if controls else Ry(0, 0.3), n)
        assert len(gates) == 2 ** (n - 1 - len(controls))
        assert all(isinstance(g, RyPlus) for g in gates)


def test_translate_rejects_bad_gate():
    with pytest.raises(ValueError):
        translate_gate(Ry(2, 0.3), 2)


def test_translation_is_exact():
    rng = np.random.default_rng(1)
    for n in (1, 2, 3, 4):
        for _ in range(25):
            circuit = random_mult_circuit(rng, n, int(rng.integers(1, 26)))
            additive = translate_circuit(circuit)
            assert additive.dim == 2 ** n
            # Equal including the global phase.
            assert np.allclose(eval_additive(additive), eval_mult(circuit))


def test_global_phase_carried():
    additive = translate_circuit(MultCircuit(1, [Rz(0, 1.0)], 0.3))
    assert additive.global_phase == pytest.approx(0.3 - 0.5)


def test_phase_gadget_is_diagonal():
    circuit = MultCircuit(2, [CX(0, 1), Rz(1, 0.7), CX(0, 1)])
    canonical, trailing = canonicalize(translate_circuit(circuit))
    assert trailing.is_identity()
    assert len(canonical) > 0
    assert all(isinstance(g, RzPlus) for g in canonical.gates)
