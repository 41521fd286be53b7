import math
from pathlib import Path

import numpy as np
import pytest

from addcirc import trace as logging
from addcirc.circuit import CX, MCX, AdditiveCircuit, MCRy, MultCircuit, Ry, RyPlus, RzPlus, X
from addcirc.circuit_file import ADDITIVE, detect_kind, parse_additive, parse_mult
from addcirc.dag import AdditiveDag, to_dag
from addcirc.placement import PlacementMap
from addcirc.rewrite import canonicalize
from addcirc.semantics import eval_additive, eval_mult, fidelity
from addcirc.stacking import StackedVertex
from addcirc.synth import synth_stacked_vertex, synthesize, synthesize_naive
from addcirc.translate import translate_circuit
from helpers import ROUND_TRIP_KINDS, random_additive_circuit, random_mult_circuit

logging.getLogger('addcirc').setLevel(logging.TRACE)

CORPUS_DIR = Path(__file__).parent.parent / 'corpus'


def _synthesize(circuit: AdditiveCircuit):
    canonical, trailing = canonicalize(circuit)
    return synthesize(to_dag(canonical, trailing))


def test_stacked_vertex_with_controls():
    theta = 0.6
    gates = synth_stacked_vertex(StackedVertex(theta, [(0, 1)]), PlacementMap.identity(2), 2)
    assert gates == [X(1), MCRy((1,), 0, theta), X(1)]

    gates = synth_stacked_vertex(StackedVertex(theta, [(2, 3)]), PlacementMap.identity(2), 2)
    assert gates == [MCRy((1,), 0, theta)]


def test_full_stack_is_bare_ry():
    stack = StackedVertex(0.5, [(0, 1), (2, 3), (4, 5), (6, 7)])
    assert synth_stacked_vertex(stack, PlacementMap.identity(3), 3) == [Ry(0, 0.5)]


def test_stacked_vertex_orientation():
    # Slot 0 sits on the upper side of the target bit, so the rotation runs backwards.
    gates = synth_stacked_vertex(StackedVertex(0.5, [(0, 1)]), PlacementMap(1, (1, 0)), 1)
    assert gates == [Ry(0, -0.5)]


def test_stacked_vertex_requires_constraints():
    with pytest.raises(ValueError, match='connectivity'):
        synth_stacked_vertex(StackedVertex(0.5, [(0, 3)]), PlacementMap.identity(2), 2)


def test_cry_synthesizes_to_one_gate():
    circuit = MultCircuit(2, [Ry(0, 0.4), CX(1, 0), Ry(0, -0.4), CX(1, 0)])
    report = _synthesize(translate_circuit(circuit))
    assert len(report.output) == 1
    gate = report.output.gates[0]
    assert isinstance(gate, MCRy)
    assert gate.controls == (1,)
    assert gate.target == 0
    assert gate.theta == pytest.approx(0.8)
    assert report.num_routing_permutations == 0
    assert np.allclose(eval_mult(report.output), eval_mult(circuit))


def test_ry_stacks_back_into_one_gate():
    circuit = MultCircuit(3, [Ry(0, math.pi / 3)])
    additive = translate_circuit(circuit)
    assert len(additive) == 4

    report = _synthesize(additive)
    assert report.output.gates == (Ry(0, math.pi / 3),)
    assert report.num_stacks == 1


def test_toffoli():
    report = _synthesize(translate_circuit(MultCircuit(3, [MCX((0, 1), 2)])))
    assert report.output.gates == (MCX((0, 1), 2),)


def test_non_adjacent_rotation_is_routed():
    circuit = AdditiveCircuit(4, [RyPlus(0, 3, 0.9)])
    report = _synthesize(circuit)
    assert report.num_routing_permutations == 1
    assert np.allclose(eval_mult(report.output), eval_additive(circuit))


def test_round_trip_fidelity():
    rng = np.random.default_rng(81)
    for n in (1, 2, 3):
        for _ in range(200):
            original = random_mult_circuit(rng, n, int(rng.integers(1, 16)), kinds=ROUND_TRIP_KINDS)
            U = eval_mult(original)
            report = _synthesize(translate_circuit(original))
            V = eval_mult(report.output)
            assert fidelity(U, V) >= 1.0 - 1e-9
            # The global phase is tracked, so the match is exact.
            assert np.allclose(V, U)


def test_synthesis_is_exact():
    rng = np.random.default_rng(85)
    for n in (1, 2, 3):
        for _ in range(4):
            original = random_mult_circuit(rng, n, 8)
            report = _synthesize(translate_circuit(original))
            assert np.allclose(eval_mult(report.output), eval_mult(original))

        for _ in range(20):
            circuit = random_additive_circuit(rng, 1 << n, 6)
            report = _synthesize(circuit)
            assert np.allclose(eval_mult(report.output), eval_additive(circuit))


def test_naive_synthesis():
    rng = np.random.default_rng(91)
    for n in (1, 2, 3):
        for _ in range(4):
            circuit = random_additive_circuit(rng, 1 << n, 6)
            report = synthesize_naive(circuit)
            assert np.allclose(eval_mult(report.output), eval_additive(circuit))


def test_naive_is_larger():
    additive = translate_circuit(MultCircuit(3, [Ry(0, math.pi / 3)]))
    assert len(synthesize_naive(additive).output) > len(_synthesize(additive).output)


def test_dimension_errors():
    with pytest.raises(ValueError, match='power of two'):
        synthesize(AdditiveDag(6))
    with pytest.raises(ValueError):
        synthesize(AdditiveDag(1))
    with pytest.raises(ValueError):
        synthesize_naive(AdditiveCircuit(3))


def test_report_summary():
    report = _synthesize(AdditiveCircuit(4, [RyPlus(0, 3, 0.9)]))
    summary = report.summary()
    assert 'Qubits: 2' in summary
    assert 'Routing permutations: 1' in summary
    assert report.counts == report.output.gate_counts()


def test_corpus():
    paths = sorted(CORPUS_DIR.glob('*.add')) + sorted(CORPUS_DIR.glob('*.mult'))
    assert len(paths) > 0
    for path in paths:
        text = path.read_text(encoding='utf-8')
        if detect_kind(text) == ADDITIVE:
            circuit = parse_additive(text)
            expected = eval_additive(circuit)
        else:
            original = parse_mult(text)
            expected = eval_mult(original)
            circuit = translate_circuit(original)
        report = _synthesize(circuit)
        assert fidelity(expected, eval_mult(report.output)) >= 1.0 - 1e-9, path.name


def test_four_qubit_ry_stacks_back():
    additive = translate_circuit(MultCircuit(4, [Ry(0, 0.9)]))
    assert len(additive) == 8

    report = _synthesize(additive)
    assert report.output.gates == (Ry(0, 0.9),)
    assert 'CX' not in report.counts
    assert 'MCX' not in report.counts


def test_single_phase_shift():
    theta = np.pi / 4
    for n in (2, 3):
        dim = 1 << n
        circuit = AdditiveCircuit(dim, [RzPlus(dim - 1, theta)])
        expected = np.diag([1.0] * (dim - 1) + [np.exp(1j * theta)])
        for report in (_synthesize(circuit), synthesize_naive(circuit)):
            assert fidelity(expected, eval_mult(report.output)) >= 1.0 - 1e-10
