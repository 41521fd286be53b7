import io
from pathlib import Path

import numpy as np

from addcirc import trace as logging
from addcirc.circuit_file import parse_additive, parse_mult
from addcirc.main import EXIT_SUCCESS, EXIT_USAGE_ERROR, EXIT_VERIFY_FAILED, main
from addcirc.semantics import eval_mult

logging.getLogger('addcirc').setLevel(logging.TRACE)

CORPUS_DIR = Path(__file__).parent.parent / 'corpus'

CRY = str(CORPUS_DIR / 'cry_decomposition.mult')
CRY_ALT = str(CORPUS_DIR / 'cry_decomposition_alt.mult')
RY_BLOWUP = str(CORPUS_DIR / 'ry_blowup.mult')


def _write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_translate(capsys):
    assert main(['translate', CRY]) == EXIT_SUCCESS
    circuit = parse_additive(capsys.readouterr().out)
    assert circuit.dim == 4
    assert len(circuit) == 6


def test_translate_rejects_additive(tmp_path):
    path = _write(tmp_path, 'a.add', 'dims 4\nry 0 1 0.5\n')
    assert main(['translate', path]) == EXIT_USAGE_ERROR


def test_simplify(capsys):
    assert main(['simplify', CRY]) == EXIT_SUCCESS
    circuit = parse_additive(capsys.readouterr().out)
    assert len(circuit) == 1
    assert circuit.gates[0].dims() == (2, 3)


def test_simplify_keeps_swaps(tmp_path, capsys):
    path = _write(tmp_path, 'swap.add', 'dims 4\nswap 0 3\n')
    assert main(['simplify', path]) == EXIT_SUCCESS
    assert capsys.readouterr().out == 'dims 4\nswap 0 3\n'


def test_synth_and_verify(tmp_path, capsys):
    output = str(tmp_path / 'out.mult')
    assert main(['synth', CRY, '-o', output]) == EXIT_SUCCESS
    synthesized = parse_mult(Path(output).read_text(encoding='utf-8'))
    assert len(synthesized) == 1
    capsys.readouterr()

    assert main(['verify', CRY, output]) == EXIT_SUCCESS
    out = capsys.readouterr().out
    assert out.startswith('Fidelity: 1.000000000000')
    assert 'PASS' in out


def test_synth_options(tmp_path, capsys, caplog):
    dot = str(tmp_path / 'dag.dot')
    assert main(['synth', RY_BLOWUP, '--report', '--dump-dag', dot]) == EXIT_SUCCESS
    assert parse_mult(capsys.readouterr().out).gates[0].q == 0
    assert Path(dot).read_text(encoding='utf-8').startswith('digraph')
    assert 'Routing permutations: 0' in caplog.text

    assert main(['synth', RY_BLOWUP, '--naive']) == EXIT_SUCCESS
    naive = parse_mult(capsys.readouterr().out)
    assert len(naive) > 1


def test_verify_equivalent_decompositions(capsys):
    assert main(['verify', CRY, CRY_ALT]) == EXIT_SUCCESS
    assert 'PASS' in capsys.readouterr().out


def test_verify_fail(tmp_path, capsys, monkeypatch):
    a = _write(tmp_path, 'a.mult', 'qubits 1\nry 0 0.1\n')
    b = _write(tmp_path, 'b.mult', 'qubits 1\n')
    assert main(['verify', a, b]) == EXIT_VERIFY_FAILED
    assert 'FAIL' in capsys.readouterr().out

    assert main(['verify', a, b, '--tol', '0.01']) == EXIT_SUCCESS
    capsys.readouterr()

    monkeypatch.setenv('ADDCIRC_VERIFY_TOL', '0.5')
    assert main(['verify', a, b]) == EXIT_SUCCESS


def test_verify_dimension_mismatch(tmp_path):
    a = _write(tmp_path, 'a.mult', 'qubits 1\n')
    b = _write(tmp_path, 'b.add', 'dims 4\n')
    assert main(['verify', a, b]) == EXIT_USAGE_ERROR


def test_matrix(tmp_path, capsys):
    path = _write(tmp_path, 'ry.mult', 'qubits 1\nry 0 pi\n')
    assert main(['matrix', path]) == EXIT_SUCCESS
    assert capsys.readouterr().out == ('0.000000+0.000000i -1.000000+0.000000i\n'
                                       '1.000000+0.000000i 0.000000+0.000000i\n')

    assert main(['matrix', path, '--state', '1']) == EXIT_SUCCESS
    assert capsys.readouterr().out == '-1.000000+0.000000i\n0.000000+0.000000i\n'

    assert main(['matrix', path, '--state', '2']) == EXIT_USAGE_ERROR


def test_matrix_matches_synthesized(tmp_path, capsys):
    output = str(tmp_path / 'out.mult')
    assert main(['synth', str(CORPUS_DIR / 'mixed.mult'), '-o', output]) == EXIT_SUCCESS
    capsys.readouterr()
    original = eval_mult(parse_mult((CORPUS_DIR / 'mixed.mult').read_text(encoding='utf-8')))
    synthesized = eval_mult(parse_mult(Path(output).read_text(encoding='utf-8')))
    assert np.allclose(original, synthesized)


def test_render(tmp_path, capsys):
    assert main(['render', CRY, '--format', 'text']) == EXIT_SUCCESS
    assert 'Ry+' in capsys.readouterr().out

    output = tmp_path / 'cry.svg'
    assert main(['render', CRY, '--input', '2', '-o', str(output)]) == EXIT_SUCCESS
    assert '<svg' in output.read_text(encoding='utf-8')

    assert main(['render', CRY, '--input', '9']) == EXIT_USAGE_ERROR


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr('sys.stdin', io.StringIO('dims 2\nry 0 1 0.5\nry 0 1 -0.5\n'))
    assert main(['simplify']) == EXIT_SUCCESS
    assert capsys.readouterr().out == 'dims 2\n'


def test_errors(tmp_path, caplog):
    path = _write(tmp_path, 'bad.add', 'dims 2\nry 0 5 0.1\n')
    assert main(['simplify', path]) == EXIT_USAGE_ERROR
    assert 'line 2' in caplog.text

    assert main(['simplify', str(tmp_path / 'missing.add')]) == EXIT_USAGE_ERROR
    assert main([]) == EXIT_USAGE_ERROR
