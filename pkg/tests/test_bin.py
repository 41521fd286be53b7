import subprocess
import sys
from pathlib import Path

from addcirc import trace as logging

logging.getLogger('addcirc').setLevel(logging.TRACE)

REPO_ROOT = Path(__file__).parent.parent.resolve()
BIN_DIR = REPO_ROOT / 'bin'


def _run(script: str, *args: str) -> subprocess.CompletedProcess:
    # Run from outside the repo so only the launcher's own path setup can locate the package.
    return subprocess.run([sys.executable, str(BIN_DIR / script)] + list(args), cwd='/', capture_output=True,
                          text=True, timeout=120)


def test_circuit_tool():
    result = _run('circuit_tool.py', 'translate', str(REPO_ROOT / 'corpus' / 'toffoli.mult'))
    assert result.returncode == 0, result.stderr
    assert result.stdout.startswith('dims 8')

    result = _run('circuit_tool.py', 'verify', str(REPO_ROOT / 'corpus' / 'cry_decomposition.mult'),
                  str(REPO_ROOT / 'corpus' / 'canonical_cry.add'))
    assert result.returncode == 0, result.stderr
    assert 'PASS' in result.stdout


def test_check_corpus():
    result = _run('check_corpus.py')
    assert result.returncode == 0, result.stderr
    assert 'FAIL' not in result.stderr
