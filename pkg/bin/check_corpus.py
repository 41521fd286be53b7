#!/usr/bin/env python3

import os
import sys
from pathlib import Path

import colorama

# Add the parent directory to the search path to enable addcirc package imports when not installed in Python.
repo_root = os.path.normpath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.append(repo_root)

from addcirc import trace as logging
from addcirc.argument_parser import ArgumentParser, positive_float_type
from addcirc.circuit_file import ADDITIVE, detect_kind, parse_additive, parse_mult
from addcirc.dag import to_dag
from addcirc.rewrite import canonicalize
from addcirc.semantics import eval_additive, eval_mult, fidelity
from addcirc.synth import synthesize
from addcirc.translate import translate_circuit

logger = logging.getLogger('addcirc.check_corpus')


def check_file(path: Path, tol: float) -> bool:
    text = path.read_text(encoding='utf-8')
    if detect_kind(text) == ADDITIVE:
        circuit = parse_additive(text)
        expected = eval_additive(circuit)
    else:
        original = parse_mult(text)
        expected = eval_mult(original)
        circuit = translate_circuit(original)

    canonical, trailing = canonicalize(circuit)
    report = synthesize(to_dag(canonical, trailing))
    value = fidelity(expected, eval_mult(report.output))
    passed = value >= 1.0 - tol

    color = colorama.Fore.GREEN if passed else colorama.Fore.RED
    logger.info('%s%s%s %s [fidelity=%.12f, gates=%d, routing permutations=%d]' %
                (color, 'PASS' if passed else 'FAIL', colorama.Style.RESET_ALL, path.name, value,
                 len(report.output), report.num_routing_permutations))
    return passed


def main():
    parser = ArgumentParser(description='Run every circuit in the example corpus through translate, simplify and '
                                        'synth, and verify the result against the original.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="Print verbose/trace debugging messages. May be specified multiple times to increase "
                             "verbosity.")
    parser.add_argument('--tol', type=positive_float_type, default=1e-9,
                        help="Pass if the fidelity is at least 1 - TOL.")
    parser.add_argument('corpus', nargs='?', type=Path, default=Path(repo_root) / 'corpus',
                        help="The corpus directory.")
    options = parser.parse_args()

    logging.configure_console_logging(options.verbose)

    paths = sorted(p for p in options.corpus.iterdir() if p.suffix in ('.add', '.mult'))
    if len(paths) == 0:
        logger.error('No circuit files found in %s.' % options.corpus)
        sys.exit(2)

    failures = 0
    for path in paths:
        try:
            if not check_file(path, options.tol):
                failures += 1
        except ValueError as e:
            logger.error('%s: %s' % (path.name, str(e)))
            failures += 1

    logger.info('%d/%d files passed.' % (len(paths) - failures, len(paths)))
    sys.exit(0 if failures == 0 else 1)


if __name__ == "__main__":
    main()
