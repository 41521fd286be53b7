import os
import sys
from typing import List, Optional, Union

import colorama
import numpy as np

from . import trace as logging
from .argument_parser import ArgumentParser, ExtendedBooleanAction, positive_float_type
from .circuit import AdditiveCircuit, MultCircuit, XPlus
from .circuit_file import (ADDITIVE, detect_kind, emit_additive, emit_mult,
                           parse_additive, parse_circuit, parse_mult)
from .dag import dag_to_dot, to_dag
from .render import render_svg, render_text
from .rewrite import canonicalize
from .semantics import eval_additive, eval_mult, fidelity
from .synth import synthesize, synthesize_naive
from .translate import translate_circuit

logger = logging.getLogger('addcirc.main')

DEFAULT_VERIFY_TOL = 1e-9

EXIT_SUCCESS = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE_ERROR = 2


def _read_input(path: Optional[str]) -> str:
    if path is None or path == '-':
        return sys.stdin.read()
    with open(path, 'r', encoding='utf-8') as fd:
        return fd.read()


def _write_output(text: str, path: Optional[str]):
    if path is None or path == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, 'w', encoding='utf-8', newline='\n') as fd:
            fd.write(text)
        logger.debug('Wrote %s.' % path)


def _load_additive(path: Optional[str]) -> AdditiveCircuit:
    """!
    @brief Load an additive circuit, translating a multiplicative file on the fly.
    """
    text = _read_input(path)
    if detect_kind(text) == ADDITIVE:
        return parse_additive(text)
    circuit = parse_mult(text)
    logger.debug('Input is a multiplicative circuit. Translating to an additive circuit.')
    return translate_circuit(circuit)


def _evaluate(circuit: Union[AdditiveCircuit, MultCircuit]) -> np.ndarray:
    if isinstance(circuit, AdditiveCircuit):
        return eval_additive(circuit)
    else:
        return eval_mult(circuit)


def _format_complex(value: complex) -> str:
    # Rounding first keeps tiny negative values from printing as -0.000000.
    real = round(value.real, 6) + 0.0
    imag = round(value.imag, 6) + 0.0
    return '%.6f%+.6fi' % (real, imag)


def cmd_translate(options) -> int:
    text = _read_input(options.input)
    if detect_kind(text) == ADDITIVE:
        raise ValueError('translate expects a multiplicative circuit file.')
    _write_output(emit_additive(translate_circuit(parse_mult(text))), options.output)
    return EXIT_SUCCESS


def cmd_simplify(options) -> int:
    circuit = _load_additive(options.input)
    canonical, trailing = canonicalize(circuit)
    result = canonical.extend(XPlus(a, b) for a, b in trailing.transpositions())
    logger.debug('Simplified %d gates to %d gates.' % (len(circuit), len(result)))
    _write_output(emit_additive(result), options.output)
    return EXIT_SUCCESS


def cmd_synth(options) -> int:
    circuit = _load_additive(options.input)
    if options.naive:
        report = synthesize_naive(circuit)
    else:
        canonical, trailing = canonicalize(circuit)
        dag = to_dag(canonical, trailing)
        if options.dump_dag is not None:
            _write_output(dag_to_dot(dag), options.dump_dag)
        report = synthesize(dag)

    if options.report:
        logger.info(report.summary())
    _write_output(emit_mult(report.output), options.output)
    return EXIT_SUCCESS


def cmd_verify(options) -> int:
    a = parse_circuit(_read_input(options.file_a))
    b = parse_circuit(_read_input(options.file_b))
    U = _evaluate(a)
    V = _evaluate(b)
    if U.shape != V.shape:
        raise ValueError('Dimension mismatch: %d vs %d.' % (U.shape[0], V.shape[0]))

    value = fidelity(U, V)
    passed = value >= 1.0 - options.tol
    verdict = 'PASS' if passed else 'FAIL'
    if sys.stdout.isatty():
        color = colorama.Fore.GREEN if passed else colorama.Fore.RED
        verdict = color + verdict + colorama.Style.RESET_ALL
    _write_output('Fidelity: %.12f\n%s\n' % (value, verdict), options.output)
    return EXIT_SUCCESS if passed else EXIT_VERIFY_FAILED


def cmd_matrix(options) -> int:
    U = _evaluate(parse_circuit(_read_input(options.input)))
    if options.state is not None:
        if options.state < 0 or options.state >= U.shape[0]:
            raise ValueError('Basis index %d out of range [0, %d).' % (options.state, U.shape[0]))
        rows = [[U[row, options.state]] for row in range(U.shape[0])]
    else:
        rows = U
    _write_output(''.join(' '.join(_format_complex(v) for v in row) + '\n' for row in rows), options.output)
    return EXIT_SUCCESS


def cmd_render(options) -> int:
    circuit = _load_additive(options.input)
    if options.format == 'text':
        _write_output(render_text(circuit), options.output)
    else:
        _write_output(render_svg(circuit, options.basis), options.output)
    return EXIT_SUCCESS


def build_parser() -> ArgumentParser:
    if getattr(sys, 'frozen', False):
        execute_command = os.path.basename(sys.executable)
    else:
        execute_command = 'addcirc'

    parser = ArgumentParser(
        usage='%s COMMAND [OPTIONS]...' % execute_command,
        description='Translate, simplify and synthesize quantum circuits through the additive circuit model.',
        epilog="""\
EXAMPLE USAGE

Translate a qubit circuit into an additive circuit:
    %(command)s translate corpus/cry_decomposition.mult

Simplify it to canonical form, then synthesize a qubit circuit back:
    %(command)s simplify translated.add -o canonical.add
    %(command)s synth canonical.add --report -o synthesized.mult

Check the result against the original:
    %(command)s verify corpus/cry_decomposition.mult synthesized.mult

Draw the amplitudes of basis state 0 flowing through a circuit:
    %(command)s render --input 0 canonical.add -o canonical.svg
""" % {'command': execute_command})

    # Options shared by every command.
    common = ArgumentParser(add_help=False)
    common.add_argument('-o', '--output', default=None,
                        help="The path to write the output to. Writes to stdout if omitted.")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="Print verbose/trace debugging messages. May be specified multiple times to increase "
                             "verbosity.")

    command_subparsers = parser.add_subparsers(dest='command', help='The command to be run.')

    # addcirc translate
    help = 'Translate a multiplicative (qubit) circuit into an additive circuit.'
    translate_parser = command_subparsers.add_parser('translate', parents=[common], help=help, description=help)
    translate_parser.add_argument('input', nargs='?', help="The input circuit file. Reads stdin if omitted.")
    translate_parser.set_defaults(func=cmd_translate)

    # addcirc simplify
    help = 'Reduce an additive circuit to canonical form. The leftover wire permutation is written as trailing ' \
           'swap lines.'
    simplify_parser = command_subparsers.add_parser('simplify', parents=[common], help=help, description=help)
    simplify_parser.add_argument('input', nargs='?', help="The input circuit file. Reads stdin if omitted.")
    simplify_parser.set_defaults(func=cmd_simplify)

    # addcirc synth
    help = 'Synthesize a multiplicative circuit from an additive circuit.'
    synth_parser = command_subparsers.add_parser('synth', parents=[common], help=help, description=help)
    synth_parser.add_argument('input', nargs='?', help="The input circuit file. Reads stdin if omitted.")
    synth_parser.add_argument('--report', action=ExtendedBooleanAction,
                              help="Print the synthesized gate counts and the number of routing permutations.")
    synth_parser.add_argument('--naive', action=ExtendedBooleanAction,
                              help="Synthesize gate by gate instead of through the canonical DAG.")
    synth_parser.add_argument('--dump-dag', metavar='FILE', default=None,
                              help="Write the additive DAG to FILE in Graphviz DOT format.")
    synth_parser.set_defaults(func=cmd_synth)

    # addcirc verify
    help = 'Compare two circuits by Hilbert-Schmidt fidelity. Exits with 0 on PASS and 1 on FAIL.'
    verify_parser = command_subparsers.add_parser('verify', parents=[common], help=help, description=help)
    verify_parser.add_argument('file_a', help="The first circuit file.")
    verify_parser.add_argument('file_b', help="The second circuit file.")
    verify_parser.add_argument(
        '--tol', type=positive_float_type, default=os.environ.get('ADDCIRC_VERIFY_TOL', str(DEFAULT_VERIFY_TOL)),
        help="Pass if the fidelity is at least 1 - TOL. Set to the value of the ADDCIRC_VERIFY_TOL environment "
             "variable if set. Defaults to %g if not specified." % DEFAULT_VERIFY_TOL)
    verify_parser.set_defaults(func=cmd_verify)

    # addcirc matrix
    help = 'Print the unitary of a circuit, one row per line.'
    matrix_parser = command_subparsers.add_parser('matrix', parents=[common], help=help, description=help)
    matrix_parser.add_argument('input', nargs='?', help="The input circuit file. Reads stdin if omitted.")
    matrix_parser.add_argument('--state', type=int, default=None,
                               help="Print only the column for this input basis state.")
    matrix_parser.set_defaults(func=cmd_matrix)

    # addcirc render
    help = 'Draw an additive circuit.'
    render_parser = command_subparsers.add_parser('render', parents=[common], help=help, description=help)
    render_parser.add_argument('input', nargs='?', help="The input circuit file. Reads stdin if omitted.")
    render_parser.add_argument('--input', dest='basis', type=int, default=None,
                               help="Style the wires by the amplitudes of this input basis state.")
    render_parser.add_argument('--format', choices=('svg', 'text'), default='svg',
                               help="The output format.")
    render_parser.set_defaults(func=cmd_render)

    return parser


def main(args: Optional[List[str]] = None) -> int:
    parser = build_parser()
    options = parser.parse_args(args)
    if options.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE_ERROR

    logging.configure_console_logging(options.verbose)

    try:
        return options.func(options)
    except (ValueError, IOError) as e:
        logger.error(str(e))
        return EXIT_USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
