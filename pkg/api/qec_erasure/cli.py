"""
Command line front end

``qec-erasure <subcommand> ...`` certifies codes, builds BCH and quantum BCH
codes, decodes classical words and runs erasure experiments. Reports go to
stdout (or ``--out``) as JSON or a plain table.

Exit codes: 0 success, 1 a domain-level failure (a condition fails, a
decode fails, an experiment is imperfect), 2 malformed input.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel

from . import __version__
from .classical_bch import bch_code, check_lemma7, decode_erasures_only, decode_errors_and_erasures
from .code_analysis import QuantumCode, check_erasure_kl, check_general_kl, falsify_short_codes, find_product_state
from .erasure_channel import ErasureModel, builtin_code, run_trials
from .qbch import admissibility_report, admissible_bch_codes, build_qbch, describe_qbch
from .serialization import (
    dump_json, falsify_report_from_dict, product_state_to_dict, read_code, read_cyclic_code, read_state,
    trial_report_from_dict
)
from .type_defs import ErasureModelAlias, ErasureModelName, KLMode, OutputFormat
from .validation import (
    FALSIFIABLE_LENGTHS, validate_bch_parameters, validate_erasure_model, validate_falsify_request,
    validate_kl_mode, validate_simulation_request
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

BUILTIN_NAMES = {name.lower(): name for name in ('FourQubit_K1', 'FourQubit_K2', 'Steane7')}


class UsageError(ValueError):
    """Malformed command line input"""


def _load_code(name_or_path: str) -> Tuple[str, QuantumCode]:
    """Built-in code (case-insensitive) or a code file"""
    canonical = BUILTIN_NAMES.get(name_or_path.lower())
    if canonical is not None:
        return canonical, builtin_code(canonical)
    code = read_code(name_or_path)
    return code.name or name_or_path, code


def _parse_positions(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError as e:
        raise UsageError(f"Invalid position list: {text!r}") from e


def _parse_bits(text: str) -> List[int]:
    if not text or set(text) - {'0', '1'}:
        raise UsageError(f"Invalid bit string: {text!r}")
    return [int(bit) for bit in text]


def _render_table(document: Any, prefix: str = '') -> List[str]:
    lines = []
    if isinstance(document, dict):
        width = max((len(str(key)) for key in document), default=0)
        for key, value in document.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{prefix}{key}:")
                lines.extend(_render_table(value, prefix + '  '))
            else:
                lines.append(f"{prefix}{str(key).ljust(width)}  {_scalar(value)}")
    elif isinstance(document, list):
        for item in document:
            lines.extend(_render_table(item, prefix + '- ') if isinstance(item, dict) else [f"{prefix}{_scalar(item)}"])
    else:
        lines.append(f"{prefix}{_scalar(document)}")
    return lines


def _is_flat(value: Any) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(item, (dict, list)) for item in items)


def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    if value is None:
        return '-'
    return str(value)


def render(document: Any, output_format: OutputFormat = 'json', message: Optional[str] = None) -> str:
    """A report as indented JSON or as a plain table followed by ``message``"""
    if isinstance(document, BaseModel):
        document = document.model_dump(mode='json')
    if output_format == 'json':
        return dump_json(document)
    lines = _render_table(document)
    if message:
        lines.append(message)
    return '\n'.join(lines)


def _emit(args: argparse.Namespace, document: Any, message: Optional[str] = None) -> None:
    text = render(document, args.format, message)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(text + '\n')
    else:
        print(text)


def cmd_kl_check(args: argparse.Namespace) -> int:
    is_valid, error = validate_kl_mode(args.mode)
    if not is_valid:
        raise UsageError(error)
    mode: KLMode = args.mode
    if args.t < 0:
        raise UsageError(f"t must be non-negative, got {args.t}")
    name, code = _load_code(args.code)
    if mode == 'erasure':
        report = check_erasure_kl(code, args.t, basis=args.basis, tolerance=args.tol)
    else:
        report = check_general_kl(code, args.t, direct=args.direct, tolerance=args.tol)
    document = {'code': name, 'n': code.n, 'k': code.k, 't': args.t, 'mode': mode}
    document.update(report.to_dict())
    _emit(args, document)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_bch(args: argparse.Namespace) -> int:
    is_valid, error = validate_bch_parameters(args.n, args.b, args.d_bch)
    if not is_valid:
        raise UsageError(error)
    classical = bch_code(args.n, args.b, args.d_bch)
    document: Dict[str, Any] = dict(classical.describe())
    message = None
    status = EXIT_OK
    if args.check_lemma7 or args.qbch:
        document['lemma7'], message = admissibility_report(classical.defining_set, classical.N)
        if not check_lemma7(classical.defining_set, classical.N):
            status = EXIT_FAILED
    if args.qbch and status == EXIT_OK:
        document = describe_qbch(build_qbch(classical))
        document['lemma7'] = {'admissible': True, 'cosets': None}
        quantum = document['quantum']
        message = f"[[{quantum['N']},{quantum['K']},{quantum['d']}]]"
    _emit(args, document, message)
    return status


def cmd_qbch(args: argparse.Namespace) -> int:
    args.qbch = True
    return cmd_bch(args)


def cmd_decode(args: argparse.Namespace) -> int:
    if args.code:
        code = read_cyclic_code(args.code)
    else:
        try:
            N, b, d_bch = (int(part) for part in args.bch.split(','))
        except ValueError as e:
            raise UsageError(f"--bch expects N,B,D, got {args.bch!r}") from e
        is_valid, error = validate_bch_parameters(N, b, d_bch)
        if not is_valid:
            raise UsageError(error)
        code = bch_code(N, b, d_bch)
    received = _parse_bits(args.received)
    if len(received) != code.N:
        raise UsageError(f"Received word must have length {code.N}, got {len(received)}")
    erasures = _parse_positions(args.erasures)
    decoder = decode_erasures_only if args.erasures_only else decode_errors_and_erasures
    outcome = decoder(code, received, erasures)
    _emit(args, outcome.to_dict())
    return EXIT_OK if outcome.corrected else EXIT_FAILED


def cmd_simulate(args: argparse.Namespace) -> int:
    request = {
        'code': args.code, 'model': args.model, 'erasure_size': args.erasure_size,
        'trials': args.trials, 'seed': args.seed,
    }
    is_valid, error = validate_simulation_request(request)
    if not is_valid:
        raise UsageError(error)
    name, code = _load_code(args.code)
    if args.erasure_size > code.n:
        raise UsageError(f"erasure_size {args.erasure_size} exceeds the code length {code.n}")
    model = ErasureModel.parse(args.model)
    stats = run_trials(code, model, args.erasure_size, args.trials, args.seed)
    _emit(args, trial_report_from_dict(stats.to_report(name, model, args.erasure_size, args.seed)))
    if args.expect_perfect and stats.failures > 0:
        return EXIT_FAILED
    return EXIT_OK


def cmd_falsify(args: argparse.Namespace) -> int:
    is_valid, error = validate_falsify_request(args.n, args.trials, args.seed)
    if not is_valid:
        raise UsageError(error)
    passes = falsify_short_codes(args.n, args.trials, args.seed, tolerance=args.tol)
    report = {'n': args.n, 'trials': args.trials, 'seed': args.seed, 'passes': passes}
    _emit(args, falsify_report_from_dict(report))
    return EXIT_OK if passes == 0 else EXIT_FAILED


def cmd_product_state(args: argparse.Namespace) -> int:
    result = find_product_state(read_state(args.first), read_state(args.second))
    _emit(args, product_state_to_dict(result))
    return EXIT_OK if result.found else EXIT_FAILED


def cmd_admissible(args: argparse.Namespace) -> int:
    is_valid, error = validate_bch_parameters(args.n, args.b, 2)
    if not is_valid:
        raise UsageError(error)
    entries = [
        {'d_bch': e.d_bch, 'N': e.N, 'K': e.K, 'd': e.d, 'distance_source': e.distance_source}
        for e in admissible_bch_codes(args.n, args.b)
    ]
    _emit(args, {'N': args.n, 'b': args.b, 'admissible': entries})
    return EXIT_OK


def _model_name(value: str) -> Union[ErasureModelName, ErasureModelAlias]:
    is_valid, error = validate_erasure_model(value)
    if not is_valid:
        raise argparse.ArgumentTypeError(error)
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', metavar='FILE', help='write the report to FILE instead of stdout')
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', dest='format', action='store_const', const='json', help='JSON report (default)')
    output.add_argument('--table', dest='format', action='store_const', const='table', help='plain table report')
    common.set_defaults(format='json')
    common.add_argument('--tol', type=float, default=None, help='condition tolerance (default 1e-9)')
    common.add_argument('--log-level', default=None, help='override QEC_LOG_LEVEL')

    parser = argparse.ArgumentParser(
        prog='qec-erasure',
        description='Erasure-correcting quantum codes: certification, BCH construction and simulation.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    kl = commands.add_parser('kl-check', parents=[common], help='check Knill-Laflamme conditions')
    kl.add_argument('code', help='built-in code name or code file')
    kl.add_argument('--t', type=int, default=1, help='number of erasures or errors')
    kl.add_argument('--mode', default='erasure', choices=['erasure', 'general'])
    kl.add_argument('--basis', default='projector', choices=['projector', 'pauli'])
    kl.add_argument('--direct', action='store_true', help='enumerate operator pairs for general mode')
    kl.set_defaults(handler=cmd_kl_check)

    for name, handler in (('bch', cmd_bch), ('qbch', cmd_qbch)):
        bch = commands.add_parser(name, parents=[common], help=f'build a {name.upper()} code')
        bch.add_argument('--n', type=int, required=True, help='code length (odd)')
        bch.add_argument('--b', type=int, default=1, help='first consecutive root exponent')
        bch.add_argument('--d-bch', type=int, required=True, help='designed distance')
        bch.add_argument('--check-lemma7', action='store_true', help='test dual containment')
        if name == 'bch':
            bch.add_argument('--qbch', action='store_true', help='build the quantum BCH code')
        bch.set_defaults(handler=handler, qbch=name == 'qbch')

    decode = commands.add_parser('decode', parents=[common], help='errors-and-erasures decoding')
    source = decode.add_mutually_exclusive_group(required=True)
    source.add_argument('--code', metavar='FILE', help='code description file')
    source.add_argument('--bch', metavar='N,B,D', help='BCH parameters')
    decode.add_argument('--received', required=True, help='received word as a 0/1 string')
    decode.add_argument('--erasures', default='', help='comma-separated 0-based erased positions')
    decode.add_argument('--erasures-only', action='store_true', help='use the linear-algebra erasure decoder')
    decode.set_defaults(handler=cmd_decode)

    simulate = commands.add_parser('simulate', parents=[common], help='Monte Carlo erasure experiment')
    simulate.add_argument('code', help='built-in code name or code file')
    simulate.add_argument('--model', type=_model_name, required=True,
                          help='ResetToZero, RandomPauli, RandomUnitary (or reset, pauli, unitary)')
    simulate.add_argument('--erasure-size', type=int, default=1)
    simulate.add_argument('--trials', type=int, default=1000)
    simulate.add_argument('--seed', type=int, required=True)
    simulate.add_argument('--expect-perfect', action='store_true', help='exit 1 if any trial fails')
    simulate.set_defaults(handler=cmd_simulate)

    falsify = commands.add_parser('falsify', parents=[common], help='search random short codes')
    falsify.add_argument('--n', type=int, required=True, help=f'number of qubits, one of {sorted(FALSIFIABLE_LENGTHS)}')
    falsify.add_argument('--trials', type=int, default=10000)
    falsify.add_argument('--seed', type=int, required=True)
    falsify.set_defaults(handler=cmd_falsify)

    product = commands.add_parser('product-state', parents=[common], help='product state in a two-qubit span')
    product.add_argument('first', help='state file of b1')
    product.add_argument('second', help='state file of b2')
    product.set_defaults(handler=cmd_product_state)

    admissible = commands.add_parser('admissible', parents=[common], help='list admissible designed distances')
    admissible.add_argument('--n', type=int, required=True)
    admissible.add_argument('--b', type=int, default=1)
    admissible.set_defaults(handler=cmd_admissible)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    if args.log_level:
        logging.getLogger('qec_erasure').setLevel(args.log_level.upper())
    try:
        return args.handler(args)
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        logger.debug(f"{args.command} failed", exc_info=True)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
