import argparse
import json
import sys
from typing import List, Union

from pkmekit.configuration import default_ame_subset_budget, default_num_processes, default_tolerance
from pkmekit.constructors.family_registry import FAMILY_BUILDERS, construct_family
from pkmekit.constructors.four_qubit_family import FAMILY_CASES
from pkmekit.gates.pipeline import apply_pipeline
from pkmekit.stateio.pipeline_files import read_pipeline
from pkmekit.stateio.report_export import classification_to_dict, format_classification, format_report, \
    report_to_dict, write_report
from pkmekit.stateio.state_files import read_state, write_state
from pkmekit.structures.planar_structure import enumerate_structures
from pkmekit.structures.structure_spec import StructureSpec, four_partite_spec
from pkmekit.tensor_core.unitary import RngState
from pkmekit.utilities.exceptions import PKMEError
from pkmekit.utilities.run_logger import RunLogger
from pkmekit.verification.verifier import classify, verify_ame, verify_pkme, verify_pme

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_FAIL = 2


class CLIUsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would collide with "verification failed"
    def error(self, message):
        raise CLIUsageError(message)


def _print_json(obj):
    print(json.dumps(obj, indent=2))


def _spec_from_args(args, n: int, required: bool) -> Union[StructureSpec, None]:
    if args.k is not None:
        return four_partite_spec(n, args.k)
    if args.a_sizes is not None or args.b_sizes is not None:
        if args.a_sizes is None or args.b_sizes is None:
            raise CLIUsageError('--a-sizes and --b-sizes must be given together')
        return StructureSpec(n, tuple(args.a_sizes), tuple(args.b_sizes))
    if required:
        raise CLIUsageError('a structure spec is required: pass --k K or --a-sizes .. --b-sizes ..')
    return None


def _construct(args, logger: RunLogger) -> int:
    rng = None if args.seed is None else RngState(args.seed)
    state = construct_family(args.family, k=args.k, d=args.d, m=args.m, n=args.n, case=args.case, rng=rng)
    write_state(state, args.output)
    logger.log(f'wrote {args.family} state (n={state.n}, d={state.d}) to {args.output}')
    return EXIT_PASS


def _verify(args, logger: RunLogger) -> int:
    state = read_state(args.file)
    logger.log(f'loaded {args.file}: n={state.n}, d={state.d}')
    show_progress_bar = not args.no_pbar
    if args.mode == 'pkme':
        spec = _spec_from_args(args, state.n, required=True)
        report = verify_pkme(state, spec, args.tol, num_processes=args.np, show_progress_bar=show_progress_bar)
    else:
        if args.k is not None or args.a_sizes is not None or args.b_sizes is not None:
            raise CLIUsageError(f'--k, --a-sizes and --b-sizes only apply to --mode pkme, not {args.mode}')
        if args.mode == 'pme':
            report = verify_pme(state, args.tol, num_processes=args.np, show_progress_bar=show_progress_bar)
        else:
            report = verify_ame(state, args.tol, subset_budget=args.budget, num_processes=args.np,
                                show_progress_bar=show_progress_bar)
    if args.format == 'json':
        _print_json(report_to_dict(report))
    else:
        print(format_report(report))
    if args.report_file is not None:
        write_report(report, args.report_file)
    logger.log(f'{args.mode} verdict {report.verdict}, max deviation {report.max_deviation:.3e}')
    return EXIT_PASS if report.verdict else EXIT_FAIL


def _classify(args, logger: RunLogger) -> int:
    state = read_state(args.file)
    general_spec = _spec_from_args(args, state.n, required=False)
    result = classify(state, args.tol, general_spec=general_spec, subset_budget=args.budget,
                      num_processes=args.np, show_progress_bar=not args.no_pbar)
    if args.format == 'json':
        _print_json(classification_to_dict(result))
    else:
        print(format_classification(result))
    return EXIT_PASS


def _structures(args, logger: RunLogger) -> int:
    spec = _spec_from_args(args, args.n, required=True)
    structures = enumerate_structures(spec)
    for s in structures:
        print(s)
    logger.log(f'{len(structures)} structures for {spec}')
    return EXIT_PASS


def _apply(args, logger: RunLogger) -> int:
    pipeline = read_pipeline(args.pipeline)
    state = read_state(args.input)
    out = apply_pipeline(state, pipeline)
    write_state(out, args.output)
    logger.log(f'applied {pipeline} to {args.input}, wrote {args.output}')
    return EXIT_PASS


def _add_logging_args(parser):
    parser.add_argument('--verbose', action='store_true', required=False,
                        help='[OPTIONAL] Print timestamped progress messages to stderr.')
    parser.add_argument('--log_file', type=str, required=False, default=None,
                        help='[OPTIONAL] Append timestamped progress messages to this file.')


def _add_spec_args(parser):
    parser.add_argument('--k', type=int, required=False, default=None,
                        help='[OPTIONAL] Four-partite spec: one part of each region has k adjacent particles.')
    parser.add_argument('--a-sizes', dest='a_sizes', type=int, nargs='+', required=False, default=None,
                        help='[OPTIONAL] General spec: part sizes of region A. Needs --b-sizes.')
    parser.add_argument('--b-sizes', dest='b_sizes', type=int, nargs='+', required=False, default=None,
                        help='[OPTIONAL] General spec: part sizes of region B. Needs --a-sizes.')


def _add_verification_args(parser):
    parser.add_argument('--tol', type=float, required=False, default=default_tolerance,
                        help=f'[OPTIONAL] Frobenius tolerance on ||rho - I/d^k||. Default: {default_tolerance}')
    parser.add_argument('--budget', type=int, required=False, default=default_ame_subset_budget,
                        help=f'[OPTIONAL] Maximum number of AME subsets. Default: {default_ame_subset_budget}')
    parser.add_argument('--format', type=str, choices=('text', 'json'), required=False, default='text',
                        help='[OPTIONAL] Output format of the report. Default: text')
    parser.add_argument('-np', type=int, required=False, default=default_num_processes,
                        help=f'[OPTIONAL] Number of processes used for the checks. Default: {default_num_processes}')
    parser.add_argument('--no_pbar', action='store_true', required=False,
                        help='[OPTIONAL] Disable the progress bar.')


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='pkme', description='Construct, transform and verify planar two-region maximally '
                                                      'entangled states.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('construct', help='Build a named state and write it to a state file.')
    p.add_argument('--family', type=str, required=True, choices=sorted(FAMILY_BUILDERS.keys()),
                   help='Name of the state family.')
    p.add_argument('--k', type=int, required=False, default=None, help='[OPTIONAL] Block size k.')
    p.add_argument('--d', type=int, required=False, default=None, help='[OPTIONAL] Local dimension. Default: 2')
    p.add_argument('--m', type=int, required=False, default=None, help='[OPTIONAL] Parts per region m.')
    p.add_argument('--n', type=int, required=False, default=None,
                   help='[OPTIONAL] Particle count for ghz, product and random.')
    p.add_argument('--case', type=str, required=False, default=None, choices=FAMILY_CASES,
                   help='[OPTIONAL] Case of the four-qubit family (family4).')
    p.add_argument('--seed', type=int, required=False, default=None,
                   help='[OPTIONAL] Seed for families that draw random unitaries or amplitudes. Required by those.')
    p.add_argument('-o', '--output', type=str, required=True, help='Output state file.')
    _add_logging_args(p)
    p.set_defaults(func=_construct)

    p = subparsers.add_parser('verify', help='Check one of PKME / PME / AME. Exit code 0 on pass, 2 on fail.')
    p.add_argument('--mode', type=str, required=True, choices=('pkme', 'pme', 'ame'), help='What to verify.')
    _add_spec_args(p)
    _add_verification_args(p)
    p.add_argument('--report_file', type=str, required=False, default=None,
                   help='[OPTIONAL] Also write the report as JSON to this file.')
    p.add_argument('file', type=str, help='State file.')
    _add_logging_args(p)
    p.set_defaults(func=_verify)

    p = subparsers.add_parser('classify', help='Print AME, PME and per-k PKME verdicts.')
    _add_spec_args(p)
    _add_verification_args(p)
    p.add_argument('file', type=str, help='State file.')
    _add_logging_args(p)
    p.set_defaults(func=_classify)

    p = subparsers.add_parser('structures', help='List all planar structures of a spec, one per line.')
    p.add_argument('--n', type=int, required=True, help='Particle count.')
    _add_spec_args(p)
    _add_logging_args(p)
    p.set_defaults(func=_structures)

    p = subparsers.add_parser('apply', help='Apply a pipeline file to a state file.')
    p.add_argument('--pipeline', type=str, required=True, help='Pipeline file.')
    p.add_argument('-i', '--input', type=str, required=True, help='Input state file.')
    p.add_argument('-o', '--output', type=str, required=True, help='Output state file.')
    _add_logging_args(p)
    p.set_defaults(func=_apply)
    return parser


def cli_main(argv: Union[List[str], None] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except CLIUsageError as e:
        print(f'usage error: {e}', file=sys.stderr)
        return EXIT_ERROR
    except SystemExit as e:
        # --help
        return EXIT_PASS if e.code in (0, None) else EXIT_ERROR

    try:
        logger = RunLogger(args.verbose, args.log_file)
        return args.func(args, logger)
    except CLIUsageError as e:
        print(f'usage error: {e}', file=sys.stderr)
        return EXIT_ERROR
    except (PKMEError, OSError) as e:
        print(f'error: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_ERROR


def cli_entry():
    sys.exit(cli_main())


def construct_entry():
    sys.exit(cli_main(['construct'] + sys.argv[1:]))


def verify_entry():
    sys.exit(cli_main(['verify'] + sys.argv[1:]))


def classify_entry():
    sys.exit(cli_main(['classify'] + sys.argv[1:]))


def structures_entry():
    sys.exit(cli_main(['structures'] + sys.argv[1:]))


def apply_entry():
    sys.exit(cli_main(['apply'] + sys.argv[1:]))


if __name__ == '__main__':
    cli_entry()
