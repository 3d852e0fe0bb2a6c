"""
Command Line Interface
Subcommands mapping JSON files to engine operations
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

import yaml
from loguru import logger

from ..algebra import RationalMatrix, format_rational, is_unipotent, jordan_structure, parse_rational
from ..family import FamilyDescriptor, base_change, family_report, resolve
from ..hodge import (
    HodgeInput,
    arakelov_bound,
    arakelov_check,
    hodge_decomposed,
    hodge_numbers,
    parabolic_degree,
)
from ..monodromy import (
    MonodromyClass,
    MonodromyKind,
    classify,
    nilpotent_log,
    twist_ledger,
    twist_ledger_for,
    weight_filtration,
)
from ..table import audit_all, load_table
from ..utils.config_loader import default_config, load_config
from ..utils.errors import (
    ClassificationError,
    EngineError,
    InconsistentInput,
    MalformedInput,
    PreconditionFailed,
)
from ..utils.json_codec import (
    ARAKELOV_SCHEMA,
    HODGE_INPUT_SCHEMA,
    MATRIX_SCHEMA,
    PARABOLIC_SCHEMA,
    FAMILY_SCHEMA,
    dumps,
    load_json,
    parse_integer,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FLAGGED = 2

SCHEMA_HELP = """\
JSON inputs (rationals are strings "p/q" or integers):
  matrix   {"n": 4, "entries": [["1","1","0","0"], ...]}
  hodge    {"g": 0, "a": "0", "b": "0", "counts": {"I": 2, "II": 0, "III": 1, "IV": 1},
            "theta_nonzero": [true, true, true], "irreducible": true}
           decomposed inputs may add "numD" (default |II| + |IV|)
  family   {"weight": 3, "genus": 0, "a": "0", "b": "0", "decomposed": false,
            "theta_nonzero": [true, true, true],
            "points": [{"label": "0", "matrix": {...}, "ramified": true},
                       {"label": "1", "type": "I"}, ...]}
  arakelov {"k": 3, "g": 0, "numD": 3, "degree": 1, "ranks": [1,1,1,1], "kernel_ranks": [1,0,0,0]}
  parabolic {"deg": -1, "points": [[{"alpha": "1/2", "multiplicity": 2}]]}
Exit codes: 0 success, 1 malformed input or failed precondition, 2 table rows flagged.
See docs/QUICK_REFERENCE.md for the output documents."""


def _load_matrix(path: str, config: Dict) -> RationalMatrix:
    matrix = RationalMatrix.from_dict(load_json(path, MATRIX_SCHEMA, 'matrix'))
    max_rank = config['algebra']['max_rank']
    if matrix.size > max_rank:
        raise PreconditionFailed(f"Matrix of size {matrix.size} exceeds algebra.max_rank = {max_rank}")
    return matrix


def _load_family(path: str) -> FamilyDescriptor:
    return FamilyDescriptor.from_dict(load_json(path, FAMILY_SCHEMA, 'family descriptor'))


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise MalformedInput(f"Expected a comma-separated list of integers, got {text!r}")


def cmd_classify(args, config: Dict) -> Dict:
    """Classification verdict; rejections are reported as verdicts"""
    matrix = _load_matrix(args.matrix, config)
    bound = args.bound if args.bound is not None else config['algebra']['quasi_unipotency_bound']
    try:
        return classify(matrix, args.weight, bound).to_dict()
    except ClassificationError as e:
        logger.info(f"Monodromy rejected: {e}")
        return {'weight': args.weight, 'kind': None, 'rejection': e.to_dict()}


def cmd_filtration(args, config: Dict) -> Dict:
    matrix = _load_matrix(args.matrix, config)
    if matrix.is_nilpotent():
        nilpotent = matrix
    elif is_unipotent(matrix):
        logger.info("Input is unipotent; using N = log T")
        nilpotent = nilpotent_log(matrix)
    else:
        raise PreconditionFailed("Filtration needs a nilpotent N or a unipotent T")
    filtration = weight_filtration(nilpotent)
    payload = filtration.to_dict()
    payload['nilpotent'] = nilpotent.to_dict()
    payload['nilpotency_index'] = nilpotent.nilpotency_index()
    unipotent = nilpotent + RationalMatrix.identity(nilpotent.size)
    payload['jordan_blocks'] = sorted((b.size for b in jordan_structure(unipotent)), reverse=True)
    return payload


def cmd_ledger(args, config: Dict) -> Dict:
    if args.matrix:
        verdict = classify(_load_matrix(args.matrix, config), args.weight,
                           config['algebra']['quasi_unipotency_bound'])
        return twist_ledger(verdict).to_dict()
    if not args.type:
        raise MalformedInput("ledger needs --type or --matrix")
    kind = MonodromyKind.parse(args.type)
    MonodromyClass.from_declared(args.weight, kind)
    return twist_ledger_for(args.weight, kind).to_dict()


def cmd_hodge(args, config: Dict) -> Dict:
    payload = load_json(args.input, HODGE_INPUT_SCHEMA, 'Hodge input')
    if args.decomposed:
        if args.weight != 3:
            raise PreconditionFailed("Decomposed Higgs bundles exist only in weight 3")
        if payload.get('b') is None:
            raise PreconditionFailed("Decomposed input needs b = deg E^(2,1)")
        counts = payload['counts']
        if counts.get('I', 0) or counts.get('III', 0):
            raise InconsistentInput(f"Decomposed bundles have |I| = |III| = 0, got {counts}")
        n_ii, n_iv = counts.get('II', 0), counts.get('IV', 0)
        return hodge_decomposed(payload['g'], parse_integer(payload['a'], 'a'),
                                parse_integer(payload['b'], 'b'), n_ii, n_iv,
                                payload.get('numD', n_ii + n_iv)).to_dict()
    return hodge_numbers(HodgeInput.from_dict(payload, args.weight)).to_dict()


def cmd_hodge_family(args, config: Dict) -> Dict:
    family = _load_family(args.family)
    return family_report(family, config['algebra']['quasi_unipotency_bound'])


def cmd_base_change(args, config: Dict) -> Dict:
    family = base_change(_load_family(args.family), args.e)
    if args.a is not None or args.b is not None:
        family = family.with_degrees(args.a, args.b)
    payload = family.to_dict()
    payload['resolved'] = resolve(family, config['algebra']['quasi_unipotency_bound']).to_dict()
    return payload


def cmd_arakelov(args, config: Dict) -> Dict:
    if args.input:
        doc = load_json(args.input, ARAKELOV_SCHEMA, 'Arakelov input')
        k, g, num_points = doc['k'], doc['g'], doc['numD']
        ranks, kernels, degree = doc['ranks'], doc['kernel_ranks'], doc.get('degree')
    else:
        if args.k is None or args.ranks is None:
            raise MalformedInput("arakelov needs --input or --k/--ranks")
        k, g, num_points = args.k, args.g, args.num_points
        ranks = _int_list(args.ranks)
        kernels = _int_list(args.kernels) if args.kernels else [0] * len(ranks)
        degree = args.degree
    if degree is None:
        bound = arakelov_bound(k, g, num_points, ranks, kernels)
        return {'bound': format_rational(bound)}
    return arakelov_check(degree, k, g, num_points, ranks, kernels).to_dict()


def cmd_parabolic_degree(args, config: Dict) -> Dict:
    doc = load_json(args.input, PARABOLIC_SCHEMA, 'parabolic input')
    residues = [[(parse_rational(entry['alpha']), entry['multiplicity']) for entry in point]
                for point in doc['points']]
    return {'parabolic_degree': format_rational(parabolic_degree(doc['deg'], residues))}


def cmd_table_check(args, config: Dict):
    table_config = config['table']
    path = args.file or table_config['path']
    kmax = args.kmax if args.kmax is not None else table_config['kmax']
    workers = args.workers if args.workers is not None else table_config.get('workers', 1)
    if workers < 1:
        raise PreconditionFailed(f"Workers must be at least 1, got {workers}")
    report = audit_all(load_table(path, kmax), workers=workers)
    code = EXIT_FLAGGED if report.flagged_count else EXIT_OK
    return report, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hodge-engine',
        description='Exact Hodge numbers of local systems over punctured curves',
        epilog=SCHEMA_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--config', type=str, default='config/config.yaml',
                        help='Path to configuration file')
    parser.add_argument('--format', choices=['json', 'text'], default=None,
                        help='Output format (default from configuration)')
    parser.add_argument('--debug', action='store_true', help='Verbose logging')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', help='Classify a local monodromy matrix')
    p.add_argument('--weight', type=int, required=True, choices=[1, 2, 3])
    p.add_argument('--matrix', type=str, required=True, help='Matrix JSON file')
    p.add_argument('--bound', type=int, default=None, help='Quasi-unipotency bound')
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser('filtration', help='Weight filtration of a nilpotent N (or of log T)')
    p.add_argument('--matrix', type=str, required=True, help='Matrix JSON file')
    p.set_defaults(handler=cmd_filtration)

    p = sub.add_parser('ledger', help='L2 twist ledger of a type or matrix')
    p.add_argument('--weight', type=int, required=True, choices=[1, 2, 3])
    p.add_argument('--type', type=str, default=None, help='Type tag: trivial, I, II, III, IV')
    p.add_argument('--matrix', type=str, default=None, help='Matrix JSON file')
    p.set_defaults(handler=cmd_ledger)

    p = sub.add_parser('hodge', help='Closed-form Hodge numbers')
    p.add_argument('--weight', type=int, required=True, choices=[1, 2, 3])
    p.add_argument('--input', type=str, required=True, help='Hodge input JSON file')
    p.add_argument('--decomposed', action='store_true', help='Use the decomposed formula')
    p.set_defaults(handler=cmd_hodge)

    p = sub.add_parser('hodge-family', help='Resolve a family and compare formula with ledger')
    p.add_argument('--family', type=str, required=True, help='Family JSON file')
    p.set_defaults(handler=cmd_hodge_family)

    p = sub.add_parser('base-change', help='Pull a genus-0 family back along z -> z^e')
    p.add_argument('--family', type=str, required=True, help='Family JSON file')
    p.add_argument('--e', type=int, required=True, help='Cover degree')
    p.add_argument('--a', type=int, default=None, help='Degree a of the new family')
    p.add_argument('--b', type=int, default=None, help='Degree b of the new family')
    p.set_defaults(handler=cmd_base_change)

    p = sub.add_parser('table-check', help='Audit the Calabi-Yau table')
    p.add_argument('--file', type=str, default=None, help='Table JSON file')
    p.add_argument('--kmax', type=int, default=None, help='Largest k for symbolic rows')
    p.add_argument('--workers', type=int, default=None, help='Threads for the audit')
    p.set_defaults(handler=cmd_table_check)

    p = sub.add_parser('arakelov', help='Arakelov bound on deg E^(k,0)')
    p.add_argument('--input', type=str, default=None, help='Arakelov input JSON file')
    p.add_argument('--k', type=int, default=None)
    p.add_argument('--g', type=int, default=0)
    p.add_argument('--numD', dest='num_points', type=int, default=3)
    p.add_argument('--ranks', type=str, default=None, help='h^(p,k-p) for p = 0..k, comma separated')
    p.add_argument('--kernels', type=str, default=None, help='Kernel ranks, comma separated')
    p.add_argument('--degree', type=int, default=None, help='Degree to check against the bound')
    p.set_defaults(handler=cmd_arakelov)

    p = sub.add_parser('parabolic-degree', help='Parabolic degree from residue data')
    p.add_argument('--input', type=str, required=True, help='Parabolic input JSON file')
    p.set_defaults(handler=cmd_parabolic_degree)

    return parser


def _render_text(payload) -> str:
    if hasattr(payload, 'to_text'):
        return payload.to_text()
    return yaml.safe_dump(payload, sort_keys=False, default_flow_style=False).rstrip()


def _render_json(payload) -> str:
    if hasattr(payload, 'to_dict'):
        payload = payload.to_dict()
    return dumps(payload)


def _resolve_config(path: str) -> Dict:
    if Path(path).exists():
        return load_config(path)
    logger.debug(f"No configuration at {path}; using defaults")
    return default_config()


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    """
    Parse arguments, dispatch to the subcommand and write its output

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stdout: Stream for results (default sys.stdout)
        stderr: Stream for structured errors (default sys.stderr)

    Returns:
        Exit code: 0 success, 1 error, 2 flagged table rows
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR

    handler: Callable = args.handler
    try:
        config = _resolve_config(args.config)
        result = handler(args, config)
    except EngineError as e:
        logger.error(f"{args.command} failed: {e}")
        print(dumps(e.to_dict()), file=stderr)
        return EXIT_ERROR
    except (ValueError, yaml.YAMLError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(dumps(MalformedInput(str(e)).to_dict()), file=stderr)
        return EXIT_ERROR

    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    output_format = args.format or config.get('output', {}).get('format', 'json')
    rendered = _render_text(result) if output_format == 'text' else _render_json(result)
    print(rendered, file=stdout)
    return code
