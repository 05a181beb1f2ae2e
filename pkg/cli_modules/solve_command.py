# cli_modules/solve_command.py
"""
Sous-commande `solve`: solutions d'un système équationnel, sur grille ou par itération.
"""
from arglogic.equational import grid_solutions, iterate, parse_system_spec
from arglogic.exceptions import ValidationError
from arglogic.formatters import AssignmentFormatter
from arglogic.logic import Assignment, parse_truth_value
from arglogic.utils.config_manager import get_iteration_settings, get_verify_settings

from .common import (
    EXIT_OK,
    add_common_arguments,
    add_input_argument,
    emit,
    get_cli_limits,
    get_config,
    positive_int,
    read_framework,
)


def register(subparsers):
    parser = subparsers.add_parser('solve', help='Résout un système équationnel')
    add_input_argument(parser)
    parser.add_argument('--system', default='max',
                        help="encoded:<négation>:<t-norme>, max, inverse, luka ou geometrical")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument('--grid', '-k', type=positive_int, help='Recherche exhaustive sur la grille de résolution K')
    mode.add_argument('--iterate', action='store_true', help='Itération de Jacobi')
    parser.add_argument('--start', help="Valeurs initiales 'x,y,...' dans l'ordre des arguments (0 par défaut)")
    parser.add_argument('--max-iters', type=int, help="Nombre maximal d'itérations")
    parser.add_argument('--float', dest='float_mode', action='store_true', help='Itération en flottants')
    parser.add_argument('--tol', type=float, help='Tolérance du mode flottant')
    add_common_arguments(parser)
    parser.set_defaults(handler=run)


def _start_assignment(args, af) -> Assignment:
    if not args.start:
        return Assignment.constant(af, parse_truth_value(0))
    values = [item for item in args.start.split(',') if item.strip()]
    if len(values) != len(af):
        raise ValidationError(f"--start attend {len(af)} valeur(s), reçu {len(values)}")
    return Assignment.of(af, values)


def run(args) -> int:
    sys = parse_system_spec(args.system)
    if args.max_iters is not None and args.max_iters < 0:
        raise ValidationError(f"--max-iters invalide: {args.max_iters}")
    limits = get_cli_limits(args)
    af = read_framework(args)

    if args.iterate:
        start = _start_assignment(args, af)
        max_iters, tol = get_iteration_settings(get_config(args))
        outcome = iterate(
            sys, af, start,
            max_iters=args.max_iters if args.max_iters is not None else max_iters,
            mode='float' if args.float_mode else 'exact',
            tol=args.tol if args.tol is not None else tol,
        )
        data = {'system': sys.name, 'mode': 'float' if args.float_mode else 'exact'}
        data.update(AssignmentFormatter.outcome_to_json(outcome))
        emit(args, data, [AssignmentFormatter.outcome_to_text(outcome)])
        return EXIT_OK

    k = args.grid or get_verify_settings(get_config(args))['grid_resolution']
    solutions = grid_solutions(sys, af, k, limits)
    data = {
        'system': sys.name,
        'grid': k,
        'count': len(solutions),
        'solutions': [s.as_strings() for s in solutions],
    }
    lines = [f"{sys.name}, k={k}: {len(solutions)} solution(s) sur la grille"] + [str(s) for s in solutions]
    emit(args, data, lines)
    return EXIT_OK
