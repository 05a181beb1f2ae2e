# cli_modules/verify_command.py
"""
Sous-commande `verify`: vérification des théorèmes sur un framework, les
fixtures ou un corpus aléatoire.
"""
import logging

from arglogic.exceptions import ValidationError
from arglogic.formatters import ReportFormatter
from arglogic.logic import get_tnorm, parse_negation
from arglogic.verify import (
    TheoremId,
    VerificationParams,
    verify_corpus,
    verify_fixtures,
    verify_frameworks,
)

from .common import (
    EXIT_COUNTEREXAMPLE,
    EXIT_OK,
    add_common_arguments,
    add_input_argument,
    emit,
    get_cli_limits,
    get_config,
    positive_int,
    read_framework,
)

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('verify', help='Vérifie les théorèmes de correspondance')
    add_input_argument(parser, optional=True)
    parser.add_argument('--theorem', '-t', action='append', default=[],
                        help='Théorème à vérifier (répétable), ex. ec2-l-counterexample')
    parser.add_argument('--all', action='store_true', help='Vérifie tous les théorèmes')
    source = parser.add_mutually_exclusive_group()
    source.add_argument('--fixtures', action='store_true', help='Utilise les frameworks de référence')
    source.add_argument('--corpus', action='store_true', help='Utilise un corpus aléatoire')
    parser.add_argument('--seed', type=int, help='Graine du corpus')
    parser.add_argument('--count', type=int, default=200, help='Taille du corpus')
    parser.add_argument('--nmax', type=positive_int, default=8, help="Nombre maximal d'arguments du corpus")
    parser.add_argument('--p', type=float, action='append', dest='p_list',
                        help="Probabilité d'attaque (répétable)")
    parser.add_argument('--grid', '-k', type=positive_int, help='Résolution de grille demandée')
    parser.add_argument('--zdf-tnorm', default='goedel', help='T-norme sans diviseur de zéro')
    parser.add_argument('--idem-tnorm', default='goedel', help='T-norme 1/2-idempotente')
    parser.add_argument('--negation', default='standard', help='Négation des systèmes encodés')
    add_common_arguments(parser)
    parser.set_defaults(handler=run)


def _selected_theorems(args):
    if args.all:
        return TheoremId.all()
    return [TheoremId.parse(name) for name in args.theorem]


def run(args) -> int:
    ids = _selected_theorems(args)
    if not ids:
        raise ValidationError("Aucun théorème sélectionné: utiliser --theorem ou --all")
    if args.count < 0:
        raise ValidationError(f"--count invalide: {args.count}")
    if any(not 0 <= p <= 1 for p in args.p_list or []):
        raise ValidationError(f"--p hors de [0, 1]: {args.p_list}")

    config = get_config(args)
    params = VerificationParams.from_config(
        config,
        limits=get_cli_limits(args),
        grid_resolution=args.grid,
        seed=args.seed,
        zdf_tnorm=get_tnorm(args.zdf_tnorm),
        idem_tnorm=get_tnorm(args.idem_tnorm),
        negation=parse_negation(args.negation),
    )

    if args.corpus:
        p_list = args.p_list or [0.1, 0.25, 0.5]
        reports = verify_corpus(ids, params.seed, args.count, args.nmax, p_list, params)
    elif args.fixtures or not args.input:
        reports = verify_fixtures(ids, params)
    else:
        reports = verify_frameworks(ids, [read_framework(args)], params)

    emit(args, ReportFormatter.to_json(reports), [ReportFormatter.to_text(reports)])
    return EXIT_OK if all(report.passed for report in reports) else EXIT_COUNTEREXAMPLE
