# cli_modules/models_command.py
"""
Sous-commande `models`: modèles de la formule encodée dans un système logique.
"""
from arglogic.encoders import ENCODINGS, encode
from arglogic.logic import enumerate_models, grid_models, parse_logic_spec
from arglogic.utils.config_manager import get_verify_settings

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
    parser = subparsers.add_parser('models', help='Énumère les modèles de la formule encodée')
    add_input_argument(parser)
    parser.add_argument('--encoding', '-e', choices=ENCODINGS, default='normal', help='Encodage')
    parser.add_argument('--logic', '-l', default='pl3l',
                        help="pl2, pl3k, pl3l ou fuzzy:<négation>:<t-norme>")
    parser.add_argument('--grid', '-k', type=positive_int,
                        help='Résolution de grille pour les systèmes flous')
    add_common_arguments(parser)
    parser.set_defaults(handler=run)


def run(args) -> int:
    ls = parse_logic_spec(args.logic)
    limits = get_cli_limits(args)
    af = read_framework(args)
    formula = encode(af, args.encoding)

    data = {'encoding': args.encoding, 'logic': ls.name}
    if ls.is_finite:
        models = enumerate_models(formula, af, ls, limits)
    else:
        k = args.grid or get_verify_settings(get_config(args))['grid_resolution']
        models = grid_models(formula, af, ls, k, limits)
        data['grid'] = k

    data['count'] = len(models)
    data['models'] = [m.as_strings() for m in models]
    lines = [f"{ls.name}: {len(models)} modèle(s)"] + [str(m) for m in models]
    emit(args, data, lines)
    return EXIT_OK
