# cli_modules/semantics_command.py
"""
Sous-commande `semantics`: étiquetages et extensions d'une sémantique de Dung.
"""
from arglogic.formatters import AssignmentFormatter
from arglogic.semantics import SemanticsName, dung_labellings

from .common import EXIT_OK, add_common_arguments, add_input_argument, get_cli_limits, read_framework, emit


def register(subparsers):
    parser = subparsers.add_parser('semantics', help="Calcule les étiquetages d'une sémantique")
    add_input_argument(parser)
    parser.add_argument('--semantics', '-s', default='complete',
                        choices=[s.value for s in SemanticsName], help='Sémantique à calculer')
    add_common_arguments(parser)
    parser.set_defaults(handler=run)


def run(args) -> int:
    semantics = SemanticsName.parse(args.semantics)
    limits = get_cli_limits(args)
    af = read_framework(args)
    labellings = dung_labellings(af, semantics, limits)

    # Aucune extension n'est pas une erreur
    data = {'semantics': semantics.value, 'count': len(labellings)}
    data.update(AssignmentFormatter.labellings_to_json(labellings))
    lines = [f"{semantics.value}: {len(labellings)} étiquetage(s)"]
    lines += AssignmentFormatter.labellings_to_text(labellings)
    emit(args, data, lines)
    return EXIT_OK
