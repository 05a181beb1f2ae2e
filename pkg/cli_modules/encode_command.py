# cli_modules/encode_command.py
"""
Sous-commande `encode`: encodage normal ou régulier d'un framework.
"""
from arglogic.encoders import ENCODINGS, encode
from arglogic.formatters import render_json, render_text
from arglogic.models.formula import formula_size

from .common import EXIT_OK, add_common_arguments, add_input_argument, read_framework, emit


def register(subparsers):
    parser = subparsers.add_parser('encode', help='Encode un framework en formule propositionnelle')
    add_input_argument(parser)
    parser.add_argument('--encoding', '-e', choices=ENCODINGS, default='normal', help='Encodage')
    add_common_arguments(parser)
    parser.set_defaults(handler=run)


def run(args) -> int:
    af = read_framework(args)
    formula = encode(af, args.encoding)
    text = render_text(formula)
    data = {
        'encoding': args.encoding,
        'text': text,
        'size': formula_size(formula),
        'formula': render_json(formula),
    }
    emit(args, data, [text])
    return EXIT_OK
