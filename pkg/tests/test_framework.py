# tests/test_framework.py
import io

import networkx as nx
import pytest

from arglogic.converters import (
    FrameworkConverter,
    framework_from_dict,
    framework_to_dict,
    load_framework,
    serialize_apx,
    serialize_tgf,
)
from arglogic.exceptions import FrameworkSyntaxError, ParsingError, UndeclaredArgumentError, ValidationError
from arglogic.generator import random_af
from arglogic.models.framework import ArgumentationFramework, empty_framework
from arglogic.parsers import parse_apx, parse_tgf


class TestArgumentationFramework:

    def test_canonical_order_is_declaration_order(self):
        af = ArgumentationFramework.from_names(['z', 'a', 'm'], [('a', 'z')])
        assert af.names == ('z', 'a', 'm')
        assert [a.index for a in af] == [0, 1, 2]

    def test_attackers_are_canonically_ordered(self):
        af = ArgumentationFramework.from_names(['c', 'b', 'a'], [('a', 'c'), ('b', 'c'), ('c', 'c')])
        assert af.attacker_names('c') == ('c', 'b', 'a')
        assert af.is_unattacked('a')
        assert not af.is_unattacked('c')

    def test_duplicate_attacks_are_merged(self):
        af = ArgumentationFramework.from_names(['a', 'b'], [('a', 'b'), ('a', 'b')])
        assert len(af.attacks) == 1

    def test_undeclared_endpoint(self):
        with pytest.raises(UndeclaredArgumentError) as info:
            ArgumentationFramework.from_names(['a'], [('a', 'b')])
        assert info.value.name == 'b'

    def test_duplicate_or_invalid_names(self):
        with pytest.raises(ValidationError):
            ArgumentationFramework.from_names(['a', 'a'])
        with pytest.raises(ValidationError):
            ArgumentationFramework.from_names(['a-b'])

    def test_unknown_argument_lookup(self, mutual):
        with pytest.raises(UndeclaredArgumentError):
            mutual.attackers_of('zz')

    def test_empty_framework(self):
        af = empty_framework()
        assert len(af) == 0
        assert str(af) == 'AF({}, {})'

    def test_networkx_bridge(self, mutual):
        graph = mutual.to_networkx()
        assert isinstance(graph, nx.DiGraph)
        assert set(graph.edges) == {('a', 'b'), ('b', 'a')}
        graph.add_node('c')
        assert 'c' not in mutual
        assert ArgumentationFramework.from_networkx(graph).names == ('a', 'b', 'c')

    def test_graph_is_frozen(self, mutual):
        with pytest.raises(nx.NetworkXError):
            mutual.graph.add_edge('a', 'a')


class TestApxParser:

    def test_comments_and_whitespace(self):
        af = parse_apx("% mutual\narg(a). arg( b ).\natt(a,b).  att(b , a). % fin\n")
        assert af.names == ('a', 'b')
        assert af.attack_names() == (('a', 'b'), ('b', 'a'))

    def test_empty_text(self):
        assert len(parse_apx("  % rien\n")) == 0

    def test_syntax_error_position(self):
        with pytest.raises(FrameworkSyntaxError) as info:
            parse_apx("arg(a).\n  arg(b\n")
        assert info.value.line == 2
        assert info.value.col == 3

    def test_attack_before_declaration(self):
        with pytest.raises(UndeclaredArgumentError):
            parse_apx("att(a,b). arg(a). arg(b).")

    def test_arity_errors(self):
        with pytest.raises(FrameworkSyntaxError):
            parse_apx("arg(a,b).")
        with pytest.raises(FrameworkSyntaxError):
            parse_apx("arg(a). att(a).")

    def test_repeated_declaration_keeps_first_position(self):
        assert parse_apx("arg(b). arg(a). arg(b).").names == ('b', 'a')


class TestTgfParser:

    def test_nodes_and_edges(self):
        af = parse_tgf("a label\nb\n#\na b\nb a\n")
        assert af.names == ('a', 'b')
        assert af.attack_names() == (('a', 'b'), ('b', 'a'))

    def test_undeclared_node(self):
        with pytest.raises(UndeclaredArgumentError):
            parse_tgf("a\n#\na b\n")

    def test_malformed_edge(self):
        with pytest.raises(FrameworkSyntaxError) as info:
            parse_tgf("a\n#\na\n")
        assert info.value.line == 3

    def test_repeated_separator(self):
        with pytest.raises(FrameworkSyntaxError):
            parse_tgf("a\n#\n#\n")


class TestConverters:

    def test_apx_round_trip(self, mutual):
        text = serialize_apx(mutual)
        assert text == "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n"
        assert parse_apx(text) == mutual

    def test_tgf_round_trip(self, chain):
        text = serialize_tgf(chain)
        assert text == "a\nb\n#\na b\n"
        assert parse_tgf(text) == chain

    def test_dict_form(self, chain):
        data = framework_to_dict(chain)
        assert data == {'arguments': ['a', 'b'], 'attacks': [['a', 'b']]}
        assert framework_from_dict(data) == chain

    def test_dict_validation(self):
        with pytest.raises(ParsingError):
            framework_from_dict(['a'])
        with pytest.raises(UndeclaredArgumentError):
            framework_from_dict({'arguments': ['a'], 'attacks': [['a', 'b']]})

    def test_format_detection(self):
        assert FrameworkConverter.detect_format('x.tgf') == 'tgf'
        assert FrameworkConverter.detect_format('x.txt') == 'apx'
        assert FrameworkConverter.detect_format('x.tgf', 'apx') == 'apx'

    def test_load_from_file_and_stdin(self, tmp_path, mutual):
        path = tmp_path / 'af.tgf'
        path.write_text(serialize_tgf(mutual), encoding='utf-8')
        assert load_framework(str(path)) == mutual
        assert load_framework('-', 'apx', stdin=io.StringIO(serialize_apx(mutual))) == mutual

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(ParsingError):
            load_framework(str(tmp_path / 'absent.apx'))

    def test_load_non_utf8(self, tmp_path):
        path = tmp_path / 'bad.apx'
        path.write_bytes(b"arg(a).\n\xff")
        with pytest.raises(ParsingError, match='octet 8'):
            load_framework(str(path))
        with pytest.raises(ParsingError, match='octet 0'):
            load_framework('-', stdin=io.TextIOWrapper(io.BytesIO(b"\xff"), encoding='utf-8'))


class TestGenerator:

    def test_deterministic(self):
        assert random_af(6, 0.3, 42) == random_af(6, 0.3, 42)

    def test_extreme_probabilities(self):
        assert len(random_af(4, 0.0, 1).attacks) == 0
        assert len(random_af(4, 1.0, 1).attacks) == 16

    def test_names(self):
        assert random_af(3, 0.5, 0).names == ('a0', 'a1', 'a2')

    def test_invalid_parameters(self):
        with pytest.raises(ValidationError):
            random_af(-1, 0.5, 0)
        with pytest.raises(ValidationError):
            random_af(2, 1.5, 0)
