# tests/test_encoders.py
import pytest

from arglogic.encoders import encode, encode_normal, encode_regular
from arglogic.exceptions import ValidationError
from arglogic.formatters import render_json, render_text
from arglogic.models.formula import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Iff,
    Not,
    atoms_of,
    conj,
    disj,
    formula_size,
)
from arglogic.models.framework import empty_framework


class TestFormula:

    def test_normalized_constructors(self):
        assert conj([]) == TOP
        assert disj([]) == BOTTOM
        assert conj([Atom('a')]) == Atom('a')
        assert isinstance(conj([Atom('a'), Atom('b')]), And)

    def test_empty_connectives_rejected(self):
        with pytest.raises(ValueError):
            And(())

    def test_atoms_and_size(self):
        f = Iff(Atom('a'), Not(Atom('b')))
        assert atoms_of(f) == {'a', 'b'}
        assert formula_size(f) == 4


class TestEncoders:

    def test_unattacked_normal(self, single):
        assert render_text(encode_normal(single)) == '(a <-> T)'

    def test_mutual_normal(self, mutual):
        assert render_text(encode_normal(mutual)) == '((a <-> (~b)) & (b <-> (~a)))'

    def test_chain_regular_has_empty_defence(self, chain):
        text = render_text(encode_regular(chain))
        assert '(b <-> F)' in text
        assert '(a <-> T)' in text

    def test_self_attacker_regular(self, self_attacker):
        assert render_text(encode_regular(self_attacker)) == '((a -> (~a)) & (a <-> a))'

    def test_atoms_are_arguments(self, three_cycle):
        for encoding in ('normal', 'regular'):
            assert atoms_of(encode(three_cycle, encoding)) == set(three_cycle.names)

    def test_empty_framework(self):
        assert encode_normal(empty_framework()) == TOP
        assert encode_regular(empty_framework()) == TOP

    def test_unknown_encoding(self, mutual):
        with pytest.raises(ValidationError):
            encode(mutual, 'abnormal')


class TestFormulaFormatter:

    def test_json_rendering(self, mutual):
        data = render_json(encode_normal(mutual))
        assert data['op'] == 'and'
        first = data['args'][0]
        assert first == {
            'op': 'iff',
            'args': [{'op': 'atom', 'name': 'a'}, {'op': 'not', 'args': [{'op': 'atom', 'name': 'b'}]}],
        }

    def test_constants(self):
        assert render_json(TOP) == {'op': 'top'}
        assert render_text(BOTTOM) == 'F'
