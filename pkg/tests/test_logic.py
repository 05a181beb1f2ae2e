# tests/test_logic.py
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arglogic.exceptions import (
    DomainViolationError,
    InvalidNegationError,
    InvalidTNormError,
    NonLeftContinuousError,
    ResourceLimitError,
    UnsupportedConfigurationError,
    ValidationError,
)
from arglogic.encoders import encode_normal, encode_regular
from arglogic.logic import (
    GOEDEL,
    HALF,
    LUKASIEWICZ,
    ONE,
    PRODUCT,
    STANDARD_NEGATION,
    TERNARY_VALUES,
    ZERO,
    Assignment,
    LogicSystem,
    TableNegation,
    UserTNorm,
    enumerate_models,
    evaluate,
    get_tnorm,
    grid_models,
    grid_values,
    is_model,
    parse_logic_spec,
    parse_negation,
    parse_truth_value,
    residuum,
)
from arglogic.generator import random_af
from arglogic.models.formula import Atom, Implies, Not
from arglogic.utils.config_manager import Limits

F = Fraction
GRID_10 = grid_values(10)
grid_points = st.sampled_from(GRID_10)
unit_fractions = st.fractions(min_value=0, max_value=1, max_denominator=50)


class TestTruthValues:

    @pytest.mark.parametrize('text, expected', [
        ('1/2', HALF), ('0', ZERO), (1, ONE), ('0.25', F(1, 4)), (0.5, HALF),
    ])
    def test_parse(self, text, expected):
        assert parse_truth_value(text) == expected

    @pytest.mark.parametrize('text', ['3/2', '-1', 'abc', '1/0'])
    def test_parse_rejects(self, text):
        with pytest.raises(ValidationError):
            parse_truth_value(text)

    def test_grid(self):
        assert grid_values(2) == TERNARY_VALUES
        with pytest.raises(ValidationError):
            grid_values(0)

    def test_assignment_rendering(self, mutual):
        v = Assignment.of(mutual, ['1/2', 0])
        assert str(v) == '(a=1/2, b=0)'
        assert v.as_strings() == {'a': '1/2', 'b': '0'}
        assert v['a'] == HALF
        with pytest.raises(DomainViolationError):
            v['c']

    def test_assignment_from_mapping(self, mutual):
        assert Assignment.from_mapping(mutual, {'b': 1, 'a': 0}).values == (ZERO, ONE)
        with pytest.raises(ValidationError):
            Assignment.from_mapping(mutual, {'a': 0})


class TestFiniteTables:
    """Les tables littérales coïncident avec les formes closes."""

    @pytest.mark.parametrize('x', TERNARY_VALUES)
    @pytest.mark.parametrize('y', TERNARY_VALUES)
    def test_kleene(self, x, y):
        assert LogicSystem.pl3k().implies(x, y) == max(1 - x, y)

    @pytest.mark.parametrize('x', TERNARY_VALUES)
    @pytest.mark.parametrize('y', TERNARY_VALUES)
    def test_lukasiewicz(self, x, y):
        assert LogicSystem.pl3l().implies(x, y) == min(ONE, 1 - x + y)

    def test_classical(self):
        pl2 = LogicSystem.pl2()
        assert [pl2.implies(x, y) for x in (ZERO, ONE) for y in (ZERO, ONE)] == [ONE, ONE, ZERO, ONE]

    def test_kleene_and_lukasiewicz_differ_only_on_half(self):
        assert LogicSystem.pl3k().iff(HALF, HALF) == HALF
        assert LogicSystem.pl3l().iff(HALF, HALF) == ONE

    def test_mutated_cell(self):
        mutated = LogicSystem.pl3l().with_implication_cell(HALF, HALF, HALF)
        assert mutated.implies(HALF, HALF) == HALF
        assert LogicSystem.pl3l().implies(HALF, HALF) == ONE


class TestNamedTNorms:

    def test_residuum_examples(self):
        assert residuum(LUKASIEWICZ, F(7, 10), F(4, 10)) == F(7, 10)
        assert residuum(GOEDEL, F(3, 10), F(5, 10)) == ONE
        assert residuum(GOEDEL, F(5, 10), F(3, 10)) == F(3, 10)
        assert residuum(PRODUCT, F(8, 10), F(2, 10)) == F(1, 4)

    @pytest.mark.parametrize('t', [GOEDEL, LUKASIEWICZ, PRODUCT], ids=lambda t: t.name)
    @given(x=grid_points, y=grid_points, z=grid_points)
    def test_adjunction(self, t, x, y, z):
        assert (t(x, z) <= y) == (z <= t.residuum(x, y))

    @pytest.mark.parametrize('t', [GOEDEL, LUKASIEWICZ, PRODUCT, get_tnorm('nilpotent-minimum')],
                             ids=lambda t: t.name)
    def test_residuum_is_one_exactly_on_order(self, t):
        for x, y in product(GRID_10, repeat=2):
            assert (t.residuum(x, y) == ONE) == (x <= y), (x, y)
            assert (t.residuum(x, y) == ONE and t.residuum(y, x) == ONE) == (x == y), (x, y)

    @pytest.mark.parametrize('t', [GOEDEL, LUKASIEWICZ, PRODUCT], ids=lambda t: t.name)
    @given(x=unit_fractions, y=unit_fractions, z=unit_fractions)
    def test_axioms(self, t, x, y, z):
        assert t(x, y) == t(y, x)
        assert t(x, ONE) == x
        assert t(t(x, y), z) == t(x, t(y, z))

    def test_fold(self):
        assert GOEDEL.fold([]) == ONE
        assert LUKASIEWICZ.fold([F(3, 4), F(3, 4), F(3, 4)]) == F(1, 4)

    def test_aliases(self):
        assert get_tnorm('min') is GOEDEL
        assert get_tnorm('Luka') is LUKASIEWICZ
        with pytest.raises(ValidationError):
            get_tnorm('hamacher')


class TestUserTNorm:

    def test_nilpotent_minimum_residuum(self):
        nm = get_tnorm('nilpotent-minimum')
        assert nm(F(3, 4), F(1, 2)) == F(1, 2)
        assert nm(HALF, HALF) == ZERO
        assert nm.residuum(F(3, 4), F(1, 4)) == F(1, 4)
        assert nm.residuum(F(3, 4), F(1, 2)) == F(1, 2)
        assert nm.residuum(F(1, 4), F(1, 2)) == ONE
        assert nm.residuum(F(2, 3), F(1, 5)) == F(1, 3)

    def test_user_goedel_matches_closed_form(self):
        user = UserTNorm('user-min', min)
        for x in grid_values(4):
            for y in grid_values(4):
                assert user.residuum(x, y, grid=4) == GOEDEL.residuum(x, y)

    def test_rejects_non_commutative(self):
        with pytest.raises(InvalidTNormError) as info:
            UserTNorm('left', lambda x, y: x * y * y)
        assert info.value.axiom in ('commutativity', 'unit')

    def test_rejects_bad_unit(self):
        with pytest.raises(InvalidTNormError) as info:
            UserTNorm('half', lambda x, y: min(x, y) / 2)
        assert info.value.axiom == 'unit'

    def test_rejects_drastic_product(self):
        with pytest.raises(NonLeftContinuousError) as info:
            UserTNorm('drastic', lambda x, y: min(x, y) if max(x, y) == 1 else ZERO)
        assert (info.value.x, info.value.y) == (F(1, 8), ZERO)


class TestNegation:

    def test_standard(self):
        assert parse_negation('standard') is STANDARD_NEGATION
        assert STANDARD_NEGATION(F(1, 4)) == F(3, 4)

    def test_table(self):
        n = parse_negation('table(0=1,1/2=1/4,1=0)')
        assert n(ZERO) == ONE
        assert n(F(1, 4)) == F(5, 8)
        assert n(ONE) == ZERO
        assert not n.is_standard
        assert parse_negation('table(0=1,1=0)').is_standard

    @pytest.mark.parametrize('spec', ['table(0=1,1/2=1,1=1/2)', 'table(0=1,1/2=0,3/4=1/2,1=0)', 'table(1=0)'])
    def test_invalid_tables(self, spec):
        with pytest.raises(InvalidNegationError):
            parse_negation(spec)

    def test_unknown(self):
        with pytest.raises(ValidationError):
            parse_negation('sugeno')


class TestEvaluation:

    def test_is_model_examples(self, mutual):
        ec1 = encode_normal(mutual)
        assert is_model(ec1, Assignment.of(mutual, [1, 0]), LogicSystem.pl2())
        assert not is_model(ec1, Assignment.of(mutual, [1, 1]), LogicSystem.pl2())
        assert is_model(ec1, Assignment.of(mutual, ['1/2', '1/2']), LogicSystem.pl3l())
        assert not is_model(ec1, Assignment.of(mutual, ['1/2', '1/2']), LogicSystem.pl3k())

    def test_domain_violation(self, mutual):
        with pytest.raises(DomainViolationError):
            evaluate(Atom('a'), Assignment.of(mutual, ['1/2', 0]), LogicSystem.pl2())
        with pytest.raises(DomainViolationError):
            evaluate(Atom('a'), Assignment.of(mutual, ['1/4', 0]), LogicSystem.pl3l())

    @given(n=st.integers(min_value=1, max_value=4),
           p=st.sampled_from([0.2, 0.5, 0.8]),
           seed=st.integers(min_value=0, max_value=10_000))
    def test_finite_systems_agree_on_boolean_assignments(self, n, p, seed):
        af = random_af(n, p, seed)
        systems = [LogicSystem.pl2(), LogicSystem.pl3k(), LogicSystem.pl3l()]
        for f in (encode_normal(af), encode_regular(af)):
            for values in product((ZERO, ONE), repeat=len(af)):
                v = Assignment.of(af, values)
                assert len({evaluate(f, v, ls) for ls in systems}) == 1, str(v)

    def test_fuzzy_implication_uses_residuum(self, mutual):
        ls = LogicSystem.fuzzy(STANDARD_NEGATION, LUKASIEWICZ)
        v = Assignment.of(mutual, ['7/10', '6/10'])
        assert evaluate(Implies(Atom('a'), Not(Atom('b'))), v, ls) == F(7, 10)

    def test_parse_logic_spec(self):
        assert parse_logic_spec('pl3k') == LogicSystem.pl3k()
        fuzzy = parse_logic_spec('fuzzy:standard:product')
        assert fuzzy.tnorm is PRODUCT
        assert fuzzy.name == 'fuzzy:standard:product'
        assert parse_logic_spec('fuzzy').tnorm is GOEDEL
        with pytest.raises(ValidationError):
            parse_logic_spec('pl4')


class TestEnumeration:

    def test_mutual_models(self, mutual, limits):
        ec1 = encode_normal(mutual)
        assert len(enumerate_models(ec1, mutual, LogicSystem.pl3k(), limits)) == 2
        assert len(enumerate_models(ec1, mutual, LogicSystem.pl3l(), limits)) == 3
        assert [str(m) for m in enumerate_models(ec1, mutual, LogicSystem.pl2(), limits)] == [
            '(a=0, b=1)', '(a=1, b=0)',
        ]

    def test_grid_models(self, mutual, three_cycle, limits):
        goedel = LogicSystem.fuzzy(STANDARD_NEGATION, GOEDEL)
        assert len(grid_models(encode_normal(mutual), mutual, goedel, 4, limits)) == 5
        models = grid_models(encode_normal(three_cycle), three_cycle, goedel, 2, limits)
        assert [m.values for m in models] == [(HALF, HALF, HALF)]

    def test_lexicographic_order(self, mutual, limits):
        models = enumerate_models(encode_normal(mutual), mutual, LogicSystem.pl3l(), limits)
        assert [m.values for m in models] == [(ZERO, ONE), (HALF, HALF), (ONE, ZERO)]

    def test_fuzzy_requires_grid(self, mutual, limits):
        with pytest.raises(UnsupportedConfigurationError):
            enumerate_models(encode_normal(mutual), mutual, LogicSystem.fuzzy(), limits)
        with pytest.raises(UnsupportedConfigurationError):
            grid_models(encode_normal(mutual), mutual, LogicSystem.pl2(), 4, limits)

    def test_resource_limits(self, mutual):
        with pytest.raises(ResourceLimitError):
            enumerate_models(encode_normal(mutual), mutual, LogicSystem.pl2(), Limits(max_args=1))
        with pytest.raises(ResourceLimitError) as info:
            grid_models(encode_normal(mutual), mutual, LogicSystem.fuzzy(), 4, Limits(max_grid_points=24))
        assert info.value.size == 25
