# tests/test_semantics.py
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arglogic.exceptions import PartialityError, ResourceLimitError, ValidationError
from arglogic.generator import random_af
from arglogic.logic import HALF, ONE, ZERO, Assignment
from arglogic.models.framework import ArgumentationFramework, empty_framework
from arglogic.semantics import (
    SemanticsName,
    binarize,
    complete_labellings,
    dung_labellings,
    extension_of,
    is_admissible,
    is_complete_labelling,
    is_conflict_free,
    labelling_from_extension,
    ternarize,
)
from arglogic.utils.config_manager import Limits


unit_fractions = st.fractions(min_value=0, max_value=1, max_denominator=8)


def values(labellings):
    return [lab.values for lab in labellings]


class TestCompleteLabellings:

    def test_mutual(self, mutual, limits):
        assert values(complete_labellings(mutual, limits)) == [(ZERO, ONE), (HALF, HALF), (ONE, ZERO)]

    def test_chain(self, chain, limits):
        assert values(complete_labellings(chain, limits)) == [(ONE, ZERO)]

    def test_self_attacker(self, self_attacker, limits):
        assert values(complete_labellings(self_attacker, limits)) == [(HALF,)]

    def test_empty(self, limits):
        assert len(complete_labellings(empty_framework(), limits)) == 1

    def test_condition_checked_per_argument(self, mutual):
        assert is_complete_labelling(mutual, Assignment.of(mutual, ['1/2', '1/2']))
        assert not is_complete_labelling(mutual, Assignment.of(mutual, ['1/2', 0]))


class TestDungSemantics:

    @pytest.mark.parametrize('semantics, expected', [
        (SemanticsName.STABLE, [(ZERO, ONE), (ONE, ZERO)]),
        (SemanticsName.PREFERRED, [(ZERO, ONE), (ONE, ZERO)]),
        (SemanticsName.GROUNDED, [(HALF, HALF)]),
    ])
    def test_mutual(self, mutual, limits, semantics, expected):
        assert values(dung_labellings(mutual, semantics, limits)) == expected

    def test_self_attacker_has_no_stable_labelling(self, self_attacker, limits):
        assert dung_labellings(self_attacker, SemanticsName.STABLE, limits) == []

    def test_three_cycle(self, three_cycle, limits):
        assert values(dung_labellings(three_cycle, SemanticsName.GROUNDED, limits)) == [(HALF, HALF, HALF)]
        assert dung_labellings(three_cycle, SemanticsName.STABLE, limits) == []

    def test_conflict_free_and_admissible(self, mutual, limits):
        cf = [extension_of(lab) for lab in dung_labellings(mutual, SemanticsName.CONFLICT_FREE, limits)]
        adm = [extension_of(lab) for lab in dung_labellings(mutual, SemanticsName.ADMISSIBLE, limits)]
        assert cf == [frozenset(), frozenset({'b'}), frozenset({'a'})]
        assert adm == cf

    def test_admissible_requires_defence(self, chain):
        assert is_conflict_free(chain, {'b'})
        assert not is_admissible(chain, {'b'})
        assert is_admissible(chain, {'a'})

    def test_parse_aliases(self):
        assert SemanticsName.parse('st') is SemanticsName.STABLE
        assert SemanticsName.parse('Conflict_Free') is SemanticsName.CONFLICT_FREE
        with pytest.raises(ValidationError):
            SemanticsName.parse('ideal')

    def test_argument_cap(self, three_cycle):
        with pytest.raises(ResourceLimitError):
            dung_labellings(three_cycle, SemanticsName.COMPLETE, Limits(max_args=2))


class TestTransforms:

    def test_binarize(self, three_cycle):
        v = Assignment.of(three_cycle, [1, '1/2', 0])
        assert binarize(v).values == (ONE, ZERO, ZERO)

    def test_ternarize(self, chain):
        assert ternarize(chain, Assignment.of(chain, ['1/4', '3/4'])).values == (HALF, HALF)
        assert ternarize(chain, Assignment.of(chain, [1, '3/4'])).values == (ONE, ZERO)

    def test_ternarize_partiality(self, mutual):
        with pytest.raises(PartialityError) as info:
            ternarize(mutual, Assignment.of(mutual, [1, 1]))
        assert (info.value.argument, info.value.attacker) == ('a', 'b')

    def test_ternarize_fixes_complete(self, three_cycle, limits):
        for lab in complete_labellings(three_cycle, limits):
            assert ternarize(three_cycle, lab) == lab

    @given(data=st.data(), n=st.integers(min_value=1, max_value=5), seed=st.integers(min_value=0, max_value=10_000))
    def test_transforms_are_idempotent(self, data, n, seed):
        af = random_af(n, 0.3, seed)
        v = Assignment.of(af, data.draw(st.lists(unit_fractions, min_size=n, max_size=n)))
        assert binarize(binarize(v)) == binarize(v)
        try:
            once = ternarize(af, v)
        except PartialityError:
            return
        assert ternarize(af, once) == once

    def test_extension_round_trip(self, limits):
        af = ArgumentationFramework.from_names(['a', 'b', 'c'], [('a', 'b'), ('b', 'a'), ('b', 'c')])
        for lab in complete_labellings(af, limits):
            assert labelling_from_extension(af, extension_of(lab)) == lab
