import pytest

from pyrankone.centralizer.codes import (
    enumerate_codes,
    invertible_codes,
    matching_shift_powers,
    search_codes,
    shift_power_code,
)
from pyrankone.centralizer.exceptions import CodeDomainError, OffsetExceedsRadiusError
from pyrankone.centralizer.language import language
from pyrankone.config.models import Budgets
from pyrankone.tower.exceptions import BudgetExceededError
from pyrankone.tower.words import word_bits


@pytest.fixture
def chacon_language(chacon):
    return language(chacon, 12)


class TestBlockCode:
    def test_shift_power_apply(self, chacon_language):
        code = shift_power_code(1, 1, chacon_language)
        assert code.apply("0010001010010") == "10001010010"

    def test_identity_signature(self, chacon_language):
        assert shift_power_code(0, 0, chacon_language).signature == "01"

    def test_offset_exceeds_radius(self, chacon_language):
        with pytest.raises(OffsetExceedsRadiusError):
            shift_power_code(2, 1, chacon_language)

    def test_short_word(self, chacon_language):
        with pytest.raises(CodeDomainError):
            shift_power_code(0, 1, chacon_language).apply("00")

    def test_window_outside_domain(self, chacon_language):
        with pytest.raises(CodeDomainError):
            shift_power_code(0, 1, chacon_language).apply("0110")

    def test_lift(self, chacon_language):
        lifted = shift_power_code(1, 1, chacon_language).lift(chacon_language, 2)
        assert lifted.table == shift_power_code(1, 2, chacon_language).table

    def test_lift_to_smaller_radius(self, chacon_language):
        with pytest.raises(CodeDomainError):
            shift_power_code(0, 2, chacon_language).lift(chacon_language, 1)

    def test_matching_shift_powers(self, chacon_language):
        assert matching_shift_powers(shift_power_code(-1, 2, chacon_language), chacon_language) == [-1]

    @pytest.mark.parametrize("a, b", [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)])
    def test_composition(self, chacon, chacon_language, a, b):
        w = word_bits(chacon, 3)
        composed = shift_power_code(a, 1, chacon_language).apply(shift_power_code(b, 1, chacon_language).apply(w))
        assert composed == shift_power_code(a + b, 2, chacon_language).apply(w)


class TestSearch:
    def test_radius_zero_is_identity(self, chacon_language):
        codes = enumerate_codes(chacon_language, 0, 4)
        assert [code.signature for code in codes] == ["01"]

    def test_shift_powers_survive(self, chacon_language):
        result = search_codes(chacon_language, 1, 8)
        signatures = {code.signature for code in result.codes}
        assert {shift_power_code(k, 1, chacon_language).signature for k in (-1, 0, 1)} <= signatures
        assert result.factor_count == 5
        assert result.nodes > 0

    def test_shift_powers_survive_on_four_copy(self, four_copy):
        lang = language(four_copy, 10)
        found = {code.signature: code for code in search_codes(lang, 1, 8).codes}
        for k in (-1, 0, 1):
            code = shift_power_code(k, 1, lang)
            assert code.signature in found
            assert matching_shift_powers(found[code.signature], lang) == [k]

    def test_workers_agree(self, chacon_language):
        single = search_codes(chacon_language, 1, 8)
        pooled = search_codes(chacon_language, 1, 8, workers=2)
        assert [c.signature for c in single.codes] == [c.signature for c in pooled.codes]

    def test_test_length_bounds(self, chacon_language):
        with pytest.raises(CodeDomainError):
            search_codes(chacon_language, 1, 5)
        with pytest.raises(CodeDomainError):
            search_codes(chacon_language, 1, 13)

    def test_node_budget(self, chacon_language):
        with pytest.raises(BudgetExceededError):
            search_codes(chacon_language, 1, 8, Budgets(max_enumeration_nodes=1))


class TestInvertible:
    def test_shift_powers_are_invertible(self, chacon_language):
        codes = [shift_power_code(k, 1, chacon_language) for k in (-1, 0, 1)]
        found = invertible_codes(codes, chacon_language, 2, 12)
        assert len(found) == 3
        for pair in found:
            k = matching_shift_powers(pair.code, chacon_language)[0]
            assert matching_shift_powers(pair.inverse, chacon_language) == [-k]

    def test_inverse_radius_too_small(self, chacon_language):
        with pytest.raises(CodeDomainError):
            invertible_codes([shift_power_code(0, 2, chacon_language)], chacon_language, 1, 12)

    def test_empty(self, chacon_language):
        assert invertible_codes([], chacon_language, 1, 12) == []
