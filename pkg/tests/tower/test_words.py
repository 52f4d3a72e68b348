import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyrankone.config.models import Budgets
from pyrankone.tower.exceptions import BudgetExceededError, StageRangeError
from pyrankone.tower.models import CuttingSchedule, StageRule
from pyrankone.tower.schedule import height
from pyrankone.tower.words import (
    CACHED_SYMBOLS,
    _cached_bits,
    _cached_expected_array,
    copy_offsets,
    expected_array,
    expected_positions,
    infinite_word_prefix,
    word,
    word_bits,
)


@st.composite
def schedules(draw):
    rules = []
    for _ in range(draw(st.integers(1, 3))):
        q = draw(st.integers(2, 4))
        spacers = draw(st.lists(st.integers(0, 3), min_size=q - 1, max_size=q - 1))
        rules.append(StageRule(q=q, spacers=tuple(spacers)))
    return CuttingSchedule(h0=draw(st.integers(1, 3)), stages=tuple(rules))


class TestWord:
    def test_chacon(self, chacon):
        assert word_bits(chacon, 0) == "0"
        assert word_bits(chacon, 1) == "0010"
        assert word_bits(chacon, 2) == "0010001010010"

    def test_four_copy(self, four_copy):
        assert word_bits(four_copy, 2) == "001000010010010000100"

    def test_staircase(self, staircase):
        assert word_bits(staircase, 2) == "01011010"

    def test_odometer(self, odometer):
        assert word_bits(odometer, 4) == "0" * 16

    def test_height_matches(self, chacon):
        tower_word = word(chacon, 4)
        assert tower_word.height == height(chacon, 4)

    def test_budget(self, chacon):
        with pytest.raises(BudgetExceededError):
            word(chacon, 3, Budgets(max_word_length=10))

    def test_large_words_are_not_cached(self, chacon):
        _cached_bits.cache_clear()
        assert height(chacon, 10) > CACHED_SYMBOLS >= height(chacon, 9)
        assert word_bits(chacon, 10).startswith(word_bits(chacon, 9))
        assert _cached_bits.cache_info().currsize == 10

    @settings(max_examples=50, deadline=None)
    @given(schedules(), st.integers(0, 3))
    def test_nested_words(self, schedule, n):
        inner, outer = word_bits(schedule, n), word_bits(schedule, n + 1)
        assert len(outer) == height(schedule, n + 1)
        assert outer.startswith(inner)
        assert outer.endswith(inner)
        assert set(outer) <= {"0", "1"}


class TestExpectedPositions:
    def test_chacon(self, chacon):
        assert expected_positions(chacon, 2, 1).positions == (0, 4, 9)
        assert expected_positions(chacon, 3, 1).positions == (0, 4, 9, 13, 17, 22, 27, 31, 36)

    def test_four_copy(self, four_copy):
        assert expected_positions(four_copy, 2, 1).positions == (0, 5, 11, 16)

    def test_same_stage(self, chacon):
        assert expected_positions(chacon, 3, 3).positions == (0,)

    def test_copy_offsets(self, chacon):
        assert copy_offsets(chacon, 1) == (0, 4, 9)

    def test_invalid_order(self, chacon):
        with pytest.raises(StageRangeError):
            expected_positions(chacon, 1, 2)

    def test_budget(self, chacon):
        with pytest.raises(BudgetExceededError):
            expected_positions(chacon, 8, 0, Budgets(max_word_length=100))

    @settings(max_examples=50, deadline=None)
    @given(schedules(), st.integers(0, 2), st.integers(0, 2))
    def test_occurrences_at_expected_positions(self, schedule, n, extra):
        m = n + extra
        outer, inner = word_bits(schedule, m), word_bits(schedule, n)
        positions = expected_positions(schedule, m, n).positions
        assert positions[0] == 0
        assert positions[-1] == len(outer) - len(inner)
        assert all(outer[p:p + len(inner)] == inner for p in positions)
        assert all(b - a >= len(inner) for a, b in zip(positions, positions[1:]))


    @settings(max_examples=50, deadline=None)
    @given(schedules(), st.integers(0, 2), st.integers(1, 2))
    def test_composition(self, schedule, n, extra):
        m = n + extra
        upper = expected_positions(schedule, m, n + 1).positions
        lower = expected_positions(schedule, n + 1, n).positions
        assert expected_positions(schedule, m, n).positions == tuple(sorted(a + b for a in upper for b in lower))

    @settings(max_examples=50, deadline=None)
    @given(schedules(), st.integers(0, 2), st.integers(0, 2))
    def test_counts(self, schedule, n, extra):
        m = n + extra
        copies = math.prod(schedule.stage_rule(i).q for i in range(n, m))
        assert len(expected_positions(schedule, m, n).positions) == copies
        zeros = schedule.h0 * math.prod(schedule.stage_rule(i).q for i in range(m))
        assert word_bits(schedule, m).count("0") == zeros

    @settings(max_examples=50, deadline=None)
    @given(schedules(), st.integers(0, 2), st.integers(1, 2))
    def test_only_spacers_between_blocks(self, schedule, n, extra):
        m = n + extra
        outer, h_n = word_bits(schedule, m), height(schedule, n)
        positions = expected_positions(schedule, m, n).positions
        for a, b in zip(positions, positions[1:]):
            assert set(outer[a + h_n:b]) <= {"1"}

    def test_large_arrays_are_not_cached(self, chacon):
        _cached_expected_array.cache_clear()
        positions = expected_array(chacon, 11, 0)
        assert len(positions) == 3 ** 11 > CACHED_SYMBOLS
        assert tuple(positions[:3]) == (0, 1, 3)
        assert _cached_expected_array.cache_info().currsize == 0


class TestInfiniteWordPrefix:
    def test_staircase(self, staircase):
        assert infinite_word_prefix(staircase, 8) == "01011010"

    def test_chacon(self, chacon):
        assert infinite_word_prefix(chacon, 20) == "00100010100100010001"

    def test_agrees_with_deep_words(self, four_copy):
        assert infinite_word_prefix(four_copy, 100) == word_bits(four_copy, 4)[:100]

    def test_non_positive_length(self, chacon):
        with pytest.raises(StageRangeError):
            infinite_word_prefix(chacon, 0)

    def test_budget(self, chacon):
        with pytest.raises(BudgetExceededError):
            infinite_word_prefix(chacon, 50, Budgets(max_word_length=20))

    @settings(max_examples=50, deadline=None)
    @given(schedules(), st.integers(1, 150), st.integers(0, 150))
    def test_prefixes_extend(self, schedule, length, extra):
        shorter = infinite_word_prefix(schedule, length)
        assert infinite_word_prefix(schedule, length + extra).startswith(shorter)
