import pytest

from pyrankone.recognizer.context import (
    ExpectedStartRecognizer,
    context_bound,
    is_expected_start,
    longest_common_extension,
    minimal_context,
)
from pyrankone.recognizer.exceptions import NoWitnessError, NotAnOccurrenceError
from pyrankone.recognizer.models import ContextBound, StartVerdict
from pyrankone.recognizer.occurrences import occurrences
from pyrankone.tower.exceptions import StageRangeError
from pyrankone.tower.words import expected_positions, word_bits


class TestContextBound:
    def test_chacon(self, chacon):
        assert context_bound(chacon, 1, 8) == ContextBound(n=1, l=30, witness_stage=2, kind="paper-bound")
        assert context_bound(chacon, 2, 8).l == 93

    def test_four_copy(self, four_copy):
        assert context_bound(four_copy, 1, 8).l == 47

    def test_staircase(self, staircase):
        bound = context_bound(staircase, 1, 8)
        assert bound.l == 41
        assert bound.witness_stage == 3

    def test_repeating(self, odometer):
        with pytest.raises(NoWitnessError):
            context_bound(odometer, 1, 8)


class TestMinimalContext:
    def test_longest_common_extension(self):
        assert longest_common_extension("0010001010010", 0, 4, 9) == 4
        assert longest_common_extension("0000", 0, 1, 3) == 3

    def test_chacon_needs_only_the_word(self, chacon):
        result = minimal_context(chacon, 1, 4)
        assert result.l == 4
        assert result.witness_stage is None
        assert result.kind == "brute-minimal"

    def test_four_copy_below_bound(self, four_copy):
        result = minimal_context(four_copy, 1, 4)
        assert 5 < result.l <= context_bound(four_copy, 1, 8).l
        assert result.witness_stage is not None

    def test_stage_order(self, chacon):
        with pytest.raises(StageRangeError):
            minimal_context(chacon, 2, 2)


class TestExpectedStartRecognizer:
    @pytest.mark.parametrize("name", ["chacon", "four_copy"])
    def test_classifies_every_decided_occurrence(self, name, request):
        schedule = request.getfixturevalue(name)
        recognizer = ExpectedStartRecognizer(schedule, 1)
        assert recognizer.stable
        m = recognizer.stage + 1
        w = word_bits(schedule, m)
        expected = set(expected_positions(schedule, m, 1).positions)
        decided = [p for p in occurrences(w, recognizer.inner) if p + recognizer.context_length <= len(w)]
        assert decided
        for p in decided:
            verdict = recognizer.classify(w, p)
            assert verdict is (StartVerdict.EXPECTED if p in expected else StartVerdict.UNEXPECTED)

    def test_staircase_on_template_stage(self, staircase):
        recognizer = ExpectedStartRecognizer(staircase, 1)
        w = word_bits(staircase, recognizer.stage)
        expected = set(expected_positions(staircase, recognizer.stage, 1).positions)
        assert set(recognizer.expected_starts(w)) <= expected

    def test_unexpected_start(self, four_copy):
        w = word_bits(four_copy, 3)
        assert is_expected_start(four_copy, w, 8, 1, stage=5) is StartVerdict.UNEXPECTED
        assert is_expected_start(four_copy, w, 5, 1, stage=5) is StartVerdict.EXPECTED

    def test_insufficient_context(self, four_copy):
        recognizer = ExpectedStartRecognizer(four_copy, 1)
        assert recognizer.classify(word_bits(four_copy, 2), 0) is StartVerdict.INSUFFICIENT_CONTEXT

    def test_not_an_occurrence(self, four_copy):
        recognizer = ExpectedStartRecognizer(four_copy, 1)
        with pytest.raises(NotAnOccurrenceError):
            recognizer.classify(word_bits(four_copy, 3), 1)

    def test_repeating_schedule(self, alternating):
        with pytest.raises(NoWitnessError):
            ExpectedStartRecognizer(alternating, 1)
