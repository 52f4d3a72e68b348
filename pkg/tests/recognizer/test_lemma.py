import pytest

from pyrankone.recognizer.lemma import lemma_gap_check, lemma_suite
from pyrankone.tower.exceptions import StageRangeError


def test_four_copy_incomplete_configuration(four_copy):
    report = lemma_gap_check(four_copy, 2, 1)
    assert report.configurations == 1
    assert report.complete_configurations == 0
    assert report.passed


def test_odometer_configurations(odometer):
    report = lemma_gap_check(odometer, 3, 1)
    assert report.configurations == 3
    assert report.complete_configurations == 2
    assert report.violations == ()


@pytest.mark.parametrize("name", ["chacon", "four_copy", "staircase", "odometer"])
def test_suite_has_no_violations(name, request):
    depth = 6
    schedule = request.getfixturevalue(name)
    reports = lemma_suite(schedule, depth)
    assert len(reports) == depth * (depth + 1) // 2
    assert all(report.passed for report in reports)


def test_stage_order(chacon):
    with pytest.raises(StageRangeError):
        lemma_gap_check(chacon, 2, 2)


def test_four_copy_suite_meets_configurations(four_copy):
    assert sum(report.configurations for report in lemma_suite(four_copy, 6)) > 0
