import pytest

from pyrankone.points.congruence import congruence_stage_search, psi_congruence_report
from pyrankone.points.exceptions import StageOutOfRangeError, TooFewReturnsError
from pyrankone.points.models import PointAddress
from pyrankone.points.returns import psi, z_window


@pytest.fixture
def staircase_point():
    return PointAddress(depth=5, level=43)


def test_staircase_window(staircase, staircase_point):
    gaps = psi(z_window(staircase, staircase_point, 43))
    assert len(gaps.domain) == 15
    assert gaps.values == (5, 6, 5, 7, 5, 6, 5, 8, 5, 6, 5, 7, 5, 6, 5)


def test_staircase_report(staircase, staircase_point):
    report = psi_congruence_report(staircase, staircase_point, 43, 2)
    assert report.r == 2
    assert report.anchor == -43
    assert report.constant_classes == 1
    assert report.varying_classes == 1
    assert report.classes[0].values == (5,) * 8
    assert report.classes[1].verdict == "varying"
    assert report.claim_holds is True


def test_bounded_schedule_has_no_claim(chacon):
    report = psi_congruence_report(chacon, PointAddress(depth=4, level=60), 50, 2)
    assert report.claim_holds is None
    assert report.constant_classes + report.varying_classes == report.r == 3


def test_too_few_returns(chacon):
    with pytest.raises(TooFewReturnsError):
        psi_congruence_report(chacon, PointAddress(depth=3, level=20), 10, 2)


def test_stage_out_of_range(staircase, staircase_point):
    with pytest.raises(StageOutOfRangeError):
        psi_congruence_report(staircase, staircase_point, 43, 6)


def test_stage_search(staircase, staircase_point):
    entries = congruence_stage_search(staircase, staircase_point, 43)
    assert len(entries) == 15
    assert entries[0].position == -43
    assert [entries[i].stage for i in (0, 1, 3, 7)] == [2, 3, 4, None]
    assert all(entry.stage == 2 for entry in entries[::2])
