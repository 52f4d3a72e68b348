import pytest

from pyrankone.points.addresses import sample_address_pairs
from pyrankone.points.exceptions import DepthMismatchError, IdenticalAddressesError, WindowExceedsDepthError
from pyrankone.points.models import PointAddress, SeparatingLevel
from pyrankone.points.separation import certified_radius, separating_level, separation_check
from pyrankone.recognizer.context import context_bound
from pyrankone.recognizer.exceptions import NoWitnessError
from pyrankone.tower.schedule import height


@pytest.fixture
def chacon_pair():
    return PointAddress(depth=3, level=20), PointAddress(depth=3, level=21)


def test_separating_level(chacon, chacon_pair):
    assert separating_level(chacon, *chacon_pair) == SeparatingLevel(stage=0, index=0)


def test_certified_radius(chacon, chacon_pair):
    assert certified_radius(chacon, *chacon_pair) == 26


def test_capped_radius(chacon, chacon_pair):
    report = separation_check(chacon, *chacon_pair, radius=20)
    assert report.radius == 15
    assert report.certified_radius == 26
    assert report.windows_differ


def test_certified_radius_must_fit(chacon, chacon_pair):
    with pytest.raises(WindowExceedsDepthError):
        separation_check(chacon, *chacon_pair)


def test_depth_mismatch(chacon):
    with pytest.raises(DepthMismatchError):
        separation_check(chacon, PointAddress(depth=3, level=20), PointAddress(depth=4, level=20))


def test_identical(chacon):
    with pytest.raises(IdenticalAddressesError):
        separating_level(chacon, PointAddress(depth=3, level=20), PointAddress(depth=3, level=20))


@pytest.mark.parametrize("name, depth", [("chacon", 5), ("four_copy", 5), ("staircase", 6)])
def test_sampled_pairs_are_separated(name, depth, request):
    schedule = request.getfixturevalue(name)
    margin = context_bound(schedule, 1, depth).l + height(schedule, 1)
    separated = 0
    for first, second in sample_address_pairs(schedule, depth, margin, 300, seed=11):
        try:
            report = separation_check(schedule, first, second)
        except (NoWitnessError, WindowExceedsDepthError):
            continue
        assert report.windows_differ
        assert report.radius == report.certified_radius
        separated += 1
    assert separated >= 100
