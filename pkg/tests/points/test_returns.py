import pytest

from pyrankone.points.addresses import sample_interior_addresses
from pyrankone.points.exceptions import (
    NotInteriorError,
    StageOutOfRangeError,
    TooFewReturnsError,
    WindowExceedsDepthError,
)
from pyrankone.points.models import PointAddress
from pyrankone.points.returns import (
    fact_one_violations,
    feasible_radius,
    maximal_z_window,
    psi,
    return_word,
    same_level_violations,
    z_window,
    z_window_two_sided_check,
)
from pyrankone.tower.schedule import height


@pytest.fixture
def chacon_point():
    return PointAddress(depth=3, level=20)


class TestZWindow:
    def test_chacon(self, chacon, chacon_point):
        window = z_window(chacon, chacon_point, 10)
        assert window.returns == (-7, -3, 2, 7)
        assert window.radius == 10

    def test_feasible_radius(self, chacon, chacon_point):
        assert feasible_radius(chacon, chacon_point) == 16

    def test_exceeds_depth(self, chacon, chacon_point):
        with pytest.raises(WindowExceedsDepthError):
            z_window(chacon, chacon_point, 17)

    def test_depth_zero(self, chacon):
        with pytest.raises(StageOutOfRangeError):
            z_window(chacon, PointAddress(depth=0, level=0), 0)

    def test_maximal_window(self, chacon, chacon_point):
        window = maximal_z_window(chacon, chacon_point)
        assert (window.lower, window.upper) == (-20, 16)
        assert window.returns == (-20, -16, -11, -7, -3, 2, 7, 11, 16)

    def test_two_sided(self, chacon, chacon_point):
        assert z_window_two_sided_check(chacon, chacon_point, 4)

    def test_two_sided_needs_interior(self, chacon, chacon_point):
        with pytest.raises(NotInteriorError):
            z_window_two_sided_check(chacon, chacon_point, 3)
        with pytest.raises(NotInteriorError):
            z_window_two_sided_check(chacon, PointAddress(depth=3, level=2), 4)

    @pytest.mark.parametrize("name", ["chacon", "four_copy", "staircase"])
    def test_gap_facts(self, name, request):
        schedule = request.getfixturevalue(name)
        address = PointAddress(depth=5, level=40)
        window = z_window(schedule, address, feasible_radius(schedule, address))
        assert fact_one_violations(schedule, window) == []
        assert same_level_violations(schedule, window) == []


class TestPsi:
    def test_chacon(self, chacon, chacon_point):
        gaps = psi(z_window(chacon, chacon_point, 10))
        assert gaps.domain == (-7, -3, 2)
        assert gaps.values == (4, 5, 5)
        assert gaps.at(2) == 5

    def test_too_few_returns(self, chacon, chacon_point):
        with pytest.raises(TooFewReturnsError):
            psi(z_window(chacon, chacon_point, 1))


class TestReturnWord:
    def test_chacon(self, chacon):
        result = return_word(chacon, 2)
        assert (result.r, result.gaps) == (3, (4, 5))

    def test_four_copy(self, four_copy):
        result = return_word(four_copy, 2)
        assert (result.r, result.gaps) == (4, (5, 6, 5))

    def test_first_stage(self, chacon):
        assert return_word(chacon, 1).r == 1

    def test_stage_zero(self, chacon):
        with pytest.raises(StageOutOfRangeError):
            return_word(chacon, 0)


@pytest.mark.parametrize("name", ["chacon", "four_copy", "staircase", "odometer"])
@pytest.mark.parametrize("depth", [3, 4, 5, 6])
def test_sampled_points_keep_gap_facts(name, depth, request):
    schedule = request.getfixturevalue(name)
    h_1 = height(schedule, 1)
    gaps = set(return_word(schedule, depth).gaps)
    for address in sample_interior_addresses(schedule, depth, h_1, 200, seed=depth):
        window = maximal_z_window(schedule, address)
        assert fact_one_violations(schedule, window) == []
        assert same_level_violations(schedule, window) == []
        assert z_window_two_sided_check(schedule, address, h_1)
        assert set(psi(window).values) <= gaps
