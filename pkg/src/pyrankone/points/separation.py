"""
Telling two points apart by a tower level and by their return windows.

Two distinct addresses of equal depth always differ at some stage: the least stage n at which one
of them sits on a level i of the stage-n tower that does not hold the other is the separating
level. If that stage has a context bound l(n) within depth, the return windows of radius
max(i + h_1 - 1, l(n) - 1 - i) already differ, because they determine the word on both sides of
the stage-n start below the point and that start is expected for exactly one of the two points.
"""
from typing import Optional

from loguru import logger

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.points.addresses import locate
from pyrankone.points.exceptions import DepthMismatchError, IdenticalAddressesError, WindowExceedsDepthError
from pyrankone.points.models import Level, PointAddress, SeparatingLevel, SeparationReport
from pyrankone.points.returns import feasible_radius, z_window
from pyrankone.recognizer.context import context_bound
from pyrankone.recognizer.exceptions import NoWitnessError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import height


def _check_pair(first: PointAddress, second: PointAddress) -> None:
    if first.depth != second.depth:
        raise DepthMismatchError(f"Addresses {first} and {second} have different depths")
    if first.level == second.level:
        raise IdenticalAddressesError(f"Addresses {first} and {second} are the same point")


def _exclusive_level(schedule: CuttingSchedule, first: PointAddress, second: PointAddress, n: int,
                     budgets: Budgets) -> Optional[SeparatingLevel]:
    one, two = locate(schedule, first, n, budgets), locate(schedule, second, n, budgets)
    if one == two:
        return None
    level = one if isinstance(one, Level) else two
    return SeparatingLevel(stage=n, index=level.index)


def separating_level(schedule: CuttingSchedule, first: PointAddress, second: PointAddress,
                     budgets: Budgets = DEFAULT_BUDGETS) -> SeparatingLevel:
    """The least stage and level index containing exactly one of the two points."""
    _check_pair(first, second)
    for n in range(first.depth):
        level = _exclusive_level(schedule, first, second, n, budgets)
        if level is not None:
            return level
    return SeparatingLevel(stage=first.depth, index=first.level)


def certified_radius(schedule: CuttingSchedule, first: PointAddress, second: PointAddress,
                     budgets: Budgets = DEFAULT_BUDGETS) -> Optional[int]:
    """
    Smallest radius at which the return windows of the two points provably differ.

    Stages n >= 1 where exactly one point sits on some level i contribute
    max(i + h_1 - 1, l(n) - 1 - i), provided the witness behind l(n) lies within the depth.

    Returns:
        int | None: The radius, or None when no stage qualifies.
    """
    _check_pair(first, second)
    h_1 = height(schedule, 1, budgets)
    best = None
    for n in range(1, first.depth + 1):
        one, two = locate(schedule, first, n, budgets), locate(schedule, second, n, budgets)
        indices = [loc.index for loc, other in ((one, two), (two, one)) if isinstance(loc, Level) and loc != other]
        if not indices:
            continue
        try:
            bound = context_bound(schedule, n, first.depth, budgets)
        except NoWitnessError:
            continue
        radius = min(max(i + h_1 - 1, bound.l - 1 - i) for i in indices)
        best = radius if best is None else min(best, radius)
    return best


def separation_check(schedule: CuttingSchedule, first: PointAddress, second: PointAddress,
                     radius: Optional[int] = None, budgets: Budgets = DEFAULT_BUDGETS) -> SeparationReport:
    """
    Separate two points by a tower level and compare their return windows.

    Args:
        schedule (CuttingSchedule): The schedule.
        first (PointAddress): First point.
        second (PointAddress): Second point, same depth, different level.
        radius (int, optional): Window radius; the certified radius when omitted.
        budgets (Budgets): Size limits.

    Returns:
        SeparationReport: The separating level and whether the windows differ at the compared radius,
        which is the requested radius capped to what both towers contain.

    Raises:
        DepthMismatchError: If the depths differ.
        IdenticalAddressesError: If the addresses coincide.
        NoWitnessError: If no radius is given and none can be certified.
        WindowExceedsDepthError: If the certified radius does not fit inside the towers.
    """
    level = separating_level(schedule, first, second, budgets)
    certified = certified_radius(schedule, first, second, budgets)
    capacity = min(feasible_radius(schedule, first, budgets), feasible_radius(schedule, second, budgets))
    if radius is None:
        if certified is None:
            raise NoWitnessError(f"No stage certifies a separating radius for {first} and {second}")
        if certified > capacity:
            raise WindowExceedsDepthError(
                f"Certified radius {certified} for {first} and {second} exceeds the {capacity} the towers hold"
            )
        radius = certified
    compared = min(radius, capacity)
    if compared < 0:
        raise WindowExceedsDepthError(f"No return window fits around both {first} and {second}")
    one = z_window(schedule, first, compared, budgets)
    two = z_window(schedule, second, compared, budgets)
    differ = one.returns != two.returns
    if not differ and certified is not None and compared >= certified:
        logger.error(f"Windows of {first} and {second} agree at certified radius {compared}")
    return SeparationReport(first=first, second=second, separating_level=level, certified_radius=certified,
                            radius=compared, windows_differ=differ)
