"""
Return windows Z(x), the gap function Psi and return words R_n.

For a point on level j of the stage-N tower, i is a return time to the stage-1 base exactly when
j + i lies in E_{N,1}. A window of radius T is computed only while it stays inside the stage-N
tower; `maximal_z_window` takes everything the tower knows, which is asymmetric around the point.
"""
from typing import List, Tuple

import numpy as np

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.points.addresses import interior_margin
from pyrankone.points.exceptions import (
    NotInteriorError,
    StageOutOfRangeError,
    TooFewReturnsError,
    WindowExceedsDepthError,
)
from pyrankone.points.models import GapFunction, PointAddress, ReturnWord, ZWindow
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import height
from pyrankone.tower.words import expected_array


def _base_returns(schedule: CuttingSchedule, address: PointAddress, budgets: Budgets) -> np.ndarray:
    if address.depth < 1:
        raise StageOutOfRangeError("Return windows need an address of depth at least 1")
    return expected_array(schedule, address.depth, 1, budgets) - address.level


def feasible_radius(schedule: CuttingSchedule, address: PointAddress, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Largest T with j - T >= 0 and j + T + h_1 <= h_N (negative if there is none)."""
    h_n = height(schedule, address.depth, budgets)
    h_1 = height(schedule, 1, budgets)
    return min(address.level, h_n - h_1 - address.level)


def z_window(schedule: CuttingSchedule, address: PointAddress, radius: int,
             budgets: Budgets = DEFAULT_BUDGETS) -> ZWindow:
    """
    Returns to the stage-1 base within [-radius, radius].

    Args:
        schedule (CuttingSchedule): The schedule.
        address (PointAddress): The point, depth >= 1.
        radius (int): Window radius T >= 0.
        budgets (Budgets): Size limits.

    Returns:
        ZWindow: Sorted returns.

    Raises:
        WindowExceedsDepthError: If j - T < 0 or j + T + h_1 > h_N.
    """
    returns = _base_returns(schedule, address, budgets)
    if radius < 0 or radius > feasible_radius(schedule, address, budgets):
        raise WindowExceedsDepthError(
            f"Radius {radius} around {address} leaves the stage-{address.depth} tower; extend the address first"
        )
    lo = np.searchsorted(returns, -radius, side="left")
    hi = np.searchsorted(returns, radius, side="right")
    return ZWindow(address=address, lower=-radius, upper=radius,
                   returns=tuple(int(i) for i in returns[lo:hi]))


def maximal_z_window(schedule: CuttingSchedule, address: PointAddress,
                     budgets: Budgets = DEFAULT_BUDGETS) -> ZWindow:
    """All returns the stage-N tower determines: the window [-j, h_N - h_1 - j]."""
    returns = _base_returns(schedule, address, budgets)
    upper = height(schedule, address.depth, budgets) - height(schedule, 1, budgets) - address.level
    return ZWindow(address=address, lower=-address.level, upper=upper,
                   returns=tuple(int(i) for i in returns))


def z_window_two_sided_check(schedule: CuttingSchedule, address: PointAddress, k: int,
                             budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """
    Whether the maximal window holds returns strictly before and strictly after the point.

    Raises:
        NotInteriorError: If the address is not k-interior with k >= h_1.
    """
    h_1 = height(schedule, 1, budgets)
    if k < h_1 or not interior_margin(schedule, address, budgets).is_interior(k):
        raise NotInteriorError(f"{address} must be k-interior with k >= h_1 = {h_1}, got k={k}")
    returns = maximal_z_window(schedule, address, budgets).returns
    return returns[0] < 0 < returns[-1]


def psi(window: ZWindow) -> GapFunction:
    """
    Gap from each return to the next one.

    Raises:
        TooFewReturnsError: If the window has fewer than two returns.
    """
    if len(window.returns) < 2:
        raise TooFewReturnsError(
            f"Psi needs at least two returns, window around {window.address} has {len(window.returns)}"
        )
    gaps = np.diff(window.returns)
    return GapFunction(domain=window.returns[:-1], values=tuple(int(g) for g in gaps))


def return_word(schedule: CuttingSchedule, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> ReturnWord:
    """r_n = |E_{n,1}| and R_n, the successive differences of E_{n,1}."""
    if n < 1:
        raise StageOutOfRangeError(f"Return words need n >= 1, got {n}")
    starts = expected_array(schedule, n, 1, budgets)
    return ReturnWord(stage=n, r=len(starts), gaps=tuple(int(g) for g in np.diff(starts)))


def fact_one_violations(schedule: CuttingSchedule, window: ZWindow,
                        budgets: Budgets = DEFAULT_BUDGETS) -> List[Tuple[int, int]]:
    """Consecutive returns closer than h_1."""
    h_1 = height(schedule, 1, budgets)
    return [(a, b) for a, b in zip(window.returns, window.returns[1:]) if b - a < h_1]


def same_level_violations(schedule: CuttingSchedule, window: ZWindow,
                          budgets: Budgets = DEFAULT_BUDGETS) -> List[Tuple[int, int, int]]:
    """
    Returns on the same level of a stage-n tower that are closer than h_n.

    Every stage 1 <= n <= N is checked; returns at level 0 are the E_{N,n}-aligned ones.

    Returns:
        List[Tuple[int, int, int]]: (n, i, i') for each offending pair of consecutive same-level returns.
    """
    address = window.address
    positions = address.level + np.asarray(window.returns, dtype=np.int64)
    violations = []
    for n in range(1, address.depth + 1):
        h_n = height(schedule, n, budgets)
        starts = expected_array(schedule, address.depth, n, budgets)
        offsets = positions - starts[np.searchsorted(starts, positions, side="right") - 1]
        on_level = offsets < h_n
        levels, places = offsets[on_level], positions[on_level]
        order = np.lexsort((places, levels))
        levels, places = levels[order], places[order]
        close = np.flatnonzero((levels[1:] == levels[:-1]) & (np.diff(places) < h_n))
        violations.extend((n, int(places[c]) - address.level, int(places[c + 1]) - address.level) for c in close)
    return violations
