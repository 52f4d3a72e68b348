"""
Point addresses and their position relative to the smaller towers.

An address (N, j) is located at stage n <= N through E_{N,n}: if some expected start e satisfies
e <= j < e + h_n the point is on level j - e of the stage-n tower, otherwise it lies in the
spacer region. Extending through copy c of the stage-(N+1) tower moves the level to
E_{N+1,N}[c] + j.
"""
from typing import List, Tuple

import numpy as np

from pyrankone.config.models import DEFAULT_BUDGETS, DEFAULT_SEED, Budgets
from pyrankone.points.exceptions import (
    AddressFormatError,
    CopyIndexOutOfRangeError,
    LevelOutOfRangeError,
    StageOutOfRangeError,
)
from pyrankone.points.models import InteriorMargin, Level, PointAddress, PointLocation, Spacer, StageMargin
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import height
from pyrankone.tower.words import copy_offsets, expected_array


def make_address(schedule: CuttingSchedule, depth: int, level: int,
                 budgets: Budgets = DEFAULT_BUDGETS) -> PointAddress:
    """
    Build a validated address.

    Raises:
        StageOutOfRangeError: If depth is negative.
        LevelOutOfRangeError: If level is not in [0, h_depth).
    """
    if depth < 0:
        raise StageOutOfRangeError(f"Depth must be nonnegative, got {depth}")
    h = height(schedule, depth, budgets)
    if not 0 <= level < h:
        raise LevelOutOfRangeError(f"Level {level} is outside [0, {h}) at depth {depth}")
    return PointAddress(depth=depth, level=level)


def parse_address(schedule: CuttingSchedule, text: str, budgets: Budgets = DEFAULT_BUDGETS) -> PointAddress:
    """Parse 'depth:level', e.g. '3:20'."""
    depth, sep, level = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return make_address(schedule, int(depth), int(level), budgets)
    except ValueError:
        raise AddressFormatError(f"Address must look like 'depth:level', got '{text}'") from None


def locate(schedule: CuttingSchedule, address: PointAddress, n: int,
           budgets: Budgets = DEFAULT_BUDGETS) -> PointLocation:
    """
    Position of the point relative to the stage-n tower.

    Args:
        schedule (CuttingSchedule): The schedule.
        address (PointAddress): The point.
        n (int): Stage, 0 <= n <= address.depth.
        budgets (Budgets): Size limits.

    Returns:
        PointLocation: `Level(n, i)` or `Spacer(n)`.
    """
    if not 0 <= n <= address.depth:
        raise StageOutOfRangeError(f"Stage {n} is outside [0, {address.depth}]")
    starts = expected_array(schedule, address.depth, n, budgets)
    e = int(starts[np.searchsorted(starts, address.level, side="right") - 1])
    offset = address.level - e
    if offset < height(schedule, n, budgets):
        return Level(stage=n, index=offset)
    return Spacer(stage=n)


def extend(schedule: CuttingSchedule, address: PointAddress, copy_index: int,
           budgets: Budgets = DEFAULT_BUDGETS) -> PointAddress:
    """
    The same point seen inside copy `copy_index` of the stage-(N+1) tower.

    Raises:
        CopyIndexOutOfRangeError: If copy_index is not in [0, q_N).
    """
    offsets = copy_offsets(schedule, address.depth, budgets)
    if not 0 <= copy_index < len(offsets):
        raise CopyIndexOutOfRangeError(
            f"Copy index {copy_index} is outside [0, {len(offsets)}) at depth {address.depth}"
        )
    return PointAddress(depth=address.depth + 1, level=offsets[copy_index] + address.level)


def interior_margin(schedule: CuttingSchedule, address: PointAddress,
                    budgets: Budgets = DEFAULT_BUDGETS) -> InteriorMargin:
    """
    Distances from the point to the base and the top of its towers.

    Returns:
        InteriorMargin: down = j, up = h_N - 1 - j, plus the margins at every stage n <= N.
    """
    per_stage = []
    for n in range(address.depth + 1):
        location = locate(schedule, address, n, budgets)
        if isinstance(location, Level):
            h_n = height(schedule, n, budgets)
            per_stage.append(StageMargin(stage=n, down=location.index, up=h_n - 1 - location.index))
        else:
            per_stage.append(StageMargin(stage=n))
    h = height(schedule, address.depth, budgets)
    return InteriorMargin(address=address, down=address.level, up=h - 1 - address.level,
                          per_stage=tuple(per_stage))


def is_interior(schedule: CuttingSchedule, address: PointAddress, k: int,
                budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    return interior_margin(schedule, address, budgets).is_interior(k)


def interior_levels(schedule: CuttingSchedule, depth: int, k: int,
                    budgets: Budgets = DEFAULT_BUDGETS) -> Tuple[int, int]:
    """Inclusive range of k-interior levels at the given depth."""
    low, high = k, height(schedule, depth, budgets) - 1 - k
    if low > high:
        raise LevelOutOfRangeError(f"No {k}-interior levels at depth {depth}")
    return low, high


def sample_interior_addresses(schedule: CuttingSchedule, depth: int, k: int, count: int,
                              seed: int = DEFAULT_SEED,
                              budgets: Budgets = DEFAULT_BUDGETS) -> List[PointAddress]:
    """Draw `count` k-interior addresses uniformly at the given depth, reproducibly."""
    low, high = interior_levels(schedule, depth, k, budgets)
    rng = np.random.default_rng(seed)
    levels = rng.integers(low, high + 1, size=count)
    return [PointAddress(depth=depth, level=int(level)) for level in levels]


def sample_address_pairs(schedule: CuttingSchedule, depth: int, k: int, count: int,
                         seed: int = DEFAULT_SEED,
                         budgets: Budgets = DEFAULT_BUDGETS) -> List[Tuple[PointAddress, PointAddress]]:
    """Draw `count` pairs of distinct k-interior addresses at the given depth, reproducibly."""
    low, high = interior_levels(schedule, depth, k, budgets)
    if low == high:
        raise LevelOutOfRangeError(f"Only one {k}-interior level at depth {depth}")
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        first, second = (int(v) for v in rng.integers(low, high + 1, size=2))
        if first != second:
            pairs.append((PointAddress(depth=depth, level=first), PointAddress(depth=depth, level=second)))
    return pairs
