"""
Tower words W_n, expected-position sets E_{m,n} and prefixes of W_inf.

W_0 = 0^{h0} and W_{n+1} = W_n 1^{a_1} W_n ... 1^{a_{q-1}} W_n. Expected sets are built
compositionally: E_{i+1,n} is the outer sum of the copy offsets E_{i+1,i} with E_{i,n}, which is
already sorted because every block of E_{i,n} fits below the next copy offset.
"""
from functools import lru_cache
from typing import Tuple

import numpy as np
from loguru import logger

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.tower.exceptions import BudgetExceededError, StageRangeError
from pyrankone.tower.models import CuttingSchedule, ExpectedSet, TowerWord
from pyrankone.tower.schedule import first_stage_reaching, height, heights


def _check_length(length: int, what: str, budgets: Budgets) -> None:
    if length > budgets.max_word_length:
        logger.error(f"{what} needs {length} symbols, budget is {budgets.max_word_length}")
        raise BudgetExceededError(
            f"{what} needs {length} symbols, above max_word_length={budgets.max_word_length}"
        )


# entries longer than this are rebuilt on each call instead of being kept in the caches
CACHED_SYMBOLS = 1 << 16


def _build_bits(schedule: CuttingSchedule, n: int) -> str:
    if n == 0:
        return "0" * schedule.h0
    previous = _bits(schedule, n - 1)
    rule = schedule.stage_rule(n - 1)
    pieces = [previous]
    for spacer in rule.spacers:
        pieces.append("1" * spacer)
        pieces.append(previous)
    return "".join(pieces)


_cached_bits = lru_cache(maxsize=64)(_build_bits)


def _bits(schedule: CuttingSchedule, n: int) -> str:
    if height(schedule, n) > CACHED_SYMBOLS:
        return _build_bits(schedule, n)
    return _cached_bits(schedule, n)


def word(schedule: CuttingSchedule, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> TowerWord:
    """
    Build the tower word W_n.

    Args:
        schedule (CuttingSchedule): The schedule.
        n (int): Stage, n >= 0.
        budgets (Budgets): Size limits.

    Returns:
        TowerWord: W_n, of length h_n.

    Raises:
        BudgetExceededError: If h_n exceeds `budgets.max_word_length`.
    """
    _check_length(height(schedule, n, budgets), f"W_{n}", budgets)
    return TowerWord(stage=n, bits=_bits(schedule, n))


def word_bits(schedule: CuttingSchedule, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> str:
    return word(schedule, n, budgets).bits


@lru_cache(maxsize=256)
def _copy_offsets(schedule: CuttingSchedule, n: int, h_n: int) -> Tuple[int, ...]:
    rule = schedule.stage_rule(n)
    offsets = [0]
    for spacer in rule.spacers:
        offsets.append(offsets[-1] + h_n + spacer)
    return tuple(offsets)


def copy_offsets(schedule: CuttingSchedule, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> Tuple[int, ...]:
    """Start positions of the q_n copies of W_n inside W_{n+1}, i.e. E_{n+1,n}."""
    return _copy_offsets(schedule, n, height(schedule, n, budgets))


def _build_expected_array(schedule: CuttingSchedule, m: int, n: int) -> np.ndarray:
    positions = np.zeros(1, dtype=np.int64)
    for stage in range(n, m):
        offsets = np.asarray(_copy_offsets(schedule, stage, height(schedule, stage)), dtype=np.int64)
        positions = np.add.outer(offsets, positions).ravel()
    positions.setflags(write=False)
    return positions


_cached_expected_array = lru_cache(maxsize=64)(_build_expected_array)


def expected_array(schedule: CuttingSchedule, m: int, n: int,
                   budgets: Budgets = DEFAULT_BUDGETS) -> np.ndarray:
    """
    E_{m,n} as a read-only sorted int64 array.

    Raises:
        StageRangeError: If not m >= n >= 0.
        BudgetExceededError: If |E_{m,n}| exceeds `budgets.max_word_length`.
    """
    if not m >= n >= 0:
        raise StageRangeError(f"Expected positions need m >= n >= 0, got m={m}, n={n}")
    heights(schedule, m, budgets)
    size = int(np.prod([schedule.stage_rule(i).q for i in range(n, m)], dtype=object))
    _check_length(size, f"E_{{{m},{n}}}", budgets)
    if size > CACHED_SYMBOLS:
        return _build_expected_array(schedule, m, n)
    return _cached_expected_array(schedule, m, n)


def expected_positions(schedule: CuttingSchedule, m: int, n: int,
                       budgets: Budgets = DEFAULT_BUDGETS) -> ExpectedSet:
    """
    Build E_{m,n}, the start positions of expected occurrences of W_n in W_m.

    Args:
        schedule (CuttingSchedule): The schedule.
        m (int): Outer stage.
        n (int): Inner stage, n <= m.
        budgets (Budgets): Size limits.

    Returns:
        ExpectedSet: Sorted positions, from 0 to h_m - h_n.
    """
    positions = expected_array(schedule, m, n, budgets)
    return ExpectedSet(m=m, n=n, positions=tuple(int(p) for p in positions))


def _prefix(schedule: CuttingSchedule, n: int, length: int) -> str:
    if length <= 0:
        return ""
    h_n = height(schedule, n)
    if length >= h_n:
        return _bits(schedule, n)
    if n == 0:
        return "0" * length
    previous = height(schedule, n - 1)
    if previous >= length:
        return _prefix(schedule, n - 1, length)
    pieces, remaining = [], length
    rule = schedule.stage_rule(n - 1)
    for spacer in (None,) + rule.spacers:
        if spacer is not None:
            pieces.append("1" * min(spacer, remaining))
            remaining -= min(spacer, remaining)
        if remaining <= 0:
            break
        pieces.append(_prefix(schedule, n - 1, min(previous, remaining)))
        remaining -= min(previous, remaining)
        if remaining <= 0:
            break
    return "".join(pieces)


def infinite_word_prefix(schedule: CuttingSchedule, length: int, budgets: Budgets = DEFAULT_BUDGETS) -> str:
    """
    The first `length` symbols of W_inf.

    W_n is a prefix of W_{n+1}, so the prefix of the first W_n with h_n >= length is returned
    without materializing W_n itself.

    Raises:
        BudgetExceededError: If `length` exceeds `budgets.max_word_length`.
    """
    if length < 1:
        raise StageRangeError(f"Prefix length must be positive, got {length}")
    _check_length(length, "W_inf prefix", budgets)
    n = first_stage_reaching(schedule, length, budgets)
    return _prefix(schedule, n, length)
