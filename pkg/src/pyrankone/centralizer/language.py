"""
The finite language of the subshift generated by W_inf.

Factors of length at most L are read from W_M, starting at the first stage with h_M >= L and
moving up until W_M and W_{M+1} have the same factors and the table is bi-extendable. The subshift
is only used through this table.
"""
from typing import Dict, FrozenSet, Tuple

from loguru import logger

from pyrankone.centralizer.exceptions import NoStabilizationError, RepeatingScheduleError
from pyrankone.centralizer.models import LanguageTable
from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.tower.classification import find_witness
from pyrankone.tower.exceptions import StageRangeError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import first_stage_reaching, height
from pyrankone.tower.words import word_bits

# Stages searched for a non-constant-gap witness before a schedule is treated as repeating.
WITNESS_DEPTH = 8


def _longest_factors(word: str, length: int) -> FrozenSet[str]:
    return frozenset(word[i:i + length] for i in range(len(word) - length + 1))


def _all_factors(longest: FrozenSet[str], max_len: int) -> Dict[int, Tuple[str, ...]]:
    table = {}
    for k in range(1, max_len + 1):
        table[k] = tuple(sorted({w[j:j + k] for w in longest for j in range(max_len - k + 1)}))
    return table


def language(schedule: CuttingSchedule, max_len: int, allow_repeating: bool = False,
             budgets: Budgets = DEFAULT_BUDGETS, witness_depth: int = WITNESS_DEPTH) -> LanguageTable:
    """
    Build the table of factors of length 1..max_len.

    Args:
        schedule (CuttingSchedule): The schedule.
        max_len (int): Longest factor length L.
        allow_repeating (bool): Build the table even without non-repeating evidence.
        budgets (Budgets): Size limits; `max_stage` bounds the stabilization search.
        witness_depth (int): Depth of the non-repeating check.

    Returns:
        LanguageTable: Factor-closed, bi-extendable table.

    Raises:
        RepeatingScheduleError: If no witness exists and `allow_repeating` is False.
        NoStabilizationError: If no stage up to `budgets.max_stage` certifies the table.
        BudgetExceededError: If a word exceeds the size budget.
    """
    if max_len < 1:
        raise StageRangeError(f"Language tables need max_len >= 1, got {max_len}")
    if not allow_repeating and find_witness(schedule, witness_depth, budgets) is None:
        raise RepeatingScheduleError(
            f"'{schedule.label}' shows no non-constant gaps up to stage {witness_depth}; "
            "pass allow_repeating to build its language anyway"
        )
    stage = first_stage_reaching(schedule, max_len + 1, budgets)
    current = _longest_factors(word_bits(schedule, stage, budgets), max_len)
    while stage < budgets.max_stage:
        following = _longest_factors(word_bits(schedule, stage + 1, budgets), max_len)
        if following == current:
            table = LanguageTable(schedule_id=schedule.label, max_len=max_len, stage=stage,
                                  first_height=height(schedule, 1, budgets),
                                  factors=_all_factors(current, max_len))
            if table.is_bi_extendable():
                logger.debug(f"Language of '{schedule.label}' up to length {max_len} certified at stage {stage}")
                return table
        stage, current = stage + 1, following
    logger.error(f"Factors of length {max_len} of '{schedule.label}' did not stabilize by stage {budgets.max_stage}")
    raise NoStabilizationError(
        f"Factors of length {max_len} of '{schedule.label}' did not stabilize by stage {budgets.max_stage}"
    )
