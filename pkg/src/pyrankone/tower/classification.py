"""
This module classifies the spacer behavior of a schedule up to a finite depth.

Three outcomes mirror the trichotomy of W_inf: periodic (`RepeatingConsistent`), non-periodic
with bounded spacer runs (`NonRepeatingBounded`) and non-periodic with spacer runs that keep
growing (`NonRepeatingUnbounded`). Every verdict only describes the stages that were built.

A non-constant-gap witness (n, k, r, r') records two distinct spacer gaps between consecutive
expected occurrences of W_n inside W_k. Its stage k fixes the context bound of the recognizer.
"""
from typing import List, Optional

import numpy as np
from loguru import logger

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.tower.exceptions import StageRangeError
from pyrankone.tower.models import CuttingSchedule, GapWitness, SpacerClassification
from pyrankone.tower.periodicity import longest_spacer_run, minimal_period
from pyrankone.tower.schedule import height
from pyrankone.tower.words import expected_array, word_bits


def expected_gaps(schedule: CuttingSchedule, k: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> np.ndarray:
    """Spacer counts between consecutive expected occurrences of W_n in W_k."""
    positions = expected_array(schedule, k, n, budgets)
    return np.diff(positions) - height(schedule, n, budgets)


def nonconstant_gap_witness(schedule: CuttingSchedule, n: int, max_stage: int,
                            budgets: Budgets = DEFAULT_BUDGETS) -> Optional[GapWitness]:
    """
    Find the smallest k <= max_stage where the gaps between expected W_n occurrences in W_k vary.

    Args:
        schedule (CuttingSchedule): The schedule.
        n (int): Inner stage.
        max_stage (int): Last outer stage tried.
        budgets (Budgets): Size limits.

    Returns:
        GapWitness | None: (n, k, r, r') with r the first gap and r' the first gap differing from it,
        or None if every W_k up to max_stage has constant gaps.
    """
    if n < 0:
        raise StageRangeError(f"Stage index must be nonnegative, got {n}")
    for k in range(n + 1, max_stage + 1):
        gaps = expected_gaps(schedule, k, n, budgets)
        different = np.flatnonzero(gaps != gaps[0])
        if different.size:
            witness = GapWitness(n=n, k=k, r=int(gaps[0]), r_prime=int(gaps[different[0]]))
            logger.debug(f"Gap witness for '{schedule.label}': {witness}")
            return witness
    return None


def find_witness(schedule: CuttingSchedule, max_stage: int,
                 budgets: Budgets = DEFAULT_BUDGETS) -> Optional[GapWitness]:
    """First witness over inner stages 1, 2, ... (stage 0 as well when max_stage is 1)."""
    first = 0 if max_stage <= 1 else 1
    for n in range(first, max_stage):
        witness = nonconstant_gap_witness(schedule, n, max_stage, budgets)
        if witness is not None:
            return witness
    return None


def classify(schedule: CuttingSchedule, max_stage: int,
             budgets: Budgets = DEFAULT_BUDGETS) -> SpacerClassification:
    """
    Classify spacer behavior using W_0, ..., W_maxStage.

    Args:
        schedule (CuttingSchedule): The schedule.
        max_stage (int): Depth of the evidence, at least 1.
        budgets (Budgets): Size limits.

    Returns:
        SpacerClassification: The depth-qualified verdict.

    Raises:
        StageRangeError: If max_stage < 1.
        BudgetExceededError: If W_maxStage exceeds the word budget.
    """
    if max_stage < 1:
        raise StageRangeError(f"Classification needs max_stage >= 1, got {max_stage}")
    runs: List[int] = [longest_spacer_run(word_bits(schedule, n, budgets)) for n in range(max_stage + 1)]
    growth = tuple(n for n in range(1, max_stage + 1) if runs[n] > runs[n - 1])
    witness = find_witness(schedule, max_stage, budgets)
    if witness is None:
        period = minimal_period(word_bits(schedule, max_stage, budgets))
        previous = minimal_period(word_bits(schedule, max_stage - 1, budgets))
        if period != previous:
            logger.warning(
                f"'{schedule.label}': minimal period changed from {previous} to {period} at stage {max_stage}"
            )
        return SpacerClassification(verdict="RepeatingConsistent", depth=max_stage, period=period,
                                    period_stable=period == previous, spacer_runs=tuple(runs),
                                    growth_stages=growth)
    if runs[-1] == runs[-2]:
        return SpacerClassification(verdict="NonRepeatingBounded", depth=max_stage, witness=witness,
                                    a_max=runs[-1], spacer_runs=tuple(runs), growth_stages=growth)
    return SpacerClassification(verdict="NonRepeatingUnbounded", depth=max_stage, witness=witness,
                                spacer_runs=tuple(runs), growth_stages=growth)
