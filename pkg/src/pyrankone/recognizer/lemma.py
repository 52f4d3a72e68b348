"""
Exhaustive check that an occurrence overlapping an expected one repeats its spacer gap.

Let i be an expected start of W_n in W_m followed by r spacers and another expected start, and
let j be an occurrence with i < j < i + h_n followed by s spacers and another occurrence. Then
r == s. `lemma_gap_check` walks every such configuration of W_m.
"""
from bisect import bisect_left, bisect_right
from typing import List

from loguru import logger

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.recognizer.models import LemmaCheckReport, LemmaViolation
from pyrankone.recognizer.occurrences import occurrences
from pyrankone.tower.exceptions import StageRangeError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.words import expected_positions, word_bits


def _spacer_run(word: str, start: int) -> int:
    end = start
    while end < len(word) and word[end] == "1":
        end += 1
    return end - start


def lemma_gap_check(schedule: CuttingSchedule, m: int, n: int,
                    budgets: Budgets = DEFAULT_BUDGETS) -> LemmaCheckReport:
    """
    Check every configuration of W_n occurrences in W_m.

    Args:
        schedule (CuttingSchedule): The schedule.
        m (int): Outer stage.
        n (int): Inner stage, n < m.
        budgets (Budgets): Size limits.

    Returns:
        LemmaCheckReport: Counts of examined configurations and any violations (i, j, r, s).
    """
    if not m > n >= 0:
        raise StageRangeError(f"Lemma checks need m > n >= 0, got m={m}, n={n}")
    outer = word_bits(schedule, m, budgets)
    inner = word_bits(schedule, n, budgets)
    h_n = len(inner)
    found = occurrences(outer, inner)
    expected = expected_positions(schedule, m, n, budgets).positions
    configurations, complete = 0, 0
    violations: List[LemmaViolation] = []
    for i, successor in zip(expected, expected[1:]):
        r = successor - i - h_n
        for j in found[bisect_right(found, i):bisect_left(found, i + h_n)]:
            configurations += 1
            s = _spacer_run(outer, j + h_n)
            following = j + h_n + s
            if outer[following:following + h_n] != inner:
                continue
            complete += 1
            if r != s:
                violations.append(LemmaViolation(i=i, j=j, r=r, s=s))
    if violations:
        logger.warning(f"{len(violations)} gap violations for W_{n} in W_{m} of '{schedule.label}'")
    return LemmaCheckReport(m=m, n=n, configurations=configurations, complete_configurations=complete,
                            violations=tuple(violations))


def lemma_suite(schedule: CuttingSchedule, max_stage: int,
                budgets: Budgets = DEFAULT_BUDGETS) -> List[LemmaCheckReport]:
    """Run `lemma_gap_check` for every pair n < m <= max_stage."""
    reports = []
    for m in range(1, max_stage + 1):
        for n in range(m):
            report = lemma_gap_check(schedule, m, n, budgets)
            logger.debug(
                f"'{schedule.label}' m={m} n={n}: {report.configurations} configurations, "
                f"{report.complete_configurations} complete, {len(report.violations)} violations"
            )
            reports.append(report)
    return reports
