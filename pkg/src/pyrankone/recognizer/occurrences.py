"""
Exact occurrence search and the expected/unexpected split.

An occurrence of W_n in W_m is expected when it starts at a position of E_{m,n}. Every other
occurrence straddles two consecutive expected ones.
"""
from bisect import bisect_left
from typing import List

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.recognizer.exceptions import EmptyNeedleError
from pyrankone.recognizer.models import OccurrenceReport, UnexpectedOverlap
from pyrankone.tower.exceptions import StageRangeError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.words import expected_positions, word_bits


def occurrences(haystack: str, needle: str) -> List[int]:
    """
    Return every start position of `needle` in `haystack`, overlapping matches included.

    >>> occurrences("001000010010010000100", "00100")
    [0, 5, 8, 11, 16]
    """
    if not needle:
        raise EmptyNeedleError("Cannot search for an empty word")
    positions = []
    p = haystack.find(needle)
    while p != -1:
        positions.append(p)
        p = haystack.find(needle, p + 1)
    return positions


def unexpected_occurrences(schedule: CuttingSchedule, m: int, n: int,
                           budgets: Budgets = DEFAULT_BUDGETS) -> OccurrenceReport:
    """
    Split the occurrences of W_n in W_m into expected and unexpected ones.

    Args:
        schedule (CuttingSchedule): The schedule.
        m (int): Outer stage.
        n (int): Inner stage, n < m.
        budgets (Budgets): Size limits.

    Returns:
        OccurrenceReport: The partition, with the expected starts each unexpected start overlaps.
    """
    if not m > n >= 0:
        raise StageRangeError(f"Occurrence reports need m > n >= 0, got m={m}, n={n}")
    outer = word_bits(schedule, m, budgets)
    inner = word_bits(schedule, n, budgets)
    found = occurrences(outer, inner)
    expected = expected_positions(schedule, m, n, budgets).positions
    expected_set = set(expected)
    unexpected = tuple(p for p in found if p not in expected_set)
    overlaps = []
    for start in unexpected:
        idx = bisect_left(expected, start)
        right = expected[idx] if idx < len(expected) and expected[idx] < start + len(inner) else None
        overlaps.append(UnexpectedOverlap(start=start, left=expected[idx - 1], right=right))
    return OccurrenceReport(m=m, n=n, all=tuple(found), expected=expected, unexpected=unexpected,
                            overlaps=tuple(overlaps))
