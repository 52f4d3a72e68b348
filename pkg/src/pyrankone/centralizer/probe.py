"""
The centralizer probe: language, exhaustive code search, invertibility and identification.

Each invertible radius-R code is compared with the shift powers sigma^k, |k| <= R; codes matching
none are flagged EXOTIC. For schedules with non-repeating evidence the offset of every invertible
code is also recovered independently through the phi matching on a sample window.
"""
from typing import Optional

from loguru import logger

from pyrankone.centralizer.codes import invertible_codes, matching_shift_powers, search_codes
from pyrankone.centralizer.exceptions import CentralizerError
from pyrankone.centralizer.language import WITNESS_DEPTH, language
from pyrankone.centralizer.models import BlockCode, LanguageWindow, ProbeEntry, ProbeReport
from pyrankone.centralizer.phi import normalized_phi_map, recover_offset
from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.recognizer.context import context_bound
from pyrankone.recognizer.exceptions import RecognizerError
from pyrankone.tower.classification import find_witness
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import first_stage_reaching, height
from pyrankone.tower.words import word_bits


def default_test_len(schedule: CuttingSchedule, radius: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """max(2R + 2 l(1), 3 h_2), with h_1 in place of l(1) when the context bound is undefined."""
    try:
        context = context_bound(schedule, 1, WITNESS_DEPTH, budgets).l
    except RecognizerError:
        context = height(schedule, 1, budgets)
    return max(2 * radius + 2 * context, 3 * height(schedule, 2, budgets))


def default_phi_window(schedule: CuttingSchedule, radius: int, budgets: Budgets = DEFAULT_BUDGETS) -> LanguageWindow:
    """A slice of a tower word six contexts long, taken from its middle, with the origin at its center."""
    context = context_bound(schedule, 1, WITNESS_DEPTH, budgets).l
    length = 6 * context + 2 * radius
    bits = word_bits(schedule, first_stage_reaching(schedule, 2 * length, budgets), budgets)
    start = (len(bits) - length) // 2
    return LanguageWindow(word=bits[start:start + length], origin=length // 2)


def _recovered(schedule: CuttingSchedule, window: LanguageWindow, code: BlockCode,
               budgets: Budgets) -> Optional[int]:
    try:
        return recover_offset(normalized_phi_map(schedule, window, code, budgets=budgets))
    except (CentralizerError, RecognizerError) as e:
        logger.warning(f"Offset recovery failed for code {code.signature}: {e}")
        return None


def centralizer_probe(schedule: CuttingSchedule, radius: int, test_len: Optional[int] = None,
                      inverse_radius: Optional[int] = None, budgets: Budgets = DEFAULT_BUDGETS,
                      workers: int = 1) -> ProbeReport:
    """
    Search every invertible radius-R code on the language of the schedule.

    Args:
        schedule (CuttingSchedule): The schedule.
        radius (int): Code radius R.
        test_len (int, optional): Test factor length L; `default_test_len` when omitted.
        inverse_radius (int, optional): Radius R' searched for inverses; R + 1 when omitted.
        budgets (Budgets): Size limits.
        workers (int): Processes used by the code search.

    Returns:
        ProbeReport: Counts and one entry per invertible code. Schedules without non-repeating
        evidence are probed anyway and marked `out_of_theorem_scope`.
    """
    out_of_scope = find_witness(schedule, WITNESS_DEPTH, budgets) is None
    if out_of_scope:
        logger.warning(
            f"'{schedule.label}' looks repeating up to stage {WITNESS_DEPTH}; the probe result is outside theorem scope"
        )
    test_len = default_test_len(schedule, radius, budgets) if test_len is None else test_len
    inverse_radius = radius + 1 if inverse_radius is None else inverse_radius
    lang = language(schedule, test_len, allow_repeating=True, budgets=budgets)
    search = search_codes(lang, radius, test_len, budgets, workers)
    invertible = invertible_codes(search.codes, lang, inverse_radius, test_len, budgets, workers)
    window = None if out_of_scope else default_phi_window(schedule, radius, budgets)
    entries = []
    for found in invertible:
        powers = tuple(matching_shift_powers(found.code, lang))
        entries.append(ProbeEntry(
            signature=found.code.signature,
            inverse_signature=found.inverse.signature,
            shift_powers=powers,
            exotic=not powers,
            recovered_offset=None if window is None else _recovered(schedule, window, found.code, budgets),
        ))
    report = ProbeReport(schedule_id=schedule.label, radius=radius, test_len=test_len,
                         inverse_radius=inverse_radius, language_stage=lang.stage,
                         table_space=2 ** search.factor_count, nodes=search.nodes,
                         language_preserving=len(search.codes), invertible=len(invertible),
                         entries=tuple(entries), out_of_theorem_scope=out_of_scope)
    if report.exotic_count:
        logger.warning(f"Probe on '{schedule.label}' found {report.exotic_count} EXOTIC invertible codes")
    logger.info(
        f"Probe on '{schedule.label}' R={radius} L={test_len}: {report.language_preserving} language-preserving, "
        f"{report.invertible} invertible, {report.exotic_count} EXOTIC"
    )
    return report
