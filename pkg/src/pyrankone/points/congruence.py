"""
This module splits the gap function of a return window into residue classes modulo r_n.

Returns are indexed from the anchor, the first return whose point sits at the base of the stage-n
tower. For a schedule with unbounded spacer runs, Psi is constant on every residue class mod r_n
except one; `psi_congruence_report` checks that on a finite window. `congruence_stage_search`
looks, for each return, for a stage at which its own class becomes constant.
"""
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.points.exceptions import AnchorNotFoundError, StageOutOfRangeError, TooFewReturnsError
from pyrankone.points.models import (
    CongruenceClass,
    CongruenceReport,
    GapFunction,
    PointAddress,
    StageSearchEntry,
    ZWindow,
)
from pyrankone.points.returns import psi, return_word, z_window
from pyrankone.tower.classification import classify
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.words import expected_array


def _anchor_index(schedule: CuttingSchedule, window: ZWindow, n: int, budgets: Budgets) -> int:
    address = window.address
    starts = expected_array(schedule, address.depth, n, budgets)
    aligned = np.isin(address.level + np.asarray(window.returns, dtype=np.int64), starts)
    hits = np.flatnonzero(aligned)
    if not hits.size:
        raise AnchorNotFoundError(f"No return around {address} sits at the base of the stage-{n} tower")
    return int(hits[0])


def _residue_classes(gaps: GapFunction, anchor: int, r: int) -> Dict[int, List[int]]:
    classes: Dict[int, List[int]] = {residue: [] for residue in range(r)}
    for idx, value in enumerate(gaps.values):
        classes[(idx - anchor) % r].append(value)
    return classes


def psi_congruence_report(schedule: CuttingSchedule, address: PointAddress, radius: int, n: int,
                          budgets: Budgets = DEFAULT_BUDGETS) -> CongruenceReport:
    """
    Per-residue analysis of Psi along the window of the given radius.

    Args:
        schedule (CuttingSchedule): The schedule.
        address (PointAddress): The point.
        radius (int): Window radius.
        n (int): Stage fixing the modulus r_n, 1 <= n <= depth.
        budgets (Budgets): Size limits.

    Returns:
        CongruenceReport: Classes in residue order; `claim_holds` is set for unbounded schedules only.

    Raises:
        TooFewReturnsError: If the window has fewer than 3 * r_n returns.
        AnchorNotFoundError: If no return is aligned with the stage-n tower base.
    """
    if not 1 <= n <= address.depth:
        raise StageOutOfRangeError(f"Stage {n} is outside [1, {address.depth}]")
    window = z_window(schedule, address, radius, budgets)
    r = return_word(schedule, n, budgets).r
    if len(window.returns) < 3 * r:
        raise TooFewReturnsError(
            f"Congruence analysis mod r_{n} = {r} needs {3 * r} returns, window has {len(window.returns)}"
        )
    anchor = _anchor_index(schedule, window, n, budgets)
    classes = [
        CongruenceClass(residue=residue, values=tuple(values),
                        verdict="constant" if len(set(values)) <= 1 else "varying")
        for residue, values in sorted(_residue_classes(psi(window), anchor, r).items())
    ]
    constant = sum(1 for c in classes if c.verdict == "constant")
    claim_holds = None
    if classify(schedule, address.depth, budgets).verdict == "NonRepeatingUnbounded":
        claim_holds = constant >= r - 1
        if not claim_holds:
            logger.warning(f"Only {constant} of {r} residue classes are constant around {address} at stage {n}")
    return CongruenceReport(address=address, radius=radius, stage=n, r=r, anchor=window.returns[anchor],
                            classes=tuple(classes), constant_classes=constant,
                            varying_classes=len(classes) - constant, claim_holds=claim_holds)


def congruence_stage_search(schedule: CuttingSchedule, address: PointAddress, radius: int,
                            budgets: Budgets = DEFAULT_BUDGETS) -> Tuple[StageSearchEntry, ...]:
    """
    For each return, the least stage 2 <= n <= depth whose residue class through it is constant.

    A class counts as constant only when it holds at least two observations; `stage` is None when
    no stage within the depth qualifies, which says nothing about deeper stages.
    """
    window = z_window(schedule, address, radius, budgets)
    gaps = psi(window)
    found: List[Optional[int]] = [None] * len(gaps.values)
    for n in range(2, address.depth + 1):
        try:
            anchor = _anchor_index(schedule, window, n, budgets)
        except AnchorNotFoundError:
            continue
        r = return_word(schedule, n, budgets).r
        classes = _residue_classes(gaps, anchor, r)
        for idx in range(len(gaps.values)):
            values = classes[(idx - anchor) % r]
            if found[idx] is None and len(values) >= 2 and len(set(values)) == 1:
                found[idx] = n
    return tuple(StageSearchEntry(position=i, stage=stage) for i, stage in zip(gaps.domain, found))
