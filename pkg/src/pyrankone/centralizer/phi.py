"""
This module matches the stage-1 returns of a point x with those of g(x) for a block code g.

Returns are recognized directly in finite words with `ExpectedStartRecognizer`, so only the part of
each word with a full recognition context is decided. Every return i of x that is safe, meaning
the interval (i - h_1, i] lies inside the decided part of g(x), is paired with the unique return
phi(i) of g(x) in that interval. The offset m(i) = i - phi(i) must be one stage-0 base level of W_1
shared by every pair; if it is not, g is pre-composed with a shift power and the matching is retried.
"""
from bisect import bisect_left, bisect_right
from typing import List, Optional, Tuple

import tenacity
from loguru import logger

from pyrankone.centralizer.exceptions import NormalizationRequiredError, OffsetsInconsistentError
from pyrankone.centralizer.models import BlockCode, LanguageWindow, PhiMatching, PsiViolation
from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.points.exceptions import TooFewReturnsError
from pyrankone.points.models import GapFunction
from pyrankone.recognizer.context import ExpectedStartRecognizer
from pyrankone.recognizer.exceptions import InsufficientContextError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.words import expected_positions


def phi_map(schedule: CuttingSchedule, window: LanguageWindow, code: BlockCode,
            context_stage: Optional[int] = None, shift: int = 0, max_stage: int = 8,
            budgets: Budgets = DEFAULT_BUDGETS,
            recognizer: Optional[ExpectedStartRecognizer] = None) -> PhiMatching:
    """
    Match the returns of x with those of sigma^shift g(x).

    Args:
        schedule (CuttingSchedule): The schedule generating the language.
        window (LanguageWindow): The point x as an in-language word with an origin.
        code (BlockCode): The code g.
        context_stage (int, optional): Template stage for recognition.
        shift (int): Shift power pre-composed with g.
        max_stage (int): Depth of the witness search behind the context bound.
        budgets (Budgets): Size limits.
        recognizer (ExpectedStartRecognizer, optional): A stage-1 recognizer to reuse.

    Returns:
        PhiMatching: Order-preserving pairs over the safe returns of x.

    Raises:
        NormalizationRequiredError: If a safe return has no partner at a stage-0 base offset, or the
            offsets disagree.
        InsufficientContextError: If the window is too short to decide any pair.
    """
    recognizer = recognizer or ExpectedStartRecognizer(schedule, 1, context_stage, max_stage, budgets)
    h_1 = len(recognizer.inner)
    l = recognizer.context_length
    image = code.apply(window.word)
    # index t of g(x) sits at coordinate t + R - origin before the shift
    image_origin = window.origin - code.radius + shift
    zx = [p - window.origin for p in recognizer.expected_starts(window.word)]
    zgx = [t - image_origin for t in recognizer.expected_starts(image)]
    if not zx or not zgx:
        raise InsufficientContextError(
            f"Window of length {len(window.word)} leaves no decided returns with context {l}"
        )
    left, right = -image_origin, len(image) - l - image_origin
    base_levels = set(expected_positions(schedule, 1, 0, budgets).positions)
    pairs: List[Tuple[int, int]] = []
    for i in zx:
        if i - h_1 + 1 < left or i > right:
            continue
        lo, hi = bisect_right(zgx, i - h_1), bisect_right(zgx, i)
        if lo == hi:
            raise NormalizationRequiredError(f"Return {i} has no partner in ({i - h_1}, {i}] at shift {shift}")
        j = zgx[lo]
        if i - j not in base_levels:
            raise NormalizationRequiredError(
                f"Return {i} pairs with {j} at offset {i - j}, not a stage-0 base level, at shift {shift}"
            )
        pairs.append((i, j))
    if not pairs:
        raise InsufficientContextError(f"No return of x is safe for matching with context {l}")
    offsets = tuple(i - j for i, j in pairs)
    # base levels alone admit sigma^k with k < 0 pairing across a spacer, e.g. offsets {3, 4} on 00100
    if len(set(offsets)) > 1:
        raise NormalizationRequiredError(
            f"Offsets i - phi(i) take values {sorted(set(offsets))} at shift {shift}"
        )
    images = [j for _, j in pairs]
    covered = zgx[bisect_left(zgx, images[0]):bisect_right(zgx, images[-1])]
    return PhiMatching(zx=tuple(zx), zgx=tuple(zgx), pairs=tuple(pairs), offsets=offsets,
                       recovered_offset=offsets[0] - shift, normalization_shift=shift, first_height=h_1,
                       surjective=covered == images)


def shift_sequence(limit: int) -> List[int]:
    """0, 1, -1, 2, -2, ..., limit, -limit."""
    shifts = [0]
    for s in range(1, limit + 1):
        shifts.extend((s, -s))
    return shifts


def normalized_phi_map(schedule: CuttingSchedule, window: LanguageWindow, code: BlockCode,
                       context_stage: Optional[int] = None, max_stage: int = 8,
                       budgets: Budgets = DEFAULT_BUDGETS) -> PhiMatching:
    """
    `phi_map`, retried with shifts 0, 1, -1, 2, -2, ... up to +-(R + h_1) until it matches.

    Raises:
        NormalizationRequiredError: If no shift in range yields a matching.
    """
    recognizer = ExpectedStartRecognizer(schedule, 1, context_stage, max_stage, budgets)
    shifts = shift_sequence(code.radius + len(recognizer.inner))
    pending = iter(shifts)
    retrying = tenacity.Retrying(stop=tenacity.stop_after_attempt(len(shifts)),
                                 retry=tenacity.retry_if_exception_type(NormalizationRequiredError),
                                 after=lambda state: logger.debug(
                                     f"Phi matching attempt {state.attempt_number} failed: {state.outcome.exception()}"
                                 ),
                                 reraise=True)
    # no waiting: each attempt consumes the next shift power, so the attempts walk shift_sequence in order
    for attempt in retrying:
        with attempt:
            matching = phi_map(schedule, window, code, context_stage, next(pending), max_stage, budgets,
                               recognizer)
    logger.debug(f"Phi matching on '{schedule.label}' found at normalization shift {matching.normalization_shift}")
    return matching


def return_gaps(returns: Tuple[int, ...]) -> GapFunction:
    return GapFunction(domain=returns[:-1], values=tuple(b - a for a, b in zip(returns, returns[1:])))


def psi_conjugation_check(matching: PhiMatching, psi_x: Optional[GapFunction] = None,
                          psi_gx: Optional[GapFunction] = None) -> List[PsiViolation]:
    """
    Compare Psi_x(i) with Psi_gx(phi(i)) for every matched pair followed by another matched pair.

    Raises:
        TooFewReturnsError: If the matching has fewer than two pairs.
    """
    if len(matching.pairs) < 2:
        raise TooFewReturnsError(f"Psi conjugation needs two matched pairs, got {len(matching.pairs)}")
    psi_x = psi_x or return_gaps(matching.zx)
    psi_gx = psi_gx or return_gaps(matching.zgx)
    gaps_x = dict(zip(psi_x.domain, psi_x.values))
    gaps_gx = dict(zip(psi_gx.domain, psi_gx.values))
    violations = []
    for i, j in matching.pairs[:-1]:
        if gaps_x.get(i) != gaps_gx.get(j):
            violations.append(PsiViolation(i=i, phi=j, psi_x=gaps_x.get(i), psi_gx=gaps_gx.get(j)))
    if violations:
        logger.warning(f"{len(violations)} Psi conjugation violations")
    return violations


def recover_offset(matching: PhiMatching) -> int:
    """
    The power k with g = sigma^k implied by the matching.

    Raises:
        InsufficientContextError: If the matching is empty.
        OffsetsInconsistentError: If the offsets i - phi(i) disagree.
    """
    if not matching.offsets:
        raise InsufficientContextError("Cannot recover an offset from an empty matching")
    if len(set(matching.offsets)) > 1:
        raise OffsetsInconsistentError(f"Offsets i - phi(i) take values {sorted(set(matching.offsets))}")
    return matching.offsets[0] - matching.normalization_shift
