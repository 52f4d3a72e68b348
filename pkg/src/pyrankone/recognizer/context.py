"""
This module decides whether an occurrence of W_n is expected by looking at a bounded context.

If a subword of length l(n) = 2 * h_k + h_n begins with an expected occurrence of W_n, every other
occurrence of that subword begins with an expected occurrence too; k is the stage of a
non-constant-gap witness for n. `context_bound` returns this closed form, `minimal_context` the
smallest length that works on all W_m up to a given stage, and `ExpectedStartRecognizer` turns the
statement into a classifier built from a template set of stage-M contexts.
"""
from typing import FrozenSet, List, Optional

from loguru import logger

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.recognizer.exceptions import NoWitnessError, NotAnOccurrenceError
from pyrankone.recognizer.models import ContextBound, StartVerdict
from pyrankone.recognizer.occurrences import occurrences
from pyrankone.tower.classification import nonconstant_gap_witness
from pyrankone.tower.exceptions import StageRangeError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import height
from pyrankone.tower.words import expected_positions, word_bits

# Templates are drawn from the first stage beyond the witness that is this many contexts long.
TEMPLATE_CONTEXT_FACTOR = 8


def context_bound(schedule: CuttingSchedule, n: int, max_stage: int,
                  budgets: Budgets = DEFAULT_BUDGETS) -> ContextBound:
    """
    The closed-form context length l(n) = 2 * h_k + h_n.

    Raises:
        NoWitnessError: If the gaps between expected W_n occurrences stay constant up to max_stage.
    """
    witness = nonconstant_gap_witness(schedule, n, max_stage, budgets)
    if witness is None:
        raise NoWitnessError(
            f"No non-constant gaps for W_{n} up to stage {max_stage} in '{schedule.label}'; "
            "the context bound needs a non-repeating schedule"
        )
    l = 2 * height(schedule, witness.k, budgets) + height(schedule, n, budgets)
    return ContextBound(n=n, l=l, witness_stage=witness.k, kind="paper-bound")


def longest_common_extension(word: str, a: int, b: int, cap: int) -> int:
    """Largest L <= cap with word[a:a + L] == word[b:b + L]."""
    low, high = 0, cap
    while low < high:
        mid = (low + high + 1) // 2
        if word[a:a + mid] == word[b:b + mid]:
            low = mid
        else:
            high = mid - 1
    return low


def minimal_context(schedule: CuttingSchedule, n: int, max_stage: int,
                    budgets: Budgets = DEFAULT_BUDGETS) -> ContextBound:
    """
    The smallest context length that separates expected from unexpected W_n starts in every W_m, n < m <= max_stage.

    A length l fails on W_m exactly when some expected start e and unexpected start u agree on l
    symbols and both subwords fit in W_m. Taking one more than the longest such agreement over all
    pairs gives the answer, and h_n when there are no unexpected starts.

    Returns:
        ContextBound: kind `brute-minimal`; `witness_stage` is the stage that forced the value.
    """
    if max_stage <= n:
        raise StageRangeError(f"minimal_context needs max_stage > n, got n={n}, max_stage={max_stage}")
    h_n = height(schedule, n, budgets)
    inner = word_bits(schedule, n, budgets)
    best, forcing_stage = h_n, None
    for m in range(n + 1, max_stage + 1):
        outer = word_bits(schedule, m, budgets)
        expected = expected_positions(schedule, m, n, budgets).positions
        expected_set = set(expected)
        unexpected = [p for p in occurrences(outer, inner) if p not in expected_set]
        for u in unexpected:
            for e in expected:
                room = len(outer) - max(e, u)
                agreement = longest_common_extension(outer, e, u, room)
                if agreement + 1 > best:
                    best, forcing_stage = agreement + 1, m
    logger.debug(f"Minimal context for W_{n} in '{schedule.label}' up to stage {max_stage}: {best}")
    return ContextBound(n=n, l=best, witness_stage=forcing_stage, kind="brute-minimal")


def default_template_stage(schedule: CuttingSchedule, n: int, max_stage: int,
                           budgets: Budgets = DEFAULT_BUDGETS) -> int:
    bound = context_bound(schedule, n, max_stage, budgets)
    stage = bound.witness_stage + 1
    while height(schedule, stage, budgets) < TEMPLATE_CONTEXT_FACTOR * bound.l:
        stage += 1
    return stage


class ExpectedStartRecognizer:
    """
    Classify occurrences of W_n in arbitrary language words as expected or unexpected.

    Attributes:
        schedule (CuttingSchedule): The schedule.
        n (int): Stage of the recognized word W_n.
        stage (int): Stage M whose expected contexts form the template set.
        bound (ContextBound): The context length used.
        templates (FrozenSet[str]): Length-l subwords of W_M starting at E_{M,n}.
        stable (bool): Whether W_{M+1} yields the same template set.
    """
    def __init__(self, schedule: CuttingSchedule, n: int, stage: Optional[int] = None,
                 max_stage: int = 8, budgets: Budgets = DEFAULT_BUDGETS) -> None:
        """
        Args:
            schedule (CuttingSchedule): The schedule.
            n (int): Stage of the recognized word.
            stage (int, optional): Template stage M; chosen from the context bound when omitted.
            max_stage (int): Depth of the witness search.
            budgets (Budgets): Size limits.

        Raises:
            NoWitnessError: If the context bound is undefined.
        """
        self.schedule = schedule
        self.n = n
        self.bound = context_bound(schedule, n, max_stage, budgets)
        self.stage = default_template_stage(schedule, n, max_stage, budgets) if stage is None else stage
        self.inner = word_bits(schedule, n, budgets)
        self.templates = self._templates(self.stage, budgets)
        self.stable = self.templates == self._templates(self.stage + 1, budgets)
        if not self.stable:
            logger.warning(
                f"Template set for W_{n} in '{schedule.label}' changes between stages {self.stage} "
                f"and {self.stage + 1}; recognition may report false Unexpected verdicts"
            )

    def _templates(self, stage: int, budgets: Budgets) -> FrozenSet[str]:
        outer = word_bits(self.schedule, stage, budgets)
        l = self.bound.l
        return frozenset(
            outer[e:e + l] for e in expected_positions(self.schedule, stage, self.n, budgets).positions
            if e + l <= len(outer)
        )

    @property
    def context_length(self) -> int:
        return self.bound.l

    def classify(self, w: str, p: int) -> StartVerdict:
        """
        Decide whether the occurrence of W_n at position p of w is expected.

        Raises:
            NotAnOccurrenceError: If W_n does not occur at p.
        """
        if p < 0 or w[p:p + len(self.inner)] != self.inner:
            raise NotAnOccurrenceError(f"W_{self.n} does not occur at position {p}")
        if p + self.bound.l > len(w):
            return StartVerdict.INSUFFICIENT_CONTEXT
        if w[p:p + self.bound.l] in self.templates:
            return StartVerdict.EXPECTED
        return StartVerdict.UNEXPECTED

    def expected_starts(self, w: str) -> List[int]:
        """Decided expected starts of W_n in w, i.e. those with a full context inside w."""
        return [p for p in occurrences(w, self.inner) if self.classify(w, p) is StartVerdict.EXPECTED]


def is_expected_start(schedule: CuttingSchedule, w: str, p: int, n: int, stage: int,
                      max_stage: int = 8, budgets: Budgets = DEFAULT_BUDGETS) -> StartVerdict:
    """One-shot form of `ExpectedStartRecognizer.classify`."""
    return ExpectedStartRecognizer(schedule, n, stage, max_stage, budgets).classify(w, p)
