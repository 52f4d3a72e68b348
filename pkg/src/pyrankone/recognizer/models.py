from enum import Enum
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class StartVerdict(str, Enum):
    EXPECTED = "Expected"
    UNEXPECTED = "Unexpected"
    INSUFFICIENT_CONTEXT = "InsufficientContext"


class UnexpectedOverlap(BaseModel):
    """
    An unexpected start j together with the expected starts whose intervals it overlaps.
    """
    model_config = ConfigDict(frozen=True)

    start: int
    left: int
    right: Optional[int] = Field(None, description="Next expected start, if it lies inside [start, start + h_n)")


class OccurrenceReport(BaseModel):
    """
    A model representing all occurrences of W_n in W_m split into expected and unexpected ones.
    """
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    all: Tuple[int, ...]
    expected: Tuple[int, ...]
    unexpected: Tuple[int, ...]
    overlaps: Tuple[UnexpectedOverlap, ...] = ()


class ContextBound(BaseModel):
    """
    A model representing a context length l(n) that decides whether an occurrence of W_n is expected.

    `paper-bound` is the closed form 2 * h_k + h_n from the gap witness stage k,
    `brute-minimal` the smallest length that works on every W_m up to a given stage.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    l: int
    witness_stage: Optional[int] = None
    kind: Literal["paper-bound", "brute-minimal"]


class LemmaViolation(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    j: int
    r: int
    s: int


class LemmaCheckReport(BaseModel):
    """
    A model representing an exhaustive check that equal-context gaps agree.

    `configurations` counts pairs (i, j) with i an expected start followed by another expected
    start and j an occurrence with i < j < i + h_n. `complete_configurations` counts those where j
    is itself followed by s spacers and another occurrence; only these are checked for r == s.
    """
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    configurations: int
    complete_configurations: int
    violations: Tuple[LemmaViolation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations
