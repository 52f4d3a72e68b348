"""
This module defines Pydantic models for cutting-and-stacking schedules and the finite objects they generate.

The main model is `CuttingSchedule`: a stage-0 height, a finite list of `StageRule` entries
(copy count q and the q - 1 spacer runs placed between consecutive copies) and a `TailRule`
that makes `stage_rule(n)` total for every stage. Schedules are frozen so they can key caches.

`TowerWord`, `ExpectedSet`, `GapWitness` and `SpacerClassification` hold the results of the
operations in `pyrankone.tower.words` and `pyrankone.tower.classification`.
"""
from bisect import bisect_left
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from pyrankone.tower.exceptions import (
    H0InvalidError,
    NegativeSpacerError,
    QInvalidError,
    SpacerCountMismatchError,
    StageRangeError,
    TailInvalidError,
)


class StageRule(BaseModel):
    """
    A model representing one cutting stage: q copies of the tower with spacer runs between them.
    """
    model_config = ConfigDict(frozen=True)

    q: int = Field(..., description="Number of copies stacked at this stage")
    spacers: Tuple[int, ...] = Field((), description="Spacer runs between consecutive copies")

    @model_validator(mode="after")
    def check_shape(self):
        if self.q < 2:
            raise QInvalidError(f"Stage needs at least two copies, got q={self.q}")
        if len(self.spacers) != self.q - 1:
            raise SpacerCountMismatchError(
                f"Stage with q={self.q} needs {self.q - 1} spacer counts, got {len(self.spacers)}"
            )
        if any(a < 0 for a in self.spacers):
            raise NegativeSpacerError(f"Spacer counts must be nonnegative, got {list(self.spacers)}")
        return self

    @computed_field
    @property
    def total_spacers(self) -> int:
        return sum(self.spacers)


class TailRule(BaseModel):
    """
    A model representing how a schedule continues past its explicit stages.

    `repeat-last` reuses the final explicit stage, `cycle` walks a fixed list of stages and
    `arithmetic` builds q-copy stages whose spacer runs all equal base + slope * n.
    """
    model_config = ConfigDict(frozen=True)

    mode: Literal["repeat-last", "cycle", "arithmetic"] = "repeat-last"
    cycle: Tuple[StageRule, ...] = ()
    q: int = 2
    base: int = 0
    slope: int = 0

    @model_validator(mode="after")
    def check_parameters(self):
        if self.mode == "cycle" and not self.cycle:
            raise TailInvalidError("A cycle tail needs a non-empty list of stages")
        if self.mode == "arithmetic":
            if self.q < 2:
                raise TailInvalidError(f"An arithmetic tail needs q >= 2, got q={self.q}")
            if self.base < 0 or self.slope < 0:
                raise TailInvalidError(
                    f"An arithmetic tail needs base >= 0 and slope >= 0, got {self.base}, {self.slope}"
                )
        return self


class CuttingSchedule(BaseModel):
    """
    A model representing a rank-1 cutting schedule.
    """
    model_config = ConfigDict(frozen=True)

    name: Optional[str] = Field(None, description="Preset name or file stem, used in reports")
    h0: int = Field(..., description="Height of the stage-0 tower")
    stages: Tuple[StageRule, ...] = ()
    tail: TailRule = Field(default_factory=TailRule)

    @model_validator(mode="after")
    def check_schedule(self):
        if self.h0 < 1:
            raise H0InvalidError(f"Stage-0 height must be positive, got h0={self.h0}")
        if self.tail.mode == "repeat-last" and not self.stages:
            raise TailInvalidError("A repeat-last tail needs at least one explicit stage")
        return self

    def stage_rule(self, n: int) -> StageRule:
        """
        Return the rule used to build stage n + 1 from stage n.

        Args:
            n (int): Stage index, n >= 0.

        Returns:
            StageRule: The explicit rule if one exists, otherwise the tail's rule.
        """
        if n < 0:
            raise StageRangeError(f"Stage index must be nonnegative, got {n}")
        if n < len(self.stages):
            return self.stages[n]
        if self.tail.mode == "repeat-last":
            return self.stages[-1]
        if self.tail.mode == "cycle":
            return self.tail.cycle[(n - len(self.stages)) % len(self.tail.cycle)]
        spacer = self.tail.base + self.tail.slope * n
        return StageRule(q=self.tail.q, spacers=(spacer,) * (self.tail.q - 1))

    @property
    def label(self) -> str:
        return self.name or "custom"


class TowerWord(BaseModel):
    """
    A model representing the tower word W_n: symbol 1 marks a spacer level.
    """
    model_config = ConfigDict(frozen=True)

    stage: int
    bits: str

    @computed_field
    @property
    def height(self) -> int:
        return len(self.bits)


class ExpectedSet(BaseModel):
    """
    A model representing E_{m,n}, the start positions of expected occurrences of W_n in W_m.
    """
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    positions: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, position: int) -> bool:
        idx = bisect_left(self.positions, position)
        return idx < len(self.positions) and self.positions[idx] == position


class GapWitness(BaseModel):
    """
    Two distinct spacer gaps r != r_prime between consecutive expected occurrences of W_n in W_k.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    r: int
    r_prime: int


class SpacerClassification(BaseModel):
    """
    A model representing the depth-qualified classification of a schedule's spacer behavior.
    """
    model_config = ConfigDict(frozen=True)

    verdict: Literal["RepeatingConsistent", "NonRepeatingBounded", "NonRepeatingUnbounded"]
    depth: int = Field(..., description="Last stage examined; the verdict is evidence up to this stage")
    witness: Optional[GapWitness] = None
    period: Optional[int] = Field(None, description="Minimal period of W_depth (repeating verdict)")
    period_stable: Optional[bool] = Field(None, description="Whether W_{depth-1} has the same minimal period")
    a_max: Optional[int] = Field(None, description="Longest spacer run, stable over the last two stages")
    spacer_runs: Tuple[int, ...] = Field((), description="Longest spacer run of W_n for n = 0..depth")
    growth_stages: Tuple[int, ...] = Field((), description="Stages at which the longest spacer run grew")

    @property
    def is_repeating(self) -> bool:
        return self.verdict == "RepeatingConsistent"
