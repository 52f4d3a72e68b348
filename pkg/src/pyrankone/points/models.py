"""
This module defines Pydantic models for points of a rank-1 system given at finite precision.

A `PointAddress` (N, j) stands for the points on level j of the stage-N tower. Relative to a
smaller stage n such a point either sits on a level of the stage-n tower (`Level`) or in the
leftover region (`Spacer`). `ZWindow` holds the return times to the stage-1 base within a window,
`GapFunction` the gaps between consecutive returns and `ReturnWord` the gap pattern of one pass
up the stage-n tower.
"""
from typing import Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field


class PointAddress(BaseModel):
    model_config = ConfigDict(frozen=True)

    depth: int = Field(..., description="Stage N of the tower holding the point")
    level: int = Field(..., description="Level index j, 0 <= j < h_N")

    def __str__(self) -> str:
        return f"{self.depth}:{self.level}"


class Level(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["level"] = "level"
    stage: int
    index: int


class Spacer(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["spacer"] = "spacer"
    stage: int


PointLocation = Union[Level, Spacer]


class StageMargin(BaseModel):
    model_config = ConfigDict(frozen=True)

    stage: int
    down: Optional[int] = Field(None, description="Levels below the point; None in the spacer region")
    up: Optional[int] = Field(None, description="Levels above the point; None in the spacer region")


class InteriorMargin(BaseModel):
    """
    A model representing how far an address sits from the base and top of its towers.
    """
    model_config = ConfigDict(frozen=True)

    address: PointAddress
    down: int
    up: int
    per_stage: Tuple[StageMargin, ...] = ()

    def is_interior(self, k: int) -> bool:
        return self.down >= k and self.up >= k


class ZWindow(BaseModel):
    """
    A model representing the returns i in [lower, upper] with j + i in E_{N,1}.
    """
    model_config = ConfigDict(frozen=True)

    address: PointAddress
    lower: int
    upper: int
    returns: Tuple[int, ...]

    @property
    def radius(self) -> int:
        return max(-self.lower, self.upper)


class GapFunction(BaseModel):
    model_config = ConfigDict(frozen=True)

    domain: Tuple[int, ...]
    values: Tuple[int, ...]

    def at(self, i: int) -> int:
        return self.values[self.domain.index(i)]


class ReturnWord(BaseModel):
    """
    A model representing r_n = |E_{n,1}| and the successive differences R_n of E_{n,1}.
    """
    model_config = ConfigDict(frozen=True)

    stage: int
    r: int
    gaps: Tuple[int, ...]


class CongruenceClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    residue: int
    values: Tuple[int, ...]
    verdict: Literal["constant", "varying"]


class CongruenceReport(BaseModel):
    """
    A model representing the gap function split into residue classes mod r_n.

    Return indices are counted from `anchor`, the first return at the base of the stage-n tower.
    `claim_holds` is set only when the schedule is classified as having unbounded spacer runs;
    it then says whether at least r_n - 1 classes are constant.
    """
    model_config = ConfigDict(frozen=True)

    address: PointAddress
    radius: int
    stage: int
    r: int
    anchor: int
    classes: Tuple[CongruenceClass, ...]
    constant_classes: int
    varying_classes: int
    claim_holds: Optional[bool] = None


class StageSearchEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    position: int
    stage: Optional[int] = Field(None, description="Least stage whose class through this return is constant")


class SeparatingLevel(BaseModel):
    model_config = ConfigDict(frozen=True)

    stage: int
    index: int


class SeparationReport(BaseModel):
    """
    A model representing how two addresses of equal depth are told apart.
    """
    model_config = ConfigDict(frozen=True)

    first: PointAddress
    second: PointAddress
    separating_level: Optional[SeparatingLevel]
    certified_radius: Optional[int] = Field(None, description="Radius at which differing windows are guaranteed")
    radius: int = Field(..., description="Radius actually compared, capped to fit both towers")
    windows_differ: bool
