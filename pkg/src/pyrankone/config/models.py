"""
Pydantic models for the computation budgets and the command-line run configuration.

`Budgets` bounds every computation that could grow without limit: word materialization,
tower heights, exhaustive code enumeration and stabilization searches. Every library
operation accepts a `Budgets` instance and falls back to `DEFAULT_BUDGETS`.

`RunConfig` is the validated form of one command-line invocation.
"""
from typing import Dict, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

DEFAULT_SEED = 20240101


class Budgets(BaseModel):
    """
    Hard limits guarding against runaway computations.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    max_word_length: PositiveInt = Field(10_000_000, description="Largest word (or position set) materialized")
    max_height: PositiveInt = Field(2 ** 62, description="Largest tower height computed before reporting overflow")
    max_enumeration_nodes: PositiveInt = Field(2_000_000, description="Search-tree nodes visited by code enumeration")
    max_stage: PositiveInt = Field(40, description="Last stage tried by stabilization searches")


DEFAULT_BUDGETS = Budgets()


class RunConfig(BaseModel):
    """
    A model representing one validated invocation of the `rank1` command.
    """
    model_config = ConfigDict(frozen=True)

    command: str = Field(..., description="Subcommand path, e.g. 'word' or 'point zwindow'")
    schedule_source: Optional[str] = Field(None, description="Preset name or path to a schedule JSON file")
    parameters: Dict[str, Union[int, str, bool, None]] = Field(default_factory=dict)
    seed: int = Field(DEFAULT_SEED, description="Seed for every randomized sweep")
    output: Literal["text", "json"] = "text"
    budgets: Budgets = Field(default_factory=Budgets)
