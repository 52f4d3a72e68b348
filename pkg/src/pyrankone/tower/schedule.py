"""
Schedule ingestion and tower heights.

`validate_schedule` turns a raw JSON-like document into a `CuttingSchedule`; the model
validators raise the specific `ScheduleError` subclasses, and type-level problems caught by
pydantic are reported as `ScheduleFormatError`. `load_schedule` resolves a preset name or a
path to a schedule file.

Heights use exact integers and are checked against `Budgets.max_height`, so an overflowing
recursion surfaces as `HeightOverflowError` instead of a silently huge number.
"""
import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping, Optional, Tuple, Union

from loguru import logger
from pydantic import ValidationError

from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.tower.exceptions import (
    HeightOverflowError,
    ScheduleFormatError,
    StageRangeError,
    UnknownScheduleError,
)
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.presets import PRESET_ALIASES, PRESETS


def validate_schedule(raw: Mapping[str, Any], name: Optional[str] = None) -> CuttingSchedule:
    """
    Validate a raw schedule description.

    Args:
        raw (Mapping[str, Any]): {"h0": int, "stages": [{"q": int, "spacers": [...]}, ...], "tail": {...}}.
        name (str, optional): Label used in reports.

    Returns:
        CuttingSchedule: The validated schedule.

    Raises:
        QInvalidError, SpacerCountMismatchError, NegativeSpacerError, H0InvalidError,
        TailInvalidError: If the schedule breaks a structural rule.
        ScheduleFormatError: If the document does not have the expected shape.
    """
    if not isinstance(raw, Mapping):
        raise ScheduleFormatError(f"A schedule must be a JSON object, got {type(raw).__name__}")
    document = dict(raw)
    if name is not None:
        document.setdefault("name", name)
    try:
        return CuttingSchedule.model_validate(document)
    except ValidationError as e:
        raise ScheduleFormatError(f"Malformed schedule: {e}") from None


def preset(name: str) -> CuttingSchedule:
    name = PRESET_ALIASES.get(name, name)
    try:
        raw = PRESETS[name]
    except KeyError:
        raise UnknownScheduleError(
            f"Unknown preset '{name}'; available presets: {', '.join(sorted(PRESETS))}"
        ) from None
    return validate_schedule(raw, name=name)


def load_schedule(source: Union[str, Path]) -> CuttingSchedule:
    """
    Load a schedule from a preset name or a JSON file.

    Args:
        source (str | Path): Preset name (see `pyrankone.tower.presets`) or file path.

    Returns:
        CuttingSchedule: The validated schedule.

    Raises:
        UnknownScheduleError: If `source` is neither a preset nor an existing file.
        ScheduleFormatError: If the file is not valid JSON.
    """
    if isinstance(source, str) and (source in PRESETS or source in PRESET_ALIASES):
        return preset(source)
    path = Path(source)
    if not path.is_file():
        raise UnknownScheduleError(f"'{source}' is neither a preset name nor a schedule file")
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except (OSError, ValueError) as e:
        logger.error(f"Error reading schedule file {path}: {e}")
        raise ScheduleFormatError(f"Cannot read schedule file {path}: {e}") from None
    return validate_schedule(raw, name=path.stem)


@lru_cache(maxsize=None)
def _heights(schedule: CuttingSchedule, n: int, max_height: int) -> Tuple[int, ...]:
    values = [schedule.h0]
    for stage in range(n):
        rule = schedule.stage_rule(stage)
        values.append(rule.q * values[-1] + rule.total_spacers)
        if values[-1] > max_height:
            raise HeightOverflowError(
                f"h_{stage + 1} = {values[-1]} exceeds max_height={max_height} for schedule '{schedule.label}'"
            )
    return tuple(values)


def heights(schedule: CuttingSchedule, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> Tuple[int, ...]:
    """
    Return the heights h_0, ..., h_n.

    Raises:
        StageRangeError: If n is negative.
        HeightOverflowError: If some h_i exceeds `budgets.max_height`.
    """
    if n < 0:
        raise StageRangeError(f"Stage index must be nonnegative, got {n}")
    return _heights(schedule, n, budgets.max_height)


def height(schedule: CuttingSchedule, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    return heights(schedule, n, budgets)[-1]


def first_stage_reaching(schedule: CuttingSchedule, length: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Smallest stage n with h_n >= length."""
    n = 0
    while height(schedule, n, budgets) < length:
        n += 1
    return n
