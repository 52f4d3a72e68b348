"""
Budget resolution from layered sources.

Later sources win: model defaults, then the `[budgets]` table of an optional TOML file,
then the `RANK1_BUDGET` environment variable, then explicit overrides (command-line flags).
The environment variable holds either a bare integer, read as `max_word_length`, or
comma-separated `key=value` pairs.
"""
import os
from pathlib import Path
from typing import Dict, Mapping, Optional, Union

import toml
from loguru import logger
from pydantic import ValidationError

from pyrankone.config.exceptions import BudgetFormatError, ConfigFileError
from pyrankone.config.models import Budgets

BUDGET_ENV_VAR = "RANK1_BUDGET"


def parse_budget_env(value: str) -> Dict[str, int]:
    """
    Parse the content of the `RANK1_BUDGET` environment variable.

    Args:
        value (str): Either "5000000" or "max_word_length=5000000,max_enumeration_nodes=10000".

    Returns:
        Dict[str, int]: Budget field overrides.

    Raises:
        BudgetFormatError: If the value is neither form.
    """
    value = value.strip()
    if not value:
        return {}
    if value.isdigit():
        return {"max_word_length": int(value)}
    overrides = {}
    for item in value.split(","):
        key, sep, raw = item.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or key not in Budgets.model_fields:
            raise BudgetFormatError(f"Unrecognized budget entry '{item}' in {BUDGET_ENV_VAR}")
        try:
            overrides[key] = int(raw)
        except ValueError:
            raise BudgetFormatError(f"Budget '{key}' must be an integer, got '{raw}'") from None
    return overrides


def read_budget_file(path: Union[str, Path]) -> Dict[str, int]:
    try:
        document = toml.load(str(path))
    except (OSError, toml.TomlDecodeError) as e:
        logger.error(f"Error reading configuration file {path}: {e}")
        raise ConfigFileError(f"Cannot read configuration file {path}: {e}") from None
    table = document.get("budgets", {})
    if not isinstance(table, dict):
        raise ConfigFileError(f"[budgets] in {path} must be a table")
    return dict(table)


def load_budgets(config_path: Optional[Union[str, Path]] = None,
                 environ: Optional[Mapping[str, str]] = None,
                 overrides: Optional[Mapping[str, Optional[int]]] = None) -> Budgets:
    """
    Resolve the effective budgets.

    Args:
        config_path (str | Path, optional): TOML file with a `[budgets]` table.
        environ (Mapping[str, str], optional): Environment to read; defaults to `os.environ`.
        overrides (Mapping[str, int], optional): Explicit values; `None` entries are ignored.

    Returns:
        Budgets: The merged, validated budgets.

    Raises:
        ConfigFileError: If the file cannot be read.
        BudgetFormatError: If any layer holds an invalid value.
    """
    environ = os.environ if environ is None else environ
    merged: Dict[str, int] = {}
    if config_path is not None:
        merged.update(read_budget_file(config_path))
    if environ.get(BUDGET_ENV_VAR):
        merged.update(parse_budget_env(environ[BUDGET_ENV_VAR]))
    merged.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        budgets = Budgets(**merged)
    except ValidationError as e:
        raise BudgetFormatError(f"Invalid budgets {merged}: {e}") from None
    logger.debug(f"Effective budgets: {budgets.model_dump()}")
    return budgets
