"""
Output rendering for the `rank1` command.

JSON mode emits exactly one document, {"schema", "command", "result"}, with sorted keys so equal
runs give byte-identical output. Text mode prints one `key: value` line per field, flattening
nested models with dotted keys.
"""
import json
from enum import Enum
from typing import Any, Iterator, List

from pydantic import BaseModel

SCHEMA = "pyrankone.report/1"


def to_jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if hasattr(value, "item"):
        return value.item()
    return value


def render_json(command: str, result: Any) -> str:
    document = {"schema": SCHEMA, "command": command, "result": to_jsonable(result)}
    return json.dumps(document, sort_keys=True, indent=2)


def _lines(prefix: str, value: Any) -> Iterator[str]:
    if isinstance(value, dict):
        for key in sorted(value):
            yield from _lines(f"{prefix}.{key}" if prefix else str(key), value[key])
    elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
        for idx, item in enumerate(value):
            yield from _lines(f"{prefix}[{idx}]", item)
    elif isinstance(value, list):
        yield f"{prefix}: {' '.join(str(item) for item in value)}"
    else:
        yield f"{prefix}: {value}" if prefix else str(value)


def render_text(result: Any) -> str:
    data = to_jsonable(result)
    if not isinstance(data, (dict, list)):
        return str(data)
    lines: List[str] = list(_lines("", data if isinstance(data, dict) else {"items": data}))
    return "\n".join(lines)
