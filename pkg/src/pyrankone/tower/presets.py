"""
Named schedules shipped with the package.

Every preset has h0 = 1:

- ``chacon``: three copies, spacer runs (0, 1), repeated forever.
- ``paper-4copy`` (alias ``four-copy``): four copies, spacer runs (0, 1, 0), repeated forever.
- ``odometer2``: two copies, no spacers; W_inf is constant.
- ``staircase``: two copies separated by n + 1 spacers at stage n.
- ``alternating``: two copies separated by one spacer; W_inf is (01)^inf.
"""
from typing import Any, Dict

PRESETS: Dict[str, Dict[str, Any]] = {
    "chacon": {
        "h0": 1,
        "stages": [{"q": 3, "spacers": [0, 1]}],
        "tail": {"mode": "repeat-last"},
    },
    "paper-4copy": {
        "h0": 1,
        "stages": [{"q": 4, "spacers": [0, 1, 0]}],
        "tail": {"mode": "repeat-last"},
    },
    "odometer2": {
        "h0": 1,
        "stages": [{"q": 2, "spacers": [0]}],
        "tail": {"mode": "repeat-last"},
    },
    "staircase": {
        "h0": 1,
        "stages": [],
        "tail": {"mode": "arithmetic", "q": 2, "base": 1, "slope": 1},
    },
    "alternating": {
        "h0": 1,
        "stages": [{"q": 2, "spacers": [1]}],
        "tail": {"mode": "repeat-last"},
    },
}

PRESET_ALIASES: Dict[str, str] = {"four-copy": "paper-4copy"}

NON_REPEATING_PRESETS = ("chacon", "paper-4copy", "staircase")
