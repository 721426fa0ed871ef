"""Built-in example hypersurfaces, shipped as interchange JSON so the CLI
and tests need no external files."""

from __future__ import annotations

import json

from .grassmann import Flag
from .polar import Hypersurface

_EXAMPLES_JSON = {
    # cone over the Segre quadric P^1 x P^1 in P^3, inside P^4
    "quadric_cone": """
    {"name": "quadric_cone",
     "f": {"vars": ["z0", "z1", "z2", "z3", "z4"],
           "terms": [{"c": "1", "e": [1, 0, 0, 1, 0]}, {"c": "-1", "e": [0, 1, 1, 0, 0]}]}}
    """,
    "node": """
    {"name": "node",
     "f": {"vars": ["x", "y", "z"], "terms": [{"c": "1", "e": [1, 1, 0]}]}}
    """,
    "cusp": """
    {"name": "cusp",
     "f": {"vars": ["x", "y", "z"],
           "terms": [{"c": "1", "e": [3, 0, 0]}, {"c": "1", "e": [0, 2, 1]}]}}
    """,
    "conic": """
    {"name": "conic",
     "f": {"vars": ["x", "y", "z"],
           "terms": [{"c": "1", "e": [2, 0, 0]}, {"c": "1", "e": [0, 2, 0]},
                     {"c": "-1", "e": [0, 0, 2]}]}}
    """,
    "quadric_surface": """
    {"name": "quadric_surface",
     "f": {"vars": ["w0", "w1", "w2", "w3"],
           "terms": [{"c": "1", "e": [1, 0, 0, 1]}, {"c": "-1", "e": [0, 1, 1, 0]}]}}
    """,
}

# flag of the worked example: e0-e3, e1-e2, e0, e1, e4 on Q^5
_VERDIER_FLAG_JSON = """
[["1", "0", "0", "-1", "0"],
 ["0", "1", "-1", "0", "0"],
 ["1", "0", "0", "0", "0"],
 ["0", "1", "0", "0", "0"],
 ["0", "0", "0", "0", "1"]]
"""

EXAMPLE_NAMES = tuple(_EXAMPLES_JSON)


def example(name: str) -> Hypersurface:
    try:
        raw = _EXAMPLES_JSON[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}") from None
    return Hypersurface.from_json(json.loads(raw))


def example_json(name: str) -> dict:
    return json.loads(_EXAMPLES_JSON[name])


def verdier_flag() -> Flag:
    return Flag.from_json(json.loads(_VERDIER_FLAG_JSON))
