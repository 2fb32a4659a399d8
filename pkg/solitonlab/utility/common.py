#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""Common tools."""

import hashlib
import json
from pathlib import Path
from typing import Any, Union

import numpy as np


def _builtin(obj: Any) -> Any:
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Path):
        return str(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def canonical_json(obj: Any) -> str:
    """Dump a json-able object in its canonical form.

    Numpy scalars and arrays are converted to their python counterparts.

    Arguments:
        obj: The json-able object.

    Returns:
        The json string with sorted keys and fixed separators.

    """
    return json.dumps(
        obj, sort_keys=True, indent=2, separators=(",", ": "), allow_nan=True, default=_builtin
    )


def write_json(obj: Any, path: Union[str, Path]) -> None:
    """Write a json-able object in its canonical form.

    Arguments:
        obj: The json-able object.
        path: The output path.

    """
    Path(path).write_text(canonical_json(obj) + "\n", encoding="utf-8")


def read_json(path: Union[str, Path]) -> Any:
    """Read a json file.

    Arguments:
        path: The input path.

    Returns:
        The loaded object.

    """
    return json.loads(Path(path).read_text(encoding="utf-8"))


def digest(obj: Any) -> str:
    """Return the sha256 hex digest of the canonical json of an object.

    Arguments:
        obj: The json-able object.

    Returns:
        The hex digest.

    """
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()
