"""Deterministic CSV/JSON writers with rename-on-success semantics."""

from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

SIG_DIGITS = 12


def fmt(value) -> str:
    """Format a number with 12 significant digits; integers stay integers."""
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    if value == 0.0:
        return "0"
    return f"{value:.{SIG_DIGITS}g}"


def csv_text(columns: dict) -> str:
    names = list(columns)
    arrays = [np.asarray(columns[n]) for n in names]
    lines = [",".join(names)]
    for row in zip(*arrays):
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _round_floats(obj):
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if not math.isfinite(value):
            return None
        return float(fmt(value))
    return obj


def json_text(payload: dict) -> str:
    return json.dumps(_round_floats(payload), indent=2, sort_keys=True) + "\n"


def write_atomic(path, text: str) -> Path:
    """Write ``text`` to a temporary sibling, then rename over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def write_all(files: dict) -> list:
    """Write every ``{path: text}`` entry; texts are rendered before any write."""
    return [write_atomic(path, text) for path, text in files.items()]
