"""Byte-stable CSV/JSON emission for tables and reports.

Floats are rendered with 17 significant digits ('.' decimal separator),
field order is fixed by the emitting object, and lines end with '\\n',
so emitting the same object twice produces identical bytes.  The JSON
writer is hand-rolled because the stdlib encoder renders floats with
shortest-round-trip repr rather than a fixed digit count.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

from .errors import ConfigError

__all__ = ["format_float", "json_text", "csv_text", "emit_table"]


def format_float(value: float) -> str:
    if math.isnan(value) or math.isinf(value):
        return str(value)
    return format(value, ".17g")


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def json_text(obj, indent: int = 0) -> str:
    """Deterministic JSON with fixed float formatting; insertion order kept."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}{json.dumps(str(k))}: {json_text(v, indent + 2)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{inner}{json_text(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return _scalar(obj)


def _csv_cell(value) -> str:
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def csv_text(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def render(obj, fmt: str) -> str:
    """Render a table/report object to CSV or JSON text."""
    if fmt == "csv":
        if not hasattr(obj, "csv_rows"):
            raise ConfigError(f"{type(obj).__name__} has no CSV form")
        return csv_text(obj.csv_header(), obj.csv_rows())
    if fmt == "json":
        if hasattr(obj, "payload"):
            return json_text(obj.payload()) + "\n"
        raise ConfigError(f"{type(obj).__name__} has no JSON form")
    raise ConfigError(f"unknown format {fmt!r}")


def emit_table(obj, fmt: str, destination=None) -> None:
    """Write a report/table to a path or stream (stdout when omitted)."""
    text = render(obj, fmt)
    if destination is None:
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8", newline="")
