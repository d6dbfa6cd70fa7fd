"""Render result objects to bytes: canonical JSON or plain text.

JSON output is byte-stable: ``indent=2, sort_keys=True``, UTF-8, trailing
newline. The text format is a plain indented key/value listing with the same
key ordering; neither format ever emits color codes.
"""

from __future__ import annotations

import json
from fractions import Fraction


def to_jsonable(obj):
    """Recursively convert result objects to plain JSON-ready data."""
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)


def _scalar(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "none"
    return str(v)


def _is_scalar(v) -> bool:
    return v is None or isinstance(v, (bool, int, str))


def _text_lines(data, indent: int):
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        if not data:
            return [f"{pad}(none)"]
        for k in sorted(data):
            v = data[k]
            if _is_scalar(v):
                lines.append(f"{pad}{k}: {_scalar(v)}")
            elif isinstance(v, (list, tuple)) and all(_is_scalar(x) for x in v):
                inner = ", ".join(_scalar(x) for x in v)
                lines.append(f"{pad}{k}: [{inner}]")
            else:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
        return lines
    if isinstance(data, (list, tuple)):
        if not data:
            return [f"{pad}(none)"]
        for i, v in enumerate(data):
            if _is_scalar(v):
                lines.append(f"{pad}- {_scalar(v)}")
            else:
                lines.append(f"{pad}- [{i}]")
                lines.extend(_text_lines(v, indent + 1))
        return lines
    return [f"{pad}{_scalar(data)}"]


def render_report(obj, fmt: str = "json") -> bytes:
    """Bytes of the report in the requested format."""
    data = to_jsonable(obj)
    if fmt == "json":
        return (json.dumps(data, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt == "text":
        return ("\n".join(_text_lines(data, 0)) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {fmt!r} (want json or text)")
