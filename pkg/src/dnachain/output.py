"""Data files written by the CLI.

CSV: ``# key=value`` metadata lines, a header row, then data rows.
JSON: ``{"meta": {...}, "rows": [{...}, ...]}`` with the same content.
Floats carry 12 significant digits in both.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Mapping, Sequence

SIG_DIGITS = 12


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return repr(value)
        return f"{value:.{SIG_DIGITS}g}"
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and math.isfinite(value):
        return float(f"{value:.{SIG_DIGITS}g}")
    if isinstance(value, float):
        return repr(value)
    return value


def render_csv(meta: Mapping[str, Any], columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}={format_value(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def render_json(meta: Mapping[str, Any], columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    doc = {
        "meta": {k: format_value(v) for k, v in meta.items()},
        "rows": [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def render(fmt: str, meta, columns, rows) -> str:
    if fmt == "csv":
        return render_csv(meta, columns, rows)
    if fmt == "json":
        return render_json(meta, columns, rows)
    raise ValueError(f"unknown format {fmt!r}")


def read_meta(text: str) -> dict[str, str]:
    """Metadata of a CSV or JSON data file, values as strings."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return dict(json.loads(stripped)["meta"])
    meta = {}
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        key, _, value = line[1:].strip().partition("=")
        meta[key] = value
    return meta


def read_rows(text: str) -> list[dict[str, str]]:
    """Data rows of a CSV file as dicts of strings (JSON rows are returned as stored)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return json.loads(stripped)["rows"]
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(body))
