"""Deterministic emission of tables, plot series, and run manifests.

Output bytes must be reproducible run to run: JSON keys are sorted,
floats carry full repr precision, newlines are always LF, and exact
rationals are converted to floats only here at the boundary. Human
tables round half to even at 3 decimals; machine files do not round.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from importlib import metadata
from pathlib import Path


def round3(x) -> float:
    """Half-to-even rounding at 3 decimals, for display only."""
    return round(float(x), 3)


def jsonable(obj):
    """Convert nested values into JSON-safe structures.

    Fractions become floats, enums their values, dataclasses dicts,
    tuples lists; non-finite floats become strings since strict JSON
    has no spelling for them.
    """
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return float(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else "-inf" if obj < 0 else "nan"
    return obj


def dumps_json(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_json(path: Path, obj) -> None:
    path.write_text(dumps_json(obj), encoding="utf-8", newline="\n")


def _cell(x) -> str:
    if isinstance(x, Fraction):
        x = float(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            return "inf" if x > 0 else "-inf" if x < 0 else "nan"
        return repr(x)
    if x is None:
        return ""
    return str(x)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


def write_csv(path: Path, header, rows) -> None:
    path.write_text(csv_text(header, rows), encoding="utf-8", newline="\n")


def format_table(headers, rows) -> str:
    """Plain-text aligned table for terminal output."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _version() -> str:
    try:
        return metadata.version("ramseystats")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def write_manifest(out_dir: Path, command: str, config: dict, inputs) -> Path:
    """Record what produced this output directory.

    inputs is a mapping of role name to file path; each gets hashed so
    reported numbers stay traceable to exact input bytes.
    """
    doc = {
        "command": command,
        "config": config,
        "inputs": {
            name: {"path": str(p), "sha256": sha256_file(Path(p))}
            for name, p in inputs.items()
        },
        "version": _version(),
    }
    path = out_dir / "manifest.json"
    write_json(path, doc)
    return path
