"""Reading cubic forms, lines and points from JSON files and strings."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .exact import QPoly
from .geometry import ProjLine, ProjPoint, check_cubic


def load_json(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc.msg} at line {exc.lineno}") from exc


def cubic_from_json(data) -> QPoly:
    if not isinstance(data, dict):
        raise InputError("a polynomial file holds an object with 'vars' and 'terms'")
    return check_cubic(QPoly.from_json(data))


def load_cubic(path: str | Path) -> QPoly:
    return cubic_from_json(load_json(path))


def line_from_json(data) -> ProjLine:
    try:
        p, q = data["points"]
        return ProjLine(ProjPoint(tuple(p)), ProjPoint(tuple(q)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("a line file holds {'points': [[...], [...]]}") from exc


def load_line(path: str | Path) -> ProjLine:
    return line_from_json(load_json(path))


def parse_point(text: str) -> ProjPoint:
    return ProjPoint.parse(text)


def write_json(path: str | Path, data) -> None:
    Path(path).write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
