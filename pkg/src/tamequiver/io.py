"""Quiver and dimension-vector file formats, and stable JSON emission."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .quiver import DimVector, Quiver


class ParseError(ValueError):
    """Malformed input file or argument (CLI exit code 2)."""


def quiver_from_json(data: Any) -> Quiver:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError('quiver JSON must be an object with a "vertices" list')
    labels = data["vertices"]
    arrows = data.get("arrows", [])
    if not isinstance(labels, list) or not all(isinstance(x, (str, int)) for x in labels):
        raise ParseError('"vertices" must be a list of labels')
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate vertex label")
    pairs = []
    for arr in arrows:
        if not isinstance(arr, list) or len(arr) != 2:
            raise ParseError(f"arrow {arr!r} must be a [tail, head] pair")
        pairs.append((str(arr[0]), str(arr[1])))
    try:
        return Quiver.from_labels(labels, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def quiver_to_json(q: Quiver) -> dict:
    return {"vertices": list(q.labels), "arrows": [[q.labels[t], q.labels[h]] for t, h in q.arrows]}


def load_quiver(path: str | Path) -> Quiver:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc.msg})") from exc
    return quiver_from_json(data)


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc.msg})") from exc


def parse_dimvector(text: str, q: Quiver | None = None) -> DimVector:
    try:
        vec = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise ParseError(f"dimension vector {text!r} is not a comma-separated list of integers") from exc
    if q is not None and len(vec) != q.n_vertices:
        raise ParseError(f"dimension vector has {len(vec)} entries, quiver has {q.n_vertices} vertices")
    return vec


def emit_json(obj: Any) -> str:
    """Stable serialization: field order as built, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def fixture_path(name: str) -> Path:
    """Path of a bundled quiver file, e.g. ``fixture_path("e6t")``."""
    return Path(str(resources.files("tamequiver") / "fixtures" / f"{name}.json"))


def fixture(name: str) -> Quiver:
    return load_quiver(fixture_path(name))


FIXTURES = ("a1t", "a2t", "a3t", "a4t", "d4t", "d5t", "e6t", "e7t", "e8t")
