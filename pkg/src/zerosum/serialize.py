"""JSON and CSV encodings.

Rationals are written as canonical ``"p/q"`` strings (reduced, positive
denominator, ``/1`` kept for integers).  Hypergraph files look like::

    {"n": 4, "r": 2, "edges": [[0, 1], [0, 2]], "classes": [[0, 1], [2, 3]]}

with ``classes`` omitted when absent; weighting files are
``{"values": ["1/1", "-1/2"]}``.  Files are UTF-8 and end with a newline.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import InvalidParameters
from .hypergraph import Hypergraph, SignPattern, Weighting


def fmt_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str | int) -> Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise InvalidParameters(f"expected a rational string like '3/4', got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameters(f"cannot parse rational {s!r}") from exc


def hypergraph_to_dict(H: Hypergraph) -> dict:
    d: dict[str, Any] = {"n": H.n, "r": H.r, "edges": [list(e) for e in H.edges]}
    if H.classes is not None:
        d["classes"] = [list(b) for b in H.classes]
    return d


def hypergraph_from_dict(d: dict) -> Hypergraph:
    try:
        classes = d.get("classes")
        return Hypergraph(int(d["n"]), int(d["r"]), tuple(tuple(e) for e in d["edges"]),
                          None if classes is None else tuple(tuple(b) for b in classes))
    except (KeyError, TypeError) as exc:
        raise InvalidParameters(f"malformed hypergraph document: {exc}") from exc


def weighting_to_dict(f: Weighting) -> dict:
    return {"values": [fmt_rational(v) for v in f.values]}


def weighting_from_dict(d: dict) -> Weighting:
    try:
        return Weighting(tuple(parse_rational(v) for v in d["values"]))
    except (KeyError, TypeError) as exc:
        raise InvalidParameters(f"malformed weighting document: {exc}") from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj) + "\n"


def dump_hypergraph(H: Hypergraph) -> str:
    return dumps(hypergraph_to_dict(H))


def dump_weighting(f: Weighting) -> str:
    return dumps(weighting_to_dict(f))


def load_hypergraph(text: str) -> Hypergraph:
    return hypergraph_from_dict(_loads(text))


def load_weighting(text: str) -> Weighting:
    return weighting_from_dict(_loads(text))


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameters(f"invalid JSON: {exc}") from exc


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidParameters(f"cannot read {path}: {exc.strerror}") from exc


def read_hypergraph(path) -> Hypergraph:
    return load_hypergraph(_read(path))


def read_weighting(path) -> Weighting:
    return load_weighting(_read(path))


def write_text(path, text: str):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InvalidParameters(f"cannot write {path}: {exc.strerror}") from exc


def to_jsonable(obj):
    """Recursively convert reports into JSON-ready values (rationals as "p/q")."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, Hypergraph):
        return hypergraph_to_dict(obj)
    if isinstance(obj, Weighting):
        return [fmt_rational(v) for v in obj.values]
    if isinstance(obj, SignPattern):
        return list(obj.signs)
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)
