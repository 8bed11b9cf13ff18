"""JSON report envelope: serialization of package values, the run
manifest, and a small structural validator for the shipped schema.

Exact rationals serialize as ``{"num": "...", "den": "..."}`` with string
payloads; the integers involved overflow the range JSON readers can be
trusted with.  Graphs serialize as graph6 strings.  Vertex sets are
0-indexed arrays (the 1-indexed convention is for human-readable text
only).
"""

from __future__ import annotations

import dataclasses
import datetime
import hashlib
import json
from fractions import Fraction
from importlib import resources
from typing import Any

from .graphs import Graph, graph6_encode, set_of

SCHEMA_VERSION = "1"


def fraction_json(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def to_jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str, float)):
        return obj
    if isinstance(obj, Fraction):
        return fraction_json(obj)
    if isinstance(obj, Graph):
        return graph6_encode(obj)
    if isinstance(obj, bytes):
        return obj.hex()
    if isinstance(obj, frozenset):
        return sorted(to_jsonable(x) for x in obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if dataclasses.is_dataclass(obj):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
            if not f.name.startswith("_")
        }
    raise TypeError(f"cannot serialize {type(obj)!r}")


def vertex_set_json(mask: int) -> list[int]:
    return list(set_of(mask))


def make_manifest(command: list[str], parameters: dict, inputs: dict[str, str]) -> dict:
    """Run manifest: replaying the same command reproduces byte-identical
    JSON apart from the timestamp field."""
    from . import __version__

    hashes = {}
    for name, path in inputs.items():
        with open(path, "rb") as fh:
            hashes[name] = hashlib.sha256(fh.read()).hexdigest()
    return {
        "command": command,
        "parameters": to_jsonable(parameters),
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "input_hashes": hashes,
    }


def envelope(kind: str, data: Any, manifest: dict | None = None) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "kind": kind, "data": to_jsonable(data)}
    if manifest is not None:
        out["manifest"] = manifest
    return out


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def load_schema() -> dict:
    with resources.files("gturan.schemas").joinpath("report.schema.json").open() as fh:
        return json.load(fh)


def validate_schema(doc: Any, schema: dict | None = None, _path: str = "$") -> list[str]:
    """Minimal structural validator (type / required / properties / items /
    enum); returns a list of problems, empty when the document conforms."""
    if schema is None:
        schema = load_schema()
    problems: list[str] = []

    def check(node: Any, sch: dict, path: str) -> None:
        typ = sch.get("type")
        if typ:
            ok = {
                "object": lambda v: isinstance(v, dict),
                "array": lambda v: isinstance(v, list),
                "string": lambda v: isinstance(v, str),
                "integer": lambda v: isinstance(v, int) and not isinstance(v, bool),
                "number": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool),
                "boolean": lambda v: isinstance(v, bool),
                "null": lambda v: v is None,
            }
            kinds = typ if isinstance(typ, list) else [typ]
            if not any(ok[k](node) for k in kinds):
                problems.append(f"{path}: expected {typ}, got {type(node).__name__}")
                return
        if "enum" in sch and node not in sch["enum"]:
            problems.append(f"{path}: {node!r} not in {sch['enum']}")
        if isinstance(node, dict):
            for req in sch.get("required", []):
                if req not in node:
                    problems.append(f"{path}: missing required key {req!r}")
            for key, sub in sch.get("properties", {}).items():
                if key in node:
                    check(node[key], sub, f"{path}.{key}")
        if isinstance(node, list) and "items" in sch:
            for i, item in enumerate(node):
                check(item, sch["items"], f"{path}[{i}]")

    check(doc, schema, _path)
    return problems
