"""JSON code files: a header, the skeleton components, and optional codewords.

Files are written with sorted keys and a fixed layout so identical codes give
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import field
from .multilevel import METHODS, PendingFix, SubspaceCode, assemble
from .skeleton import IdentifyingVector

FORMAT_VERSION = 1


def code_to_dict(code: SubspaceCode, materialize: bool = False) -> dict:
    f = code.field
    out = {
        "format": FORMAT_VERSION,
        "n": code.n,
        "k": code.k,
        "q": f.q,
        "p": f.p,
        "r": f.r,
        "modulus": list(f.modulus) if f.modulus is not None else None,
        "min_distance": code.min_distance,
        "method": code.method,
        "size": code.size,
        "size_polynomial": str(code.size_polynomial()),
        "components": [
            {
                "identifying_vector": str(c.vector),
                "dimension": c.dimension,
                "pending": None if c.pending is None else {
                    "column": c.pending.column, "width": c.pending.width, "value": c.pending.value},
            }
            for c in code.components
        ],
    }
    if materialize:
        out["codewords"] = code.materialize().tolist()
    return out


def dumps(code: SubspaceCode, materialize: bool = False) -> str:
    return json.dumps(code_to_dict(code, materialize), sort_keys=True, separators=(",", ":")) + "\n"


def write_code(code: SubspaceCode, path: str | Path, materialize: bool = False) -> None:
    Path(path).write_text(dumps(code, materialize), encoding="utf-8")


def code_from_dict(data: dict) -> tuple[SubspaceCode, list | None]:
    """Rebuild a code from its components; also return the stored codewords, if any."""
    for key in ("n", "k", "q", "min_distance", "method", "components"):
        if key not in data:
            raise ValueError(f"code file lacks {key!r}")
    if data["method"] not in METHODS:
        raise ValueError(f"unknown method {data['method']!r}")
    if data["min_distance"] % 2:
        raise ValueError("min_distance must be even")
    f = field(int(data["q"]))
    if data.get("modulus") is not None and f.modulus is not None and list(f.modulus) != list(data["modulus"]):
        raise ValueError(f"modulus {data['modulus']} differs from this library's {list(f.modulus)}")
    parts = []
    for comp in data["components"]:
        v = IdentifyingVector.parse(comp["identifying_vector"])
        if v.n != data["n"] or v.weight != data["k"]:
            raise ValueError(f"identifying vector {v} does not match n={data['n']}, k={data['k']}")
        pend = comp.get("pending")
        fix = None if pend is None else PendingFix(int(pend["column"]), int(pend.get("width", 1)), int(pend["value"]))
        parts.append((v, fix))
    code = assemble(int(data["n"]), int(data["k"]), data["min_distance"] // 2, f, data["method"], parts)
    for comp, c in zip(data["components"], code.components):
        if "dimension" in comp and comp["dimension"] != c.dimension:
            raise ValueError(f"component {c.vector}: stored dimension {comp['dimension']}, rebuilt {c.dimension}")
    return code, data.get("codewords")


def read_code(path: str | Path) -> tuple[SubspaceCode, list | None]:
    return code_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
