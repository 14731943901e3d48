"""JSON schemas shared by the CLI and the file formats.

Matrix entries are integers or strings ``"p/q"`` with positive denominator
and reduced fraction on output; inputs may be unnormalized.  See
docs/formats.md for the full schemas.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .bundles import ExampleBundle
from .errors import FormatError
from .homext import Complex3
from .quiver import Arrow, DimVector, DoubledQuiver, Quiver, ZetaParam, double
from .ratmat import RatMatrix, as_fraction
from .rep import FramedRep


def fraction_to_json(value: Fraction) -> int | str:
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_json(obj: Any) -> Fraction:
    if isinstance(obj, bool):
        raise FormatError(f"expected a rational, got {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return as_fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational literal {obj!r}") from exc
    raise FormatError(f"expected int or 'p/q' string, got {type(obj).__name__}")


def matrix_to_json(m: RatMatrix) -> list[list[int | str]]:
    return [[fraction_to_json(v) for v in row] for row in m.data]


def matrix_from_json(obj: Any, rows: int, cols: int) -> RatMatrix:
    if not isinstance(obj, list):
        raise FormatError("matrix must be a JSON array of rows")
    if len(obj) != rows:
        raise FormatError(f"matrix has {len(obj)} rows, expected {rows}")
    data = []
    for row in obj:
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"matrix row has wrong width, expected {cols}")
        data.append([fraction_from_json(v) for v in row])
    return RatMatrix.from_rows(data, cols=cols)


def quiver_to_json(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in q.arrows],
    }


def quiver_from_json(obj: Any) -> Quiver:
    if not isinstance(obj, dict) or "vertices" not in obj or "arrows" not in obj:
        raise FormatError("quiver needs 'vertices' and 'arrows'")
    try:
        arrows = [Arrow(a["name"], a["from"], a["to"]) for a in obj["arrows"]]
        return Quiver([str(v) for v in obj["vertices"]], arrows)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed quiver: {exc}") from exc


def dimvec_to_json(v: DimVector) -> dict[str, int]:
    return v.as_dict()


def dimvec_from_json(q: Quiver | DoubledQuiver, obj: Any) -> DimVector:
    if not isinstance(obj, dict):
        raise FormatError("dimension vector must be a JSON object vertex -> integer")
    return DimVector.of(q, {str(k): int(val) for k, val in obj.items()})


def zeta_from_json(q: Quiver | DoubledQuiver, obj: Any) -> ZetaParam:
    if not isinstance(obj, dict):
        raise FormatError("zeta must be a JSON object vertex -> rational")
    return ZetaParam.of(q, {str(k): fraction_from_json(val) for k, val in obj.items()})


def rep_to_json(x: FramedRep) -> dict:
    payload: dict[str, Any] = {
        "quiver": quiver_to_json(x.dq.base),
        "dimV": dimvec_to_json(x.dim_v),
        "dimW": dimvec_to_json(x.dim_w),
        "B": {},
        "I": {},
        "J": {},
    }
    for name, m in x.B.items():
        if not m.is_zero:
            payload["B"][name] = matrix_to_json(m)
    for i in x.dq.vertices:
        if not x.I[i].is_zero:
            payload["I"][i] = matrix_to_json(x.I[i])
        if not x.J[i].is_zero:
            payload["J"][i] = matrix_to_json(x.J[i])
    return payload


def rep_from_json(obj: Any, base_dir: Path | None = None) -> FramedRep:
    if not isinstance(obj, dict):
        raise FormatError("representation must be a JSON object")
    quiver_field = obj.get("quiver")
    if isinstance(quiver_field, str):
        path = Path(quiver_field)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        quiver = quiver_from_json(load_json_file(path))
    else:
        quiver = quiver_from_json(quiver_field)
    dq = double(quiver)
    if "dimV" not in obj:
        raise FormatError("representation needs 'dimV'")
    dim_v = dimvec_from_json(quiver, obj["dimV"])
    dim_w = dimvec_from_json(quiver, obj.get("dimW", {}))
    arrow_names = {a.name: a for a in dq.arrows}
    B = {}
    for name, m in (obj.get("B") or {}).items():
        if name not in arrow_names:
            raise FormatError(f"B block for unknown doubled arrow {name!r}")
        a = arrow_names[name]
        B[name] = matrix_from_json(m, dim_v[a.target], dim_v[a.source])
    I = {}
    J = {}
    for i, m in (obj.get("I") or {}).items():
        if i not in quiver.vertices:
            raise FormatError(f"I block for unknown vertex {i!r}")
        I[i] = matrix_from_json(m, dim_v[i], dim_w[i])
    for i, m in (obj.get("J") or {}).items():
        if i not in quiver.vertices:
            raise FormatError(f"J block for unknown vertex {i!r}")
        J[i] = matrix_from_json(m, dim_w[i], dim_v[i])
    return FramedRep(dq, dim_v, dim_w, B, I, J)


def bundle_to_json(b: ExampleBundle) -> dict:
    return {
        "name": b.name,
        "quiver": quiver_to_json(b.dq.base),
        "dimV": dimvec_to_json(b.dim_v),
        "dimW": dimvec_to_json(b.dim_w),
        "reps": {name: rep_to_json(x) for name, x in sorted(b.reps.items())},
        "notes": dict(sorted(b.notes.items())),
    }


def layout_sha256(complex3: Complex3) -> str:
    canonical = json.dumps(complex3.middle.descriptor(), separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def classes_to_json(complex3: Complex3, vertex: str, classes: list[RatMatrix]) -> dict:
    return {
        "vertex": vertex,
        "layout_sha256": layout_sha256(complex3),
        "classes": [[fraction_to_json(v[k, 0]) for k in range(v.rows)] for v in classes],
    }


def classes_from_json(obj: Any, complex3: Complex3, vertex: str) -> list[RatMatrix]:
    if not isinstance(obj, dict) or "classes" not in obj:
        raise FormatError("cocycle file needs a 'classes' array")
    if obj.get("vertex") != vertex:
        raise FormatError(
            f"cocycle file is for vertex {obj.get('vertex')!r}, not {vertex!r}"
        )
    expected = layout_sha256(complex3)
    if obj.get("layout_sha256") != expected:
        raise FormatError("cocycle layout hash does not match this representation")
    out = []
    for entry in obj["classes"]:
        if not isinstance(entry, list) or len(entry) != complex3.middle.dim:
            raise FormatError(f"cocycle vector must have {complex3.middle.dim} entries")
        out.append(RatMatrix.column([fraction_from_json(v) for v in entry]))
    return out


def fingerprint_to_json(entries) -> list[list]:
    out = []
    for label, value in entries:
        kind = label[0]
        if kind == "cycle":
            out.append([{"cycle": list(label[1:])}, fraction_to_json(value)])
        else:
            origin, word, target, r, c = label[1], label[2], label[3], label[4], label[5]
            out.append(
                [
                    {"path": {"from": origin, "word": list(word), "to": target, "entry": [r, c]}},
                    fraction_to_json(value),
                ]
            )
    return out


def load_json_file(path: Path | str):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def file_sha256(path: Path | str) -> str:
    with open(path, "rb") as handle:
        return hashlib.sha256(handle.read()).hexdigest()


def text_sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
