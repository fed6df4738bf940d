"""Versioned JSON files for constructed codes and planner output.

Only integer encodings appear in files.  Loading a code file rebuilds the
field, root, matrix and selection from scratch and re-runs the LCD
certificate, so a tampered file fails loudly rather than decoding wrongly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .construction import CodeSpec, PlanResult, RowSelection, build_code
from .errors import UsageError
from .finite_field import FieldSpec, element_of_order, root_of_unity
from .fourier import FourierMatrix

FORMAT_VERSION = 1


def code_to_dict(c: CodeSpec, certificates: list[dict] | None = None) -> dict:
    out = {
        "format_version": FORMAT_VERSION,
        "kind": "code",
        "field": c.field.to_dict(),
        "omega": c.omega.value,
        "n": c.n,
        "selection": c.selection.to_dict(),
        "declared": {"d": c.d, "t": c.t},
        "rows": c.indices,
        "dual_rows": c.dual_indices,
    }
    if certificates:
        out["certificates"] = certificates
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dumps_code(c: CodeSpec, certificates: list[dict] | None = None) -> str:
    return dumps(code_to_dict(c, certificates))


def code_from_dict(d: dict) -> CodeSpec:
    if d.get("format_version") != FORMAT_VERSION:
        raise UsageError(f"unsupported format_version {d.get('format_version')!r}")
    try:
        fd, sel = d["field"], d["selection"]
        p, m, modulus = int(fd["p"]), int(fd["m"]), tuple(int(x) for x in fd["modulus"])
        n, omega_value = int(d["n"]), int(d["omega"])
        start, step, dim = int(sel["start"]), int(sel["step"]), int(sel["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed code file: {exc!r}") from exc
    field = FieldSpec(p, m, modulus)
    selection = RowSelection(n, start, step, dim)
    derived = element_of_order(field, n) if (field.q - 1) % n == 0 else None
    if derived is not None and derived.value == omega_value:
        omega = derived
    else:
        omega = root_of_unity(field, omega_value, n)
    code = build_code(FourierMatrix(field, omega), selection)
    declared = d.get("declared", {})
    if declared and (declared.get("d"), declared.get("t")) != (code.d, code.t):
        raise UsageError(f"declared (d, t) = ({declared.get('d')}, {declared.get('t')}) "
                         f"does not match the rebuilt code ({code.d}, {code.t})")
    if "rows" in d and list(d["rows"]) != code.indices:
        raise UsageError("listed rows do not match the selection")
    return code


def load_code(path: str | Path) -> CodeSpec:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read code file {path}: {exc}") from exc
    return code_from_dict(data)


def plan_to_dict(plan: PlanResult) -> dict:
    return {"format_version": FORMAT_VERSION, "kind": "plan", **plan.to_dict()}


def load_plan(path: str | Path) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read plan file {path}: {exc}") from exc
    if data.get("kind") != "plan" or data.get("format_version") != FORMAT_VERSION:
        raise UsageError(f"{path} is not a version-{FORMAT_VERSION} plan file")
    return data
