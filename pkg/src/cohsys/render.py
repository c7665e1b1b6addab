"""Deterministic table / JSON / CSV rendering of every report type.

Each report is first turned into a plain ordered view (dicts, lists,
scalars, Fractions); the three formats are projections of that view.
Rationals are never printed as decimals.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
from fractions import Fraction

from .constructions import Check, ExampleReport, OverviewRow
from .profile import SystemProfile, TriVerdict, Verdict, profile_to_dict
from .slopes import SubsystemRecord, SystemType, Wall

FORMATS = ("table", "json", "csv")

# derived properties worth showing next to the stored fields
_EXTRA_PROPS = ("feasible", "matches", "reason", "implies_linear_stable", "dims")


def view(obj):
    """Plain ordered representation used by all formats."""
    if isinstance(obj, (bool, int, str, Fraction)) or obj is None:
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, SystemProfile):
        return profile_to_dict(obj)
    if isinstance(obj, (SubsystemRecord, SystemType)):
        return {"r": obj.r, "d": obj.d, "n": obj.n, "generated": obj.generated}
    if isinstance(obj, Verdict):
        out = {"regime": obj.regime.value, "outcome": obj.outcome.value,
               "witness": view(obj.witness), "basis": obj.basis}
        if obj.alpha is not None:
            out["alpha"] = obj.alpha
        if obj.unresolved:
            out["unresolved"] = [view(x) for x in obj.unresolved]
        return out
    if isinstance(obj, TriVerdict):
        return {"row": obj.row(), "alpha_small": view(obj.alpha_small),
                "alpha_large": view(obj.alpha_large), "linear": view(obj.linear)}
    if isinstance(obj, Wall):
        return {"alpha": obj.alpha, "witness": view(obj.witness)}
    if isinstance(obj, Check):
        return {"name": obj.name, "lhs": obj.lhs, "relation": obj.relation,
                "rhs": obj.rhs, "passed": obj.passed}
    if isinstance(obj, OverviewRow):
        return {"alpha_S": obj.cells[0], "alpha_L": obj.cells[1], "linear": obj.cells[2],
                "example": obj.label, "genus": obj.genus, "error": obj.error}
    if isinstance(obj, ExampleReport):
        return {"name": obj.name, "genus": obj.genus, "params": dict(obj.params),
                "system": view(obj.profile.sys), "row": obj.computed.row(),
                "expected": " ".join(obj.expected), "matches": obj.matches,
                "feasible": obj.feasible, "flags": list(obj.flags),
                "verdicts": view(obj.computed), "trace": [view(c) for c in obj.trace],
                "profile": view(obj.profile)}
    if dataclasses.is_dataclass(obj):
        out = {f.name: view(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for prop in _EXTRA_PROPS:
            attr = getattr(type(obj), prop, None)
            if isinstance(attr, property):
                out[prop] = view(getattr(obj, prop))
        return out
    if isinstance(obj, dict):
        return {str(k): view(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [view(x) for x in obj]
    raise TypeError(f"cannot render {type(obj).__name__}")


def _json_ready(v):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, dict):
        return {k: _json_ready(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_json_ready(x) for x in v]
    return v


def cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict) and set(v) == {"r", "d", "n", "generated"}:
        return f"({v['r']},{v['d']},{v['n']})"
    if isinstance(v, list):
        return " ".join(cell(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}={cell(x)}" for k, x in v.items())
    return str(v)


def _flatten(v, prefix: str = "") -> list:
    """(dotted key, scalar) pairs; subsystem records stay compact."""
    if isinstance(v, dict) and not (set(v) == {"r", "d", "n", "generated"}):
        out = []
        for k, x in v.items():
            out += _flatten(x, f"{prefix}.{k}" if prefix else k)
        return out
    if isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v):
        out = []
        for i, x in enumerate(v):
            out += _flatten(x, f"{prefix}[{i}]")
        return out
    return [(prefix, v)]


def _row_dicts(items: list) -> tuple:
    rows = [dict(_flatten(x)) for x in items]
    headers = []
    for r in rows:
        for k in r:
            if k not in headers:
                headers.append(k)
    return headers, rows


def _grid(headers: list, rows: list) -> str:
    body = [[cell(r.get(h)) for h in headers] for r in rows]
    widths = [max([len(h)] + [len(b[i]) for b in body]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for b in body:
        lines.append("  ".join(x.ljust(w) for x, w in zip(b, widths)).rstrip())
    return "\n".join(lines)


def _table(v) -> str:
    if isinstance(v, list):
        if not v:
            return "(no rows)"
        if all(isinstance(x, dict) for x in v):
            return _grid(*_row_dicts(v))
        return "\n".join(cell(x) for x in v)
    if not isinstance(v, dict):
        return cell(v)
    scalars, sections = [], []
    for k, x in v.items():
        if isinstance(x, list) and x and all(isinstance(y, dict) for y in x):
            sections.append((k, x))
        elif k == "profile":
            continue
        else:
            scalars += _flatten(x, k)
    width = max((len(k) for k, _ in scalars), default=0)
    parts = ["\n".join(f"{k.ljust(width)}  {cell(x)}".rstrip() for k, x in scalars)]
    for k, x in sections:
        parts.append(f"[{k}]\n" + _grid(*_row_dicts(x)))
    return "\n\n".join(p for p in parts if p)


def _overview_table(rows: list) -> str:
    lines = []
    for r in rows:
        text = " ".join(r.cells) + "  " + r.label
        if r.genus is not None:
            text += f" (g={r.genus})"
        if r.error:
            text += f"  error: {r.error}"
        lines.append(text)
    return "\n".join(lines)


def _csv(v) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
        headers, rows = _row_dicts(v)
        w.writerow(headers)
        for r in rows:
            w.writerow([cell(r.get(h)) for h in headers])
    elif isinstance(v, list):
        w.writerow(["value"])
        for x in v:
            w.writerow([cell(x)])
    else:
        w.writerow(["field", "value"])
        for k, x in _flatten(v):
            w.writerow([k, cell(x)])
    return buf.getvalue().rstrip("\n")


def render(report, fmt: str = "table") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    v = view(report)
    if fmt == "json":
        return json.dumps(_json_ready(v), indent=2)
    if fmt == "csv":
        return _csv(v)
    if isinstance(report, list) and report and all(isinstance(r, OverviewRow) for r in report):
        return _overview_table(report)
    if isinstance(report, TriVerdict):
        return report.row() + "\n\n" + _grid(*_row_dicts([view(x) for x in
                                                          (report.alpha_small, report.alpha_large, report.linear)]))
    return _table(v)


def has_undetermined(report) -> bool:
    def walk(v):
        if isinstance(v, dict):
            if v.get("outcome") == "Undetermined":
                return True
            return any(walk(x) for x in v.values())
        if isinstance(v, list):
            return any(walk(x) for x in v)
        return False

    return walk(view(report))
