"""Machine-readable check reports and deterministic emitters.

A report records one verification: what was computed, the reference value
or bound it is held against, the tolerance, and the outcome. Emission is
bit-stable for identical report lists: keys are sorted and floats are
rendered with 17 significant digits, so byte-identical output certifies a
deterministic run.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable

__all__ = ["CheckReport", "emit", "render", "reports_from_json"]

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

# Comparison modes: "eq" passes iff |computed - bound| <= tolerance;
# "le"/"ge" pass iff computed <= bound*(1+tolerance) (resp. >=, with 1-tolerance).
_MODES = ("eq", "le", "ge")


@dataclass(frozen=True)
class CheckReport:
    claim_id: str
    computed: float
    bound: float
    tolerance: float
    mode: str = "eq"
    status: str = ""
    citation: str = ""
    seed: int | None = None
    inputs: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.mode not in _MODES:
            raise ValueError("unknown comparison mode %r" % self.mode)
        if not self.status:
            object.__setattr__(self, "status", self._evaluate())
        elif self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError("unknown status %r" % self.status)

    def _evaluate(self) -> str:
        c, b = self.computed, self.bound
        if self.mode == "eq":
            ok = abs(c - b) <= self.tolerance
        elif self.mode == "le":
            ok = c <= b * (1.0 + self.tolerance) if b >= 0 else c <= b * (1.0 - self.tolerance)
        else:
            ok = c >= b * (1.0 - self.tolerance) if b >= 0 else c >= b * (1.0 + self.tolerance)
        return PASS if ok else FAIL

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "computed": self.computed,
            "bound": self.bound,
            "tolerance": self.tolerance,
            "mode": self.mode,
            "status": self.status,
            "citation": self.citation,
            "seed": self.seed,
            "inputs": self.inputs,
        }


def _render_scalar(value: Any) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return '"inf"' if value > 0 else '"-inf"'
        if math.isnan(value):
            return '"nan"'
        return format(value, ".17g")
    raise TypeError("cannot render %r" % type(value))


def render(obj: Any) -> str:
    """Canonical JSON text: sorted keys, floats at 17 significant digits."""
    if isinstance(obj, dict):
        items = ("%s:%s" % (json.dumps(str(k)), render(v)) for k, v in sorted(obj.items()))
        return "{%s}" % ",".join(items)
    if isinstance(obj, (list, tuple)):
        return "[%s]" % ",".join(render(v) for v in obj)
    return _render_scalar(obj)


CSV_HEADER = "claim_id,status,computed,bound,tolerance,citation,seed"


def _csv_cell(value: Any) -> str:
    text = value if isinstance(value, str) else _render_scalar(value).strip('"')
    if any(ch in text for ch in ",\"\n"):
        return '"%s"' % text.replace('"', '""')
    return text


def emit(reports: Iterable[CheckReport], fmt: str, path: str) -> None:
    """Write reports as json, csv, or markdown; output bytes depend only on
    the report contents."""
    reports = list(reports)
    if fmt == "json":
        text = render({"reports": [r.to_json() for r in reports]}) + "\n"
    elif fmt == "csv":
        lines = [CSV_HEADER]
        for r in reports:
            lines.append(
                ",".join(
                    _csv_cell(v)
                    for v in (
                        r.claim_id,
                        r.status,
                        r.computed,
                        r.bound,
                        r.tolerance,
                        r.citation,
                        r.seed,
                    )
                )
            )
        text = "\n".join(lines) + "\n"
    elif fmt == "markdown":
        lines = [
            "| claim | status | computed | bound | tolerance | citation |",
            "| --- | --- | --- | --- | --- | --- |",
        ]
        for r in reports:
            lines.append(
                "| %s | %s | %s | %s | %s | %s |"
                % (
                    r.claim_id,
                    r.status,
                    _render_scalar(r.computed).strip('"'),
                    _render_scalar(r.bound).strip('"'),
                    _render_scalar(r.tolerance),
                    r.citation,
                )
            )
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError("unknown format %r (want json, csv, or markdown)" % fmt)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def reports_from_json(path: str) -> list[CheckReport]:
    """Parse reports back from a json emission (round trip of ``emit``)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    out = []
    for item in data["reports"]:
        out.append(
            CheckReport(
                claim_id=item["claim_id"],
                computed=_parse_float(item["computed"]),
                bound=_parse_float(item["bound"]),
                tolerance=item["tolerance"],
                mode=item["mode"],
                status=item["status"],
                citation=item["citation"],
                seed=item["seed"],
                inputs=item["inputs"],
            )
        )
    return out


def _parse_float(value: Any) -> float:
    if value == "inf":
        return math.inf
    if value == "-inf":
        return -math.inf
    if value == "nan":
        return math.nan
    return float(value)
