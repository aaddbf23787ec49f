"""Machine- and human-readable verification reports.

A report is an ordered list of step records, one per pipeline stage, each
carrying the computed value, the expected value where one exists, the
tolerance it was graded at, and the verdict.  Values are JSON types only
(numbers, strings, booleans, lists, flat dicts), so a report serialized
and reparsed compares equal.  Deviations collect the stages whose banded
value missed its band, with enough structure to act on.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class StepRecord:
    name: str
    computed: Any
    expected: Any
    tolerance: Optional[float]
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class Deviation:
    step: str
    computed: Any
    expected: Any
    tolerance: Optional[float]
    detail: str


@dataclass(frozen=True)
class Report:
    title: str
    steps: tuple[StepRecord, ...]
    deviations: tuple[Deviation, ...] = ()

    @property
    def overall(self) -> bool:
        return all(step.passed for step in self.steps)

    def first_failure(self) -> Optional[str]:
        for step in self.steps:
            if not step.passed:
                return step.name
        return None

    def to_json(self) -> str:
        payload = {
            "title": self.title,
            "overall": "PASS" if self.overall else "FAIL",
            "steps": [asdict(step) for step in self.steps],
            "deviations": [asdict(dev) for dev in self.deviations],
        }
        return json.dumps(payload, indent=2)

    @staticmethod
    def from_json(text: str) -> "Report":
        payload = json.loads(text)
        steps = tuple(StepRecord(**record) for record in payload["steps"])
        deviations = tuple(Deviation(**record)
                           for record in payload.get("deviations", ()))
        report = Report(title=payload["title"], steps=steps, deviations=deviations)
        stated = payload.get("overall")
        if stated is not None and (stated == "PASS") != report.overall:
            raise ValueError("stated overall verdict contradicts the steps")
        return report

    def render_text(self) -> str:
        lines = [self.title]
        for step in self.steps:
            verdict = "ok" if step.passed else "FAIL"
            grade = "exact" if step.tolerance is None else f"tol {step.tolerance:g}"
            line = f"[{verdict}] {step.name}: computed={_fmt(step.computed)}"
            if step.expected is not None:
                line += f" expected={_fmt(step.expected)} ({grade})"
            if step.note:
                line += f"  # {step.note}"
            lines.append(line)
        for dev in self.deviations:
            lines.append(f"[deviation] {dev.step}: computed={_fmt(dev.computed)} "
                         f"expected={_fmt(dev.expected)} tol={dev.tolerance:g}; "
                         f"{dev.detail}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, dict):
        inner = ", ".join(f"{k}={_fmt(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)
