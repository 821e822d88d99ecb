"""Audit report assembly and emission (stable text and versioned JSON).

A report is an ordered list of check records.  Verdicts:

    pass          the identity or cross-check holds exactly
    fail          an engine-verified identity is violated (exit code 1)
    flagged       a claimed value disagrees with the engine, or a finding
                  deserves attention; never affects the exit code
    inapplicable  the hypotheses of the check are not met on this manifold

Two runs over the same manifest and options produce byte-identical JSON
except for the generated_at timestamp.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .outcome import CheckOutcome

SCHEMA_VERSION = 1

VERDICTS = ("pass", "fail", "flagged", "inapplicable")

CONVENTIONS = {
    "bracket": "[X,Y]^i = X^j d_j(Y^i) - Y^j d_j(X^i)",
    "connection": "Koszul: 2 g(nabla_X Y, Z) = X g(Y,Z) + Y g(X,Z) "
                  "- Z g(X,Y) + g([X,Y],Z) - g([X,Z],Y) - g([Y,Z],X)",
    "curvature": "R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]",
    "ricci": "S(Y,Z) = sum_{i,j} g^{ij} g(R(e_i,Y)Z, e_j) (inverse-metric "
             "trace)",
    "ricci_alternative": "sum_i g(R(e_i,Y)Z, e_i) (naive frame trace, "
                         "reported for comparison only)",
    "exterior": "d(eta)(X,Y) = (X eta(Y) - Y eta(X) - eta([X,Y])) / 2",
}


@dataclass
class Check:
    id: str
    title: str
    statement: str
    verdict: str
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")


def check_from_outcome(cid: str, title: str, outcome: CheckOutcome,
                       verdict: str | None = None,
                       extra_notes: list | None = None) -> Check:
    """Wrap a module-level CheckOutcome; verdict defaults to pass/fail."""
    v = verdict if verdict is not None else ("pass" if outcome.holds
                                             else "fail")
    return Check(cid, title, outcome.statement, v, list(outcome.witnesses),
                 list(outcome.notes) + list(extra_notes or []),
                 dict(outcome.data))


@dataclass
class AuditReport:
    manifest_name: str
    options: dict
    checks: list = field(default_factory=list)
    engine: str = ""
    generated_at: str = ""

    def add(self, check: Check) -> Check:
        if any(c.id == check.id for c in self.checks):
            raise ValueError(f"duplicate check id {check.id!r}")
        self.checks.append(check)
        return check

    def counts(self) -> dict:
        out = {v: 0 for v in VERDICTS}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 1 if self.counts()["fail"] else 0

    def finalize(self) -> "AuditReport":
        if not self.generated_at:
            self.generated_at = datetime.now(timezone.utc).isoformat()
        return self


def report_to_dict(report: AuditReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "manifest": report.manifest_name,
        "engine": report.engine,
        "options": report.options,
        "conventions": CONVENTIONS,
        "checks": [
            {
                "id": c.id,
                "title": c.title,
                "statement": c.statement,
                "verdict": c.verdict,
                "witnesses": list(c.witnesses),
                "notes": list(c.notes),
                "data": c.data,
            }
            for c in report.checks
        ],
        "summary": report.counts(),
        "generated_at": report.generated_at,
    }


def render_json(report: AuditReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


_MARK = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAG",
         "inapplicable": "SKIP"}


def render_text(report: AuditReport) -> str:
    lines = [f"audit report: {report.manifest_name}",
             f"engine: {report.engine}"]
    for key in sorted(report.options):
        lines.append(f"option {key} = {report.options[key]}")
    lines.append("")
    for c in report.checks:
        lines.append(f"[{_MARK[c.verdict]}] {c.id}: {c.statement}")
        for w in c.witnesses:
            lines.append(f"    witness: {w}")
        for note in c.notes:
            lines.append(f"    note: {note}")
        for key in sorted(c.data):
            lines.append(f"    {key} = {c.data[key]}")
    counts = report.counts()
    lines.append("")
    lines.append("summary: " + "  ".join(
        f"{v}={counts[v]}" for v in VERDICTS))
    lines.append(f"generated: {report.generated_at}")
    return "\n".join(lines) + "\n"
