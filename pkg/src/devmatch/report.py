"""Rendering of match reports and feasibility findings.

Two surfaces: a stable, diff-friendly text layout for terminals, and the
normative JSON serialization consumed by the CLI, the HTTP service, and the
web configurator. Colors are always written out as words; the output never
relies on terminal color codes.
"""

import json
from typing import Mapping, Sequence

from .matcher import (
    Color,
    DeviceVerdict,
    ExcessBreakdown,
    LimbVerdict,
    MatchReport,
)
from .process import FeasibilityFinding, finding_from_dict, finding_to_dict
from .profiles import DisabilityCategory


def _breakdown_to_dict(breakdown: ExcessBreakdown) -> dict:
    return {
        "excess": {cat.value: v for cat, v in breakdown.per_category.items()},
        "total": breakdown.total,
    }


def _breakdown_from_dict(data: Mapping) -> ExcessBreakdown:
    per_category = {DisabilityCategory(k): v for k, v in data["excess"].items()}
    return ExcessBreakdown(per_category=per_category, total=data["total"])


def verdict_to_dict(verdict: DeviceVerdict) -> dict:
    return {
        "device_id": verdict.device_id,
        "color": verdict.color.value,
        "per_limb": {
            key: {"color": lv.color.value, **_breakdown_to_dict(lv.excess)}
            for key, lv in verdict.per_limb.items()
        },
        "perception_excess": _breakdown_to_dict(verdict.perception_excess),
        "rationale": list(verdict.rationale),
    }


def verdict_from_dict(data: Mapping) -> DeviceVerdict:
    per_limb = {
        key: LimbVerdict(Color(entry["color"]), _breakdown_from_dict(entry))
        for key, entry in data["per_limb"].items()
    }
    return DeviceVerdict(
        device_id=data["device_id"],
        color=Color(data["color"]),
        per_limb=per_limb,
        perception_excess=_breakdown_from_dict(data["perception_excess"]),
        rationale=tuple(data["rationale"]),
    )


def report_to_dict(report: MatchReport,
                   findings: Sequence[FeasibilityFinding] = ()) -> dict:
    return {
        "profile_digest": report.profile_digest,
        "catalog_version": report.catalog_version,
        "summary": dict(report.summary),
        "verdicts": [verdict_to_dict(v) for v in report.verdicts],
        "findings": [finding_to_dict(f) for f in findings],
    }


def report_from_dict(data: Mapping):
    report = MatchReport(
        profile_digest=data["profile_digest"],
        catalog_version=data["catalog_version"],
        summary=dict(data["summary"]),
        verdicts=tuple(verdict_from_dict(v) for v in data["verdicts"]),
    )
    findings = [finding_from_dict(f) for f in data.get("findings", [])]
    return report, findings


def render_structured(report: MatchReport,
                      findings: Sequence[FeasibilityFinding] = ()) -> str:
    return json.dumps(report_to_dict(report, findings), indent=2, ensure_ascii=False)


def parse_structured(text: str):
    """Inverse of render_structured; returns (report, findings)."""
    return report_from_dict(json.loads(text))


def _best_limb_key(verdict: DeviceVerdict) -> str:
    return min(verdict.per_limb, key=lambda k: verdict.per_limb[k].excess.total)


def render_findings_text(findings: Sequence[FeasibilityFinding]) -> str:
    lines = ["findings:"]
    for finding in findings:
        lines.append(f"  {finding.severity.value:<8} {finding.code:<24} {finding.message}")
    return "\n".join(lines)


def render_text(report: MatchReport,
                findings: Sequence[FeasibilityFinding] = ()) -> str:
    lines = [
        f"catalog {report.catalog_version} | profile {report.profile_digest[:12]}",
        "summary: " + " | ".join(
            f"{color.value}: {report.summary.get(color.value, 0)}" for color in Color),
        "",
    ]
    for verdict in report.verdicts:
        best = _best_limb_key(verdict)
        line = f"{verdict.device_id:<18} {verdict.color.value:<7} best={best:<10} " \
               f"{'; '.join(verdict.rationale)}"
        lines.append(line.rstrip())
    if findings:
        lines.append("")
        lines.append(render_findings_text(findings))
    return "\n".join(lines) + "\n"
