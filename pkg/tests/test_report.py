import json

from devmatch import (
    FeasibilityFinding,
    Severity,
    match_profile,
    parse_structured,
    render_findings_text,
    render_structured,
    render_text,
    report_from_dict,
    report_to_dict,
    zero_profile,
)
from devmatch.process import NO_OUTPUT_DEVICE, SAFETY_UNIT_MISMATCH

FINDINGS = [
    FeasibilityFinding(Severity.ERROR, SAFETY_UNIT_MISMATCH, "one robot, two guards"),
    FeasibilityFinding(Severity.WARNING, NO_OUTPUT_DEVICE, "nothing to see or hear"),
]


def test_structured_round_trip(catalog, example2):
    report = match_profile(example2, catalog)
    text = render_structured(report, FINDINGS)
    again, findings = parse_structured(text)
    assert again == report
    assert findings == FINDINGS


def test_report_dict_shape(catalog, example1):
    report = match_profile(example1, catalog)
    doc = report_to_dict(report)
    assert set(doc) == {"profile_digest", "catalog_version", "summary",
                        "verdicts", "findings"}
    assert doc["catalog_version"] == catalog.version
    assert doc["findings"] == []
    keyboard = next(v for v in doc["verdicts"] if v["device_id"] == "keyboard")
    assert keyboard["color"] == "green"
    assert keyboard["per_limb"]["left_arm"] == {
        "color": "red",
        "excess": {"mobility": 1, "movement_disturbance": 1},
        "total": 2,
    }
    assert keyboard["per_limb"]["right_arm"]["total"] == 0


def test_structured_output_is_json(catalog, zero):
    text = render_structured(match_profile(zero, catalog))
    doc = json.loads(text)
    assert doc["summary"] == {"green": 14, "yellow": 0, "red": 0}


def test_report_from_dict_defaults_findings(catalog, zero):
    report = match_profile(zero, catalog)
    doc = report_to_dict(report)
    del doc["findings"]
    again, findings = report_from_dict(doc)
    assert again == report
    assert findings == []


def test_text_layout(catalog, example2):
    report = match_profile(example2, catalog)
    text = render_text(report)
    lines = text.splitlines()
    assert lines[0].startswith(f"catalog {catalog.version} | profile ")
    assert lines[1] == "summary: green: 2 | yellow: 6 | red: 6"
    assert lines[2] == ""
    assert len(lines) == 3 + len(catalog.devices)
    assert text.endswith("\n")

    by_id = {line.split()[0]: line for line in lines[3:]}
    assert by_id["display"].split()[1:3] == ["yellow", "best=body"]
    assert "vision degree 1 exceeds max 0 by 1" in by_id["display"]
    assert by_id["speaker"].split()[1:3] == ["green", "best=body"]
    assert by_id["hand_button"].split()[1] == "green"


def test_text_includes_findings_section(catalog, zero):
    report = match_profile(zero, catalog)
    text = render_text(report, FINDINGS)
    assert "findings:" in text
    assert "error    SAFETY_UNIT_MISMATCH" in text
    assert "warning  NO_OUTPUT_DEVICE" in text
    # No findings, no section.
    assert "findings:" not in render_text(report)


def test_findings_text_alignment():
    text = render_findings_text(FINDINGS)
    lines = text.splitlines()
    assert lines[0] == "findings:"
    assert lines[1].startswith("  error    SAFETY_UNIT_MISMATCH")
    assert lines[2].startswith("  warning  NO_OUTPUT_DEVICE")
