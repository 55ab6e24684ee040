#!/usr/bin/env python3
"""Run the two worked scenarios end-to-end and print their reports.

Scenario 1: a person with a mildly limited left arm. Both arms are assessed
separately, so device verdicts differ per side while every device stays
usable through the right arm.

Scenario 2: severe movement disturbance in all four limbs plus partially
limited vision. Only buttons (and the speaker) stay green; visual outputs
drop to yellow.
"""

import argparse

from devmatch import (
    ProcessType,
    WorkstationPlan,
    default_catalog,
    match_profile,
    profile_from_dict,
    render_findings_text,
    render_structured,
    render_text,
    validate_workstation,
)

SCENARIOS = [
    ("weak left arm",
     {"limbs": {"left_arm": {"movement_disturbance": 1, "mobility": 1}}}),
    ("severe limb disturbance, partial vision",
     {"limbs": {"all_limbs": {"movement_disturbance": 2}},
      "perception": {"vision": 1}}),
]

PLAN = WorkstationPlan(
    process_type=ProcessType.FLEXIBLE,
    device_ids=("hand_button", "trackball_mouse", "display", "speaker"),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    args = parser.parse_args()

    catalog = default_catalog()
    for label, doc in SCENARIOS:
        profile = profile_from_dict(doc)
        report = match_profile(profile, catalog)
        findings = validate_workstation(PLAN, catalog, profile)
        print(f"=== {label} ===")
        if args.format == "structured":
            print(render_structured(report, findings))
        else:
            print(render_text(report), end="")
            print()
            print(f"plan check ({', '.join(PLAN.device_ids)}):")
            if findings:
                print(render_findings_text(findings))
            else:
                print("  no findings")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
