"""Work-process feasibility: required input classes and workstation composition.

Sequential processes (fixed pose order) are controlled with one-dimensional
inputs; flexible processes (selection among options) need a multi-dimensional
input. Multi-dimensional devices double as one-dimensional ones. A workstation
additionally needs its basic structure (work table and computer), exactly one
safety unit per action unit, and output coverage over two senses.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .catalog import Catalog, DeviceClass, DeviceSpec, OutputModality
from .documents import FieldError, InvalidDocument, load_mapping
from .matcher import Color, classify_device
from .profiles import DisabilityCategory, DisabilityProfile

# Closed set of finding codes; consumers may rely on these exact strings.
SAFETY_UNIT_MISMATCH = "SAFETY_UNIT_MISMATCH"
MISSING_BASIC_STRUCTURE = "MISSING_BASIC_STRUCTURE"
INPUT_CLASS_UNSATISFIED = "INPUT_CLASS_UNSATISFIED"
INPUT_CLASS_ONLY_YELLOW = "INPUT_CLASS_ONLY_YELLOW"
NO_OUTPUT_DEVICE = "NO_OUTPUT_DEVICE"
TWO_SENSES_NOT_MET = "TWO_SENSES_NOT_MET"
SENSE_UNAVAILABLE = "SENSE_UNAVAILABLE"

FINDING_CODES = frozenset({
    SAFETY_UNIT_MISMATCH,
    MISSING_BASIC_STRUCTURE,
    INPUT_CLASS_UNSATISFIED,
    INPUT_CLASS_ONLY_YELLOW,
    NO_OUTPUT_DEVICE,
    TWO_SENSES_NOT_MET,
    SENSE_UNAVAILABLE,
})


class ProcessType(str, Enum):
    SEQUENTIAL = "sequential"
    FLEXIBLE = "flexible"


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class FeasibilityFinding:
    severity: Severity
    code: str
    message: str


@dataclass(frozen=True)
class WorkstationPlan:
    process_type: ProcessType
    action_units: int = 1
    safety_units: int = 1
    device_ids: tuple = ()
    work_table: bool = True
    computer: bool = True


def required_input_classes(process_type: ProcessType) -> frozenset:
    if process_type == ProcessType.SEQUENTIAL:
        return frozenset({DeviceClass.ONE_DIM_INPUT})
    return frozenset({DeviceClass.MULTI_DIM_INPUT})


def class_satisfies(device_class: DeviceClass, required: frozenset) -> bool:
    """Multi-dimensional inputs also cover one-dimensional requirements."""
    for needed in required:
        if device_class == needed:
            return True
        if needed == DeviceClass.ONE_DIM_INPUT and device_class == DeviceClass.MULTI_DIM_INPUT:
            return True
    return False


_SENSE_BY_CATEGORY = {
    DisabilityCategory.VISION: OutputModality.VISUAL,
    DisabilityCategory.HEARING: OutputModality.AUDITORY,
}


def check_two_senses(selected: Sequence[DeviceSpec],
                     profile: DisabilityProfile) -> list:
    """Warn unless the selected outputs reach the person through two senses.

    A totally limited sense (degree 2) cannot count toward coverage and is
    flagged separately.
    """
    findings = []
    unavailable = set()
    for category, modality in _SENSE_BY_CATEGORY.items():
        if profile.perception(category) >= 2:
            unavailable.add(modality)
            findings.append(FeasibilityFinding(
                Severity.WARNING, SENSE_UNAVAILABLE,
                f"{category.value} is totally limited; {modality.value} output "
                f"cannot count toward two-senses coverage"))
    covered = {d.modality for d in selected
               if d.device_class == DeviceClass.OUTPUT and d.modality is not None}
    covered -= unavailable
    if covered != {OutputModality.VISUAL, OutputModality.AUDITORY}:
        reached = ", ".join(sorted(m.value for m in covered)) or "none"
        findings.append(FeasibilityFinding(
            Severity.WARNING, TWO_SENSES_NOT_MET,
            f"outputs reach the person through {reached}; information should "
            f"be conveyed through both a visual and an auditory device"))
    return findings


def validate_workstation(plan: WorkstationPlan, catalog: Catalog,
                         profile: DisabilityProfile) -> list:
    """All feasibility findings for a plan. Unknown device ids raise UnknownDevice."""
    devices = [catalog.device(device_id) for device_id in plan.device_ids]
    findings = []

    if plan.safety_units != plan.action_units:
        findings.append(FeasibilityFinding(
            Severity.ERROR, SAFETY_UNIT_MISMATCH,
            f"{plan.action_units} action unit(s) but {plan.safety_units} safety "
            f"unit(s); every action unit needs its own safety unit"))

    if not plan.work_table or not plan.computer:
        missing = [name for name, present in
                   (("work table", plan.work_table), ("computer", plan.computer))
                   if not present]
        findings.append(FeasibilityFinding(
            Severity.ERROR, MISSING_BASIC_STRUCTURE,
            f"basic structure incomplete: missing {' and '.join(missing)}"))

    required = required_input_classes(plan.process_type)
    candidates = [d for d in devices if class_satisfies(d.device_class, required)]
    colors = {d.id: classify_device(profile, d).color for d in candidates}
    if not any(colors[d.id] == Color.GREEN for d in candidates):
        needed = "|".join(sorted(c.value for c in required))
        findings.append(FeasibilityFinding(
            Severity.ERROR, INPUT_CLASS_UNSATISFIED,
            f"a {plan.process_type.value} process needs a green device of "
            f"class {needed} (multi-dimensional inputs also cover "
            f"one-dimensional needs); none selected"))
        yellow = [d.id for d in candidates if colors[d.id] == Color.YELLOW]
        if yellow:
            findings.append(FeasibilityFinding(
                Severity.WARNING, INPUT_CLASS_ONLY_YELLOW,
                f"only yellow candidate(s) for the required input class: "
                f"{', '.join(yellow)}; designer validation required"))

    if not any(d.device_class == DeviceClass.OUTPUT for d in devices):
        findings.append(FeasibilityFinding(
            Severity.WARNING, NO_OUTPUT_DEVICE,
            "no output device selected; the workstation cannot convey status "
            "or instructions"))

    findings.extend(check_two_senses(devices, profile))
    return findings


_PLAN_KEYS = ("process_type", "action_units", "safety_units", "devices",
              "work_table", "computer")


def plan_from_dict(data: Mapping) -> WorkstationPlan:
    """Build a validated plan from parsed document data (strict keys)."""
    errors = []
    for key in data:
        if key not in _PLAN_KEYS:
            errors.append(FieldError(str(key), "unknown plan field"))

    raw_type = data.get("process_type")
    process_type = None
    try:
        process_type = ProcessType(raw_type)
    except ValueError:
        errors.append(FieldError(
            "process_type",
            f"expected 'sequential' or 'flexible', got {raw_type!r}"))

    def count(key, default, minimum):
        value = data.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            errors.append(FieldError(key, f"expected an integer >= {minimum}, got {value!r}"))
            return default
        return value

    action_units = count("action_units", 1, 1)
    safety_units = count("safety_units", action_units, 0)

    raw_devices = data.get("devices", [])
    device_ids: tuple = ()
    if not isinstance(raw_devices, list) or not all(isinstance(d, str) for d in raw_devices):
        errors.append(FieldError("devices", "expected a list of device id strings"))
    else:
        device_ids = tuple(raw_devices)

    def flag(key):
        value = data.get(key, True)
        if not isinstance(value, bool):
            errors.append(FieldError(key, f"expected true/false, got {value!r}"))
            return True
        return value

    work_table = flag("work_table")
    computer = flag("computer")

    if errors:
        raise InvalidDocument(errors)
    return WorkstationPlan(
        process_type=process_type,
        action_units=action_units,
        safety_units=safety_units,
        device_ids=device_ids,
        work_table=work_table,
        computer=computer,
    )


def parse_plan(text: str) -> WorkstationPlan:
    return plan_from_dict(load_mapping(text, "plan document"))


def plan_to_dict(plan: WorkstationPlan) -> dict:
    return {
        "process_type": plan.process_type.value,
        "action_units": plan.action_units,
        "safety_units": plan.safety_units,
        "devices": list(plan.device_ids),
        "work_table": plan.work_table,
        "computer": plan.computer,
    }


def finding_to_dict(finding: FeasibilityFinding) -> dict:
    return {"severity": finding.severity.value, "code": finding.code,
            "message": finding.message}


def finding_from_dict(data: Mapping) -> FeasibilityFinding:
    return FeasibilityFinding(Severity(data["severity"]), data["code"],
                              data["message"])


def has_errors(findings: Sequence[FeasibilityFinding]) -> bool:
    return any(f.severity == Severity.ERROR for f in findings)
