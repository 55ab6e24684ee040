import pytest

from devmatch import (
    DeviceClass,
    FeasibilityFinding,
    InvalidDocument,
    ProcessType,
    Severity,
    UnknownDevice,
    WorkstationPlan,
    check_two_senses,
    has_errors,
    parse_plan,
    plan_from_dict,
    plan_to_dict,
    profile_from_dict,
    validate_workstation,
    zero_profile,
)
from devmatch.process import (
    INPUT_CLASS_ONLY_YELLOW,
    INPUT_CLASS_UNSATISFIED,
    MISSING_BASIC_STRUCTURE,
    NO_OUTPUT_DEVICE,
    SAFETY_UNIT_MISMATCH,
    SENSE_UNAVAILABLE,
    TWO_SENSES_NOT_MET,
    class_satisfies,
    required_input_classes,
)


def plan(**overrides):
    defaults = dict(process_type=ProcessType.FLEXIBLE,
                    device_ids=("keyboard", "display", "speaker"))
    defaults.update(overrides)
    return WorkstationPlan(**defaults)


def codes(findings):
    return [f.code for f in findings]


def test_required_input_classes():
    assert required_input_classes(ProcessType.SEQUENTIAL) == {DeviceClass.ONE_DIM_INPUT}
    assert required_input_classes(ProcessType.FLEXIBLE) == {DeviceClass.MULTI_DIM_INPUT}


def test_class_satisfies_substitution():
    one_dim_needed = frozenset({DeviceClass.ONE_DIM_INPUT})
    multi_needed = frozenset({DeviceClass.MULTI_DIM_INPUT})
    assert class_satisfies(DeviceClass.ONE_DIM_INPUT, one_dim_needed)
    assert class_satisfies(DeviceClass.MULTI_DIM_INPUT, one_dim_needed)
    assert class_satisfies(DeviceClass.MULTI_DIM_INPUT, multi_needed)
    assert not class_satisfies(DeviceClass.ONE_DIM_INPUT, multi_needed)
    assert not class_satisfies(DeviceClass.OUTPUT, one_dim_needed)


def test_feasible_plan_has_no_findings(catalog, zero):
    assert validate_workstation(plan(), catalog, zero) == []


def test_safety_unit_mismatch_fires_exactly_on_difference(catalog, zero):
    for action, safety in ((1, 1), (2, 2), (3, 3)):
        findings = validate_workstation(
            plan(action_units=action, safety_units=safety), catalog, zero)
        assert SAFETY_UNIT_MISMATCH not in codes(findings)
    for action, safety in ((1, 2), (2, 1), (3, 0)):
        findings = validate_workstation(
            plan(action_units=action, safety_units=safety), catalog, zero)
        assert SAFETY_UNIT_MISMATCH in codes(findings)
        assert has_errors(findings)


def test_missing_basic_structure(catalog, zero):
    findings = validate_workstation(plan(work_table=False), catalog, zero)
    assert MISSING_BASIC_STRUCTURE in codes(findings)
    findings = validate_workstation(plan(computer=False, work_table=False),
                                    catalog, zero)
    message = next(f for f in findings if f.code == MISSING_BASIC_STRUCTURE).message
    assert "work table" in message and "computer" in message


def test_flexible_plan_rejects_one_dim_only(catalog, zero):
    findings = validate_workstation(
        plan(device_ids=("hand_button", "display", "speaker")), catalog, zero)
    assert INPUT_CLASS_UNSATISFIED in codes(findings)
    assert has_errors(findings)


def test_sequential_plan_accepts_multi_dim_substitute(catalog, zero):
    findings = validate_workstation(
        plan(process_type=ProcessType.SEQUENTIAL,
             device_ids=("keyboard", "display", "speaker")),
        catalog, zero)
    assert findings == []


def test_input_class_needs_green_not_yellow(catalog):
    # Vision=1 makes the keyboard yellow; no green multi-dim input selected.
    profile = profile_from_dict({"perception": {"vision": 1}})
    findings = validate_workstation(
        plan(device_ids=("keyboard", "display", "speaker")), catalog, profile)
    assert INPUT_CLASS_UNSATISFIED in codes(findings)
    assert INPUT_CLASS_ONLY_YELLOW in codes(findings)
    yellow = next(f for f in findings if f.code == INPUT_CLASS_ONLY_YELLOW)
    assert yellow.severity is Severity.WARNING
    assert "keyboard" in yellow.message


def test_no_output_device_warns(catalog, zero):
    findings = validate_workstation(plan(device_ids=("keyboard",)), catalog, zero)
    assert NO_OUTPUT_DEVICE in codes(findings)
    assert TWO_SENSES_NOT_MET in codes(findings)
    # Warnings only: the plan is still feasible.
    assert not has_errors(findings)


def test_two_senses_requires_both_modalities(catalog, zero):
    visual_only = validate_workstation(
        plan(device_ids=("keyboard", "display")), catalog, zero)
    assert TWO_SENSES_NOT_MET in codes(visual_only)
    auditory_only = validate_workstation(
        plan(device_ids=("keyboard", "speaker")), catalog, zero)
    assert TWO_SENSES_NOT_MET in codes(auditory_only)
    both = validate_workstation(
        plan(device_ids=("keyboard", "signal_tower", "speaker")), catalog, zero)
    assert TWO_SENSES_NOT_MET not in codes(both)


def test_totally_limited_sense_cannot_count(catalog):
    profile = profile_from_dict({"perception": {"hearing": 2}})
    findings = check_two_senses(
        [catalog.device("display"), catalog.device("speaker")], profile)
    assert codes(findings) == [SENSE_UNAVAILABLE, TWO_SENSES_NOT_MET]
    # Partial limitation still counts.
    profile = profile_from_dict({"perception": {"hearing": 1}})
    assert check_two_senses(
        [catalog.device("display"), catalog.device("speaker")], profile) == []


def test_unknown_device_raises(catalog, zero):
    with pytest.raises(UnknownDevice):
        validate_workstation(plan(device_ids=("hoverboard",)), catalog, zero)


def test_plan_from_dict_defaults():
    parsed = plan_from_dict({"process_type": "sequential"})
    assert parsed == WorkstationPlan(process_type=ProcessType.SEQUENTIAL)
    assert parsed.action_units == 1
    assert parsed.safety_units == 1
    assert parsed.work_table and parsed.computer


def test_plan_safety_units_default_to_action_units():
    parsed = plan_from_dict({"process_type": "flexible", "action_units": 3})
    assert parsed.safety_units == 3


@pytest.mark.parametrize("doc,path", [
    ({}, "process_type"),
    ({"process_type": "circular"}, "process_type"),
    ({"process_type": "flexible", "action_units": 0}, "action_units"),
    ({"process_type": "flexible", "action_units": True}, "action_units"),
    ({"process_type": "flexible", "safety_units": -1}, "safety_units"),
    ({"process_type": "flexible", "devices": "keyboard"}, "devices"),
    ({"process_type": "flexible", "devices": [1]}, "devices"),
    ({"process_type": "flexible", "work_table": "yes"}, "work_table"),
    ({"process_type": "flexible", "robots": 2}, "robots"),
])
def test_plan_from_dict_rejects(doc, path):
    with pytest.raises(InvalidDocument) as exc_info:
        plan_from_dict(doc)
    assert any(err.path == path for err in exc_info.value.errors)


def test_plan_round_trip():
    original = plan(action_units=2, safety_units=2)
    assert plan_from_dict(plan_to_dict(original)) == original


def test_parse_plan_accepts_yaml_and_json():
    yaml_plan = parse_plan("process_type: sequential\ndevices: [hand_button]\n")
    json_plan = parse_plan('{"process_type": "sequential", "devices": ["hand_button"]}')
    assert yaml_plan == json_plan


def test_finding_is_frozen():
    finding = FeasibilityFinding(Severity.WARNING, NO_OUTPUT_DEVICE, "x")
    with pytest.raises(AttributeError):
        finding.code = "other"
