"""Decision support for assembling disability-accommodating workstations.

Given per-limb and per-sense disability degrees, classifies every catalog
I/O device as usable (green), conditionally usable (yellow), or unusable
(red), and checks workstation plans for feasibility.
"""

from .catalog import (
    BUILTIN_CATALOG_VERSION,
    Catalog,
    DeviceClass,
    DeviceSpec,
    OutputModality,
    UnknownDevice,
    catalog_from_dict,
    catalog_to_dict,
    default_catalog,
    device_to_dict,
    load_catalog,
    serialize_catalog,
)
from .documents import FieldError, InvalidDocument, MalformedDocument
from .matcher import (
    BODY,
    Color,
    DeviceVerdict,
    ExcessBreakdown,
    LimbVerdict,
    MatchReport,
    category_excess,
    classify,
    classify_device,
    eligible_limbs,
    limb_excess,
    match_profile,
    perception_excess,
)
from .process import (
    FINDING_CODES,
    FeasibilityFinding,
    ProcessType,
    Severity,
    WorkstationPlan,
    check_two_senses,
    has_errors,
    parse_plan,
    plan_from_dict,
    plan_to_dict,
    validate_workstation,
)
from .profiles import (
    LIMB_CATEGORIES,
    LIMBS,
    PERCEPTION_CATEGORIES,
    STANDARD_SCALES,
    DegreeScale,
    DisabilityCategory,
    DisabilityProfile,
    LimbId,
    LimbKind,
    Side,
    parse_profile,
    profile_digest,
    profile_from_dict,
    profile_to_dict,
    scale_for,
    serialize_profile,
    validate_profile,
    zero_profile,
)
from .report import (
    parse_structured,
    render_findings_text,
    render_structured,
    render_text,
    report_from_dict,
    report_to_dict,
    verdict_from_dict,
    verdict_to_dict,
)

__all__ = [
    "BODY",
    "BUILTIN_CATALOG_VERSION",
    "Catalog",
    "Color",
    "DegreeScale",
    "DeviceClass",
    "DeviceSpec",
    "DeviceVerdict",
    "DisabilityCategory",
    "DisabilityProfile",
    "ExcessBreakdown",
    "FINDING_CODES",
    "FeasibilityFinding",
    "FieldError",
    "InvalidDocument",
    "LIMBS",
    "LIMB_CATEGORIES",
    "LimbId",
    "LimbKind",
    "LimbVerdict",
    "MalformedDocument",
    "MatchReport",
    "OutputModality",
    "PERCEPTION_CATEGORIES",
    "ProcessType",
    "STANDARD_SCALES",
    "Severity",
    "Side",
    "UnknownDevice",
    "WorkstationPlan",
    "catalog_from_dict",
    "catalog_to_dict",
    "category_excess",
    "check_two_senses",
    "classify",
    "classify_device",
    "default_catalog",
    "device_to_dict",
    "eligible_limbs",
    "has_errors",
    "limb_excess",
    "load_catalog",
    "match_profile",
    "parse_plan",
    "parse_profile",
    "parse_structured",
    "perception_excess",
    "plan_from_dict",
    "plan_to_dict",
    "profile_digest",
    "profile_from_dict",
    "profile_to_dict",
    "render_findings_text",
    "render_structured",
    "render_text",
    "report_from_dict",
    "report_to_dict",
    "scale_for",
    "serialize_catalog",
    "serialize_profile",
    "validate_profile",
    "validate_workstation",
    "verdict_from_dict",
    "verdict_to_dict",
    "zero_profile",
]
