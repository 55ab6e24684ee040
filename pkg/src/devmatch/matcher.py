"""Compatibility engine: excess arithmetic, color classification, match reports.

For every device and every operating limb, the person's degree in each
constrained category is compared with the device's maximum tolerable degree.
The amounts over the maximum ("excess") are summed across categories, with
vision/hearing counting toward every limb since they are global to the
person. The total maps to a traffic-light color:

    0 excess  -> green   (usable as-is)
    1 excess  -> yellow  (one step over in a single category; a designer
                          should confirm, possibly with compensation aids)
    2 or more -> red     (over the limit in one category or as an
                          aggregation of several; unusable)

A device's aggregate color is the best color over its operating limbs: one
usable limb is enough. Limb-independent devices (and all output devices) get
a single virtual "body" entry driven by perception alone.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional

from .catalog import Catalog, DeviceSpec
from .documents import InvalidDocument
from .profiles import (
    LIMB_CATEGORIES,
    LIMBS,
    PERCEPTION_CATEGORIES,
    DisabilityCategory,
    DisabilityProfile,
    LimbId,
    profile_digest,
    validate_profile,
)

BODY = "body"

_COLOR_RANK = {"green": 0, "yellow": 1, "red": 2}


class Color(str, Enum):
    GREEN = "green"
    YELLOW = "yellow"
    RED = "red"

    @property
    def rank(self) -> int:
        """Position in the green < yellow < red (worse) order."""
        return _COLOR_RANK[self.value]


@dataclass(frozen=True)
class ExcessBreakdown:
    """Positive per-category excesses and their sum; unconstrained cells are omitted."""

    per_category: Mapping[DisabilityCategory, int]
    total: int


def _breakdown(pairs) -> ExcessBreakdown:
    per_category = {cat: excess for cat, excess in pairs if excess > 0}
    return ExcessBreakdown(per_category=per_category,
                           total=sum(per_category.values()))


@dataclass(frozen=True)
class LimbVerdict:
    color: "Color"
    excess: ExcessBreakdown


@dataclass(frozen=True)
class DeviceVerdict:
    device_id: str
    color: "Color"
    per_limb: Mapping[str, LimbVerdict]
    perception_excess: ExcessBreakdown
    rationale: tuple


@dataclass(frozen=True)
class MatchReport:
    profile_digest: str
    catalog_version: str
    verdicts: tuple
    summary: Mapping[str, int]


def category_excess(degree: int, max_degree: Optional[int]) -> int:
    """Amount by which a degree exceeds a requirement cell (0 if unconstrained)."""
    if max_degree is None:
        return 0
    return max(0, degree - max_degree)


def classify(excess_total: int) -> Color:
    if excess_total == 0:
        return Color.GREEN
    if excess_total == 1:
        return Color.YELLOW
    return Color.RED


def eligible_limbs(device: DeviceSpec) -> tuple:
    """Limbs that can operate the device; empty for limb-independent devices."""
    kinds = device.operating_limb_kinds
    return tuple(limb for limb in LIMBS if limb.kind in kinds)


def perception_excess(profile: DisabilityProfile, device: DeviceSpec) -> ExcessBreakdown:
    return _breakdown(
        (cat, category_excess(profile.perception(cat), device.perception_cell(cat)))
        for cat in PERCEPTION_CATEGORIES)


def limb_excess(profile: DisabilityProfile, device: DeviceSpec,
                limb: LimbId) -> ExcessBreakdown:
    """Excess breakdown for one operating limb, perception included.

    Raises ValueError for a limb the device is not operated by.
    """
    if limb not in eligible_limbs(device):
        raise ValueError(f"{limb.key} is not an operating limb of '{device.id}'")
    pairs = [
        (cat, category_excess(profile.degree(limb, cat), device.cell(limb.kind, cat)))
        for cat in LIMB_CATEGORIES
    ]
    pairs += [
        (cat, category_excess(profile.perception(cat), device.perception_cell(cat)))
        for cat in PERCEPTION_CATEGORIES
    ]
    return _breakdown(pairs)


def _rationale(entry_key: str, breakdown: ExcessBreakdown, profile: DisabilityProfile,
               device: DeviceSpec) -> tuple:
    lines = []
    for cat, excess in breakdown.per_category.items():
        if cat in PERCEPTION_CATEGORIES:
            degree = profile.perception(cat)
            limit = device.perception_cell(cat)
        else:
            limb = LimbId.from_key(entry_key)
            degree = profile.degree(limb, cat)
            limit = device.cell(limb.kind, cat)
        lines.append(f"{entry_key}: {cat.value} degree {degree} "
                     f"exceeds max {limit} by {excess}")
    return tuple(lines)


def classify_device(profile: DisabilityProfile, device: DeviceSpec) -> DeviceVerdict:
    """Verdict for one device: per-limb colors, best-limb aggregate, rationale."""
    perception = perception_excess(profile, device)
    limbs = eligible_limbs(device)
    per_limb = {}
    if limbs:
        for limb in limbs:
            excess = limb_excess(profile, device, limb)
            per_limb[limb.key] = LimbVerdict(classify(excess.total), excess)
    else:
        per_limb[BODY] = LimbVerdict(classify(perception.total), perception)

    best_key = min(per_limb, key=lambda k: per_limb[k].excess.total)
    best = per_limb[best_key]
    return DeviceVerdict(
        device_id=device.id,
        color=best.color,
        per_limb=per_limb,
        perception_excess=perception,
        rationale=_rationale(best_key, best.excess, profile, device),
    )


def match_profile(profile: DisabilityProfile, catalog: Catalog) -> MatchReport:
    """One verdict per catalog device, in catalog order, plus color counts.

    The profile is validated against the catalog's scales first; violations
    raise InvalidDocument.
    """
    violations = validate_profile(profile, catalog.scales)
    if violations:
        raise InvalidDocument(violations)

    verdicts = tuple(classify_device(profile, device) for device in catalog.devices)
    summary = {color.value: 0 for color in Color}
    for verdict in verdicts:
        summary[verdict.color.value] += 1
    return MatchReport(
        profile_digest=profile_digest(profile),
        catalog_version=catalog.version,
        verdicts=verdicts,
        summary=summary,
    )
