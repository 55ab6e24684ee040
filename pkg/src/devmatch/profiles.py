"""Disability taxonomy and person profiles.

Seven disability categories are tracked: five apply per limb (both arms and
both legs are assessed separately) and two apply to perception as a whole.
Each category carries an ordinal degree scale where 0 means no limitation and
higher values mean greater impact on device operation. A profile assigns a
degree to every (limb, category) slot and to both senses.
"""

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence

import yaml

from .documents import FieldError, InvalidDocument, load_mapping, require_int


class DisabilityCategory(str, Enum):
    AMPUTATION_DYSMELIA = "amputation_dysmelia"
    MOBILITY = "mobility"
    PARALYSIS = "paralysis"
    MOVEMENT_DISTURBANCE = "movement_disturbance"
    PRESSURE_SENSITIVITY = "pressure_sensitivity"
    VISION = "vision"
    HEARING = "hearing"


LIMB_CATEGORIES = (
    DisabilityCategory.AMPUTATION_DYSMELIA,
    DisabilityCategory.MOBILITY,
    DisabilityCategory.PARALYSIS,
    DisabilityCategory.MOVEMENT_DISTURBANCE,
    DisabilityCategory.PRESSURE_SENSITIVITY,
)

PERCEPTION_CATEGORIES = (
    DisabilityCategory.VISION,
    DisabilityCategory.HEARING,
)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class LimbKind(str, Enum):
    ARM = "arm"
    LEG = "leg"


@dataclass(frozen=True)
class LimbId:
    side: Side
    kind: LimbKind

    @property
    def key(self) -> str:
        return f"{self.side.value}_{self.kind.value}"

    @classmethod
    def from_key(cls, key: str) -> "LimbId":
        side, _, kind = key.partition("_")
        return cls(Side(side), LimbKind(kind))


LIMBS = (
    LimbId(Side.LEFT, LimbKind.ARM),
    LimbId(Side.RIGHT, LimbKind.ARM),
    LimbId(Side.LEFT, LimbKind.LEG),
    LimbId(Side.RIGHT, LimbKind.LEG),
)


@dataclass(frozen=True)
class DegreeLevel:
    value: int
    label: str


@dataclass(frozen=True)
class DegreeScale:
    """Ordered degree levels for one category (and limb kind, if limb-bound)."""

    category: DisabilityCategory
    limb_kind: Optional[LimbKind]
    levels: tuple

    @property
    def max_degree(self) -> int:
        return self.levels[-1].value

    def label_for(self, value: int) -> str:
        return self.levels[value].label

    def in_range(self, value: int) -> bool:
        return 0 <= value <= self.max_degree


def _scale(category, limb_kind, *labels):
    levels = tuple(DegreeLevel(i, label) for i, label in enumerate(labels))
    return DegreeScale(category, limb_kind, levels)


_C = DisabilityCategory
_K = LimbKind

STANDARD_SCALES = (
    _scale(_C.AMPUTATION_DYSMELIA, _K.ARM, "no limitation", "from 4 fingers",
           "all fingers", "from the hand", "from parts of the upper arm"),
    _scale(_C.MOBILITY, _K.ARM, "no limitation", "limited mobility of the hand",
           "limited mobility of the arm"),
    _scale(_C.PARALYSIS, _K.ARM, "no limitation", "paralysis of the hand",
           "paralysis of the arm"),
    _scale(_C.MOVEMENT_DISTURBANCE, _K.ARM, "no disturbance", "mild disturbance",
           "severe disturbance"),
    _scale(_C.PRESSURE_SENSITIVITY, _K.ARM, "no limitation", "moderate", "severe"),
    _scale(_C.AMPUTATION_DYSMELIA, _K.LEG, "no limitation", "foot",
           "from parts of the lower leg"),
    _scale(_C.MOBILITY, _K.LEG, "no limitation", "slightly limited mobility",
           "severely limited mobility"),
    _scale(_C.PARALYSIS, _K.LEG, "no limitation", "paralysis of the foot",
           "paralysis of the leg"),
    _scale(_C.MOVEMENT_DISTURBANCE, _K.LEG, "no disturbance", "mild disturbance",
           "severe disturbance"),
    _scale(_C.PRESSURE_SENSITIVITY, _K.LEG, "no limitation", "moderate", "severe"),
    _scale(_C.VISION, None, "no limitation", "partial limitation", "total limitation"),
    _scale(_C.HEARING, None, "no limitation", "partial limitation", "total limitation"),
)


def scale_for(category: DisabilityCategory, limb_kind: Optional[LimbKind] = None,
              scales: Sequence[DegreeScale] = STANDARD_SCALES) -> DegreeScale:
    for scale in scales:
        if scale.category == category and scale.limb_kind == limb_kind:
            return scale
    raise KeyError(f"no degree scale for {category.value}/{limb_kind}")


@dataclass(frozen=True)
class DisabilityProfile:
    """Complete degree assignment: one value per (limb, category) slot and sense.

    Immutable by convention once built; all constructors in this module return
    fully populated profiles, so lookups never have to default.
    """

    limb_degrees: Mapping[LimbId, Mapping[DisabilityCategory, int]]
    perception_degrees: Mapping[DisabilityCategory, int]

    def degree(self, limb: LimbId, category: DisabilityCategory) -> int:
        return self.limb_degrees[limb][category]

    def perception(self, category: DisabilityCategory) -> int:
        return self.perception_degrees[category]


def zero_profile() -> DisabilityProfile:
    """Baseline profile: every slot at degree 0 (no limitation)."""
    return DisabilityProfile(
        limb_degrees={limb: {c: 0 for c in LIMB_CATEGORIES} for limb in LIMBS},
        perception_degrees={c: 0 for c in PERCEPTION_CATEGORIES},
    )


_LIMB_KEYS = {limb.key: limb for limb in LIMBS}

# Group shorthands expand before specific limbs, so a specific entry wins.
_GROUP_KEYS = {
    "all_limbs": LIMBS,
    "all_arms": tuple(l for l in LIMBS if l.kind == LimbKind.ARM),
    "all_legs": tuple(l for l in LIMBS if l.kind == LimbKind.LEG),
}

_LIMB_CATEGORY_KEYS = {c.value: c for c in LIMB_CATEGORIES}
_PERCEPTION_KEYS = {c.value: c for c in PERCEPTION_CATEGORIES}


def _apply_limb_entry(degrees, targets, entry, path, errors):
    if not isinstance(entry, dict):
        errors.append(FieldError(path, "expected a mapping of category keys to degrees"))
        return
    for cat_key, raw in entry.items():
        cat = _LIMB_CATEGORY_KEYS.get(cat_key)
        if cat is None:
            errors.append(FieldError(f"{path}.{cat_key}", "unknown limb category key"))
            continue
        value = require_int(raw, f"{path}.{cat_key}", errors)
        if value is None:
            continue
        for limb in targets:
            scale = scale_for(cat, limb.kind)
            if not scale.in_range(value):
                errors.append(FieldError(
                    f"{path}.{cat_key}",
                    f"degree {value} out of range for the {limb.kind.value} "
                    f"{cat.value} scale (0..{scale.max_degree})"))
            else:
                degrees[limb][cat] = value


def profile_from_dict(data: Mapping) -> DisabilityProfile:
    """Build a validated profile from parsed document data; omitted slots are 0."""
    errors: list = []
    degrees = {limb: {c: 0 for c in LIMB_CATEGORIES} for limb in LIMBS}
    perception = {c: 0 for c in PERCEPTION_CATEGORIES}

    for key in data:
        if key not in ("limbs", "perception"):
            errors.append(FieldError(str(key), "unknown key (expected 'limbs' or 'perception')"))

    limbs_doc = data.get("limbs") or {}
    if not isinstance(limbs_doc, dict):
        raise InvalidDocument([FieldError("limbs", "expected a mapping of limb keys")])
    for key in limbs_doc:
        if key not in _LIMB_KEYS and key not in _GROUP_KEYS:
            errors.append(FieldError(
                f"limbs.{key}",
                f"unknown limb key (expected one of {'|'.join([*_LIMB_KEYS, *_GROUP_KEYS])})"))
    for key in ("all_limbs", "all_arms", "all_legs"):
        if key in limbs_doc:
            _apply_limb_entry(degrees, _GROUP_KEYS[key], limbs_doc[key],
                              f"limbs.{key}", errors)
    for key, limb in _LIMB_KEYS.items():
        if key in limbs_doc:
            _apply_limb_entry(degrees, (limb,), limbs_doc[key], f"limbs.{key}", errors)

    perception_doc = data.get("perception") or {}
    if not isinstance(perception_doc, dict):
        raise InvalidDocument(
            [FieldError("perception", "expected a mapping of vision/hearing")])
    for key, raw in perception_doc.items():
        cat = _PERCEPTION_KEYS.get(key)
        if cat is None:
            errors.append(FieldError(f"perception.{key}", "unknown perception key"))
            continue
        value = require_int(raw, f"perception.{key}", errors)
        if value is None:
            continue
        scale = scale_for(cat)
        if not scale.in_range(value):
            errors.append(FieldError(
                f"perception.{key}",
                f"degree {value} out of range for the {cat.value} scale "
                f"(0..{scale.max_degree})"))
        else:
            perception[cat] = value

    if errors:
        raise InvalidDocument(errors)
    return DisabilityProfile(limb_degrees=degrees, perception_degrees=perception)


def parse_profile(text: str) -> DisabilityProfile:
    """Parse a profile document (YAML or JSON). Empty text is the zero profile."""
    return profile_from_dict(load_mapping(text, "profile document"))


def profile_to_dict(profile: DisabilityProfile) -> dict:
    """Explicit document form with every slot spelled out."""
    return {
        "limbs": {
            limb.key: {c.value: profile.degree(limb, c) for c in LIMB_CATEGORIES}
            for limb in LIMBS
        },
        "perception": {c.value: profile.perception(c) for c in PERCEPTION_CATEGORIES},
    }


def serialize_profile(profile: DisabilityProfile) -> str:
    return yaml.safe_dump(profile_to_dict(profile), sort_keys=False)


def profile_digest(profile: DisabilityProfile) -> str:
    canonical = json.dumps(profile_to_dict(profile), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def validate_profile(profile: DisabilityProfile,
                     scales: Sequence[DegreeScale] = STANDARD_SCALES) -> list:
    """Check completeness and ranges; violations are returned, not raised."""
    violations = []
    for limb in LIMBS:
        per_limb = profile.limb_degrees.get(limb)
        if per_limb is None:
            violations.append(FieldError(f"limbs.{limb.key}", "missing limb entry"))
            continue
        for cat in LIMB_CATEGORIES:
            if cat not in per_limb:
                violations.append(FieldError(
                    f"limbs.{limb.key}.{cat.value}", "missing degree slot"))
                continue
            scale = scale_for(cat, limb.kind, scales)
            value = per_limb[cat]
            if not scale.in_range(value):
                violations.append(FieldError(
                    f"limbs.{limb.key}.{cat.value}",
                    f"degree {value} out of range for the {limb.kind.value} "
                    f"{cat.value} scale (0..{scale.max_degree})"))
    for cat in PERCEPTION_CATEGORIES:
        if cat not in profile.perception_degrees:
            violations.append(FieldError(f"perception.{cat.value}", "missing degree slot"))
            continue
        scale = scale_for(cat, None, scales)
        value = profile.perception_degrees[cat]
        if not scale.in_range(value):
            violations.append(FieldError(
                f"perception.{cat.value}",
                f"degree {value} out of range for the {cat.value} scale "
                f"(0..{scale.max_degree})"))
    return violations
