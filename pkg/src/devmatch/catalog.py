"""Device catalog: device classes, requirement cells, loading and validation.

Each device lists the maximum tolerable degree per disability category,
split into arm, leg, and perception requirement maps. Cells are stored
sparsely: an absent category means no correlation between that disability
and the device. A device is operated by a limb kind only when at least one
cell for that kind is constrained; devices with no limb constraints at all
(outputs, mouth-operated devices) are limb-independent.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional

import yaml

from .documents import FieldError, InvalidDocument, load_mapping, require_int
from .profiles import (
    LIMB_CATEGORIES,
    LIMBS,
    PERCEPTION_CATEGORIES,
    DegreeScale,
    DisabilityCategory,
    LimbKind,
    STANDARD_SCALES,
    scale_for,
)

BUILTIN_CATALOG_VERSION = "builtin-1"


class DeviceClass(str, Enum):
    ONE_DIM_INPUT = "one_dim_input"
    MULTI_DIM_INPUT = "multi_dim_input"
    OUTPUT = "output"


class OutputModality(str, Enum):
    VISUAL = "visual"
    AUDITORY = "auditory"


class UnknownDevice(KeyError):
    def __init__(self, device_id: str):
        super().__init__(device_id)
        self.device_id = device_id

    def __str__(self):
        return f"unknown device id '{self.device_id}'"


@dataclass(frozen=True)
class DeviceSpec:
    """One device with its class and sparse requirement cells (max degrees)."""

    id: str
    name: str
    device_class: DeviceClass
    modality: Optional[OutputModality] = None
    arm: Mapping[DisabilityCategory, int] = field(default_factory=dict)
    leg: Mapping[DisabilityCategory, int] = field(default_factory=dict)
    perception: Mapping[DisabilityCategory, int] = field(default_factory=dict)

    def cell(self, kind: LimbKind, category: DisabilityCategory) -> Optional[int]:
        cells = self.arm if kind == LimbKind.ARM else self.leg
        return cells.get(category)

    def perception_cell(self, category: DisabilityCategory) -> Optional[int]:
        return self.perception.get(category)

    @property
    def operating_limb_kinds(self) -> tuple:
        kinds = []
        if self.arm:
            kinds.append(LimbKind.ARM)
        if self.leg:
            kinds.append(LimbKind.LEG)
        return tuple(kinds)

    @property
    def is_limb_independent(self) -> bool:
        return not self.arm and not self.leg


@dataclass(frozen=True)
class Catalog:
    version: str
    devices: tuple
    scales: tuple = STANDARD_SCALES

    def device(self, device_id: str) -> DeviceSpec:
        for d in self.devices:
            if d.id == device_id:
                return d
        raise UnknownDevice(device_id)

    def list_devices(self, device_class: Optional[DeviceClass] = None) -> list:
        if device_class is None:
            return list(self.devices)
        return [d for d in self.devices if d.device_class == device_class]


_C = DisabilityCategory


def _limb_cells(amputation, mobility, paralysis, disturbance, pressure):
    raw = {
        _C.AMPUTATION_DYSMELIA: amputation,
        _C.MOBILITY: mobility,
        _C.PARALYSIS: paralysis,
        _C.MOVEMENT_DISTURBANCE: disturbance,
        _C.PRESSURE_SENSITIVITY: pressure,
    }
    return {cat: v for cat, v in raw.items() if v is not None}


def default_catalog() -> Catalog:
    """The built-in catalog of fourteen devices and their requirement cells."""
    one_dim = DeviceClass.ONE_DIM_INPUT
    multi_dim = DeviceClass.MULTI_DIM_INPUT
    output = DeviceClass.OUTPUT
    devices = (
        DeviceSpec("hand_button", "Hand button", one_dim,
                   arm=_limb_cells(3, 1, 1, None, 0)),
        DeviceSpec("foot_button", "Foot button", one_dim,
                   leg=_limb_cells(0, 1, 0, 1, 0)),
        DeviceSpec("analog_joystick", "Analog joystick", multi_dim,
                   arm=_limb_cells(2, 0, 0, 0, 0), perception={_C.VISION: 1}),
        DeviceSpec("digital_joystick", "Digital joystick", multi_dim,
                   arm=_limb_cells(2, 0, 0, 1, 0)),
        DeviceSpec("keyboard", "Keyboard", multi_dim,
                   arm=_limb_cells(1, 0, 0, 0, 0), perception={_C.VISION: 0}),
        DeviceSpec("mouse", "Mouse", multi_dim,
                   arm=_limb_cells(0, 0, 0, 0, 0), perception={_C.VISION: 1}),
        DeviceSpec("touchpad", "Touchpad", multi_dim,
                   arm=_limb_cells(2, 1, 0, 0, 0), perception={_C.VISION: 1}),
        DeviceSpec("trackball_mouse", "Trackball mouse", multi_dim,
                   arm=_limb_cells(2, 1, 0, 1, 0)),
        DeviceSpec("key_mouse", "Key mouse", multi_dim,
                   arm=_limb_cells(1, 1, 0, 1, 0), perception={_C.VISION: 0}),
        DeviceSpec("foot_mouse", "Foot mouse", multi_dim,
                   leg=_limb_cells(0, 0, 0, 0, 0), perception={_C.VISION: 0}),
        DeviceSpec("mouth_mouse", "Mouth mouse", multi_dim,
                   perception={_C.VISION: 0}),
        DeviceSpec("display", "Display", output, OutputModality.VISUAL,
                   perception={_C.VISION: 0}),
        DeviceSpec("signal_tower", "Signal tower", output, OutputModality.VISUAL,
                   perception={_C.VISION: 0}),
        DeviceSpec("speaker", "Speaker", output, OutputModality.AUDITORY,
                   perception={_C.HEARING: 0}),
    )
    return Catalog(version=BUILTIN_CATALOG_VERSION, devices=devices)


_CLASS_KEYS = {c.value: c for c in DeviceClass}
_MODALITY_KEYS = {m.value: m for m in OutputModality}
_DEVICE_KEYS = ("id", "name", "class", "modality", "arm", "leg", "perception")


def _parse_cells(raw, allowed, limb_kind, path, errors):
    cells = {}
    if raw is None:
        return cells
    if not isinstance(raw, dict):
        errors.append(FieldError(path, "expected a mapping of category keys to max degrees"))
        return cells
    keys = {c.value: c for c in allowed}
    for key, value in raw.items():
        if key not in keys:
            errors.append(FieldError(f"{path}.{key}", "unknown category key"))
            continue
        cat = keys[key]
        max_degree = require_int(value, f"{path}.{key}", errors)
        if max_degree is None:
            continue
        scale = scale_for(cat, limb_kind)
        if not scale.in_range(max_degree):
            errors.append(FieldError(
                f"{path}.{key}",
                f"max degree {max_degree} outside the "
                f"{(limb_kind.value + ' ') if limb_kind else ''}{cat.value} "
                f"scale (0..{scale.max_degree})"))
            continue
        cells[cat] = max_degree
    return cells


def catalog_from_dict(data: Mapping) -> Catalog:
    """Build a validated catalog from parsed document data (strict keys)."""
    errors: list = []
    for key in data:
        if key not in ("version", "devices"):
            errors.append(FieldError(str(key), "unknown key (expected 'version' or 'devices')"))

    version = data.get("version", "unversioned")
    if not isinstance(version, str):
        errors.append(FieldError("version", "expected a string"))
        version = "unversioned"

    raw_devices = data.get("devices", [])
    if not isinstance(raw_devices, list):
        raise InvalidDocument([FieldError("devices", "expected a list of devices")])

    devices = []
    seen_ids = set()
    for i, raw in enumerate(raw_devices):
        path = f"devices[{i}]"
        if not isinstance(raw, dict):
            errors.append(FieldError(path, "expected a device mapping"))
            continue
        for key in raw:
            if key not in _DEVICE_KEYS:
                errors.append(FieldError(f"{path}.{key}", "unknown device field"))

        device_id = raw.get("id")
        if not isinstance(device_id, str) or not device_id:
            errors.append(FieldError(f"{path}.id", "device id must be a non-empty string"))
            continue
        if device_id in seen_ids:
            errors.append(FieldError(f"{path}.id", f"duplicate device id '{device_id}'"))
            continue
        seen_ids.add(device_id)

        class_key = raw.get("class")
        device_class = _CLASS_KEYS.get(class_key)
        if device_class is None:
            errors.append(FieldError(
                f"{path}.class",
                f"unknown device class {class_key!r} (expected {'|'.join(_CLASS_KEYS)})"))
            continue

        modality = None
        if "modality" in raw:
            modality = _MODALITY_KEYS.get(raw["modality"])
            if modality is None:
                errors.append(FieldError(
                    f"{path}.modality",
                    f"unknown modality {raw['modality']!r} (expected visual|auditory)"))
        if device_class == DeviceClass.OUTPUT and modality is None:
            errors.append(FieldError(f"{path}.modality", "output devices need a modality"))
        if device_class != DeviceClass.OUTPUT and "modality" in raw:
            errors.append(FieldError(f"{path}.modality", "only output devices carry a modality"))

        arm = _parse_cells(raw.get("arm"), LIMB_CATEGORIES, LimbKind.ARM,
                           f"{path}.arm", errors)
        leg = _parse_cells(raw.get("leg"), LIMB_CATEGORIES, LimbKind.LEG,
                           f"{path}.leg", errors)
        perception = _parse_cells(raw.get("perception"), PERCEPTION_CATEGORIES, None,
                                  f"{path}.perception", errors)
        if device_class == DeviceClass.OUTPUT and (arm or leg):
            errors.append(FieldError(path, "output devices cannot constrain limbs"))

        devices.append(DeviceSpec(
            id=device_id,
            name=raw.get("name", device_id),
            device_class=device_class,
            modality=modality,
            arm=arm,
            leg=leg,
            perception=perception,
        ))

    if errors:
        raise InvalidDocument(errors)
    return Catalog(version=version, devices=tuple(devices))


def load_catalog(text: str) -> Catalog:
    return catalog_from_dict(load_mapping(text, "catalog document"))


def device_to_dict(device: DeviceSpec) -> dict:
    entry: dict = {"id": device.id, "name": device.name,
                   "class": device.device_class.value}
    if device.modality is not None:
        entry["modality"] = device.modality.value
    for field_name, cells in (("arm", device.arm), ("leg", device.leg),
                              ("perception", device.perception)):
        if cells:
            entry[field_name] = {cat.value: v for cat, v in cells.items()}
    return entry


def catalog_to_dict(catalog: Catalog, with_scales: bool = False) -> dict:
    doc: dict = {
        "version": catalog.version,
        "devices": [device_to_dict(d) for d in catalog.devices],
    }
    if with_scales:
        # Everything a UI needs to build degree dropdowns without hardcoding.
        doc["limbs"] = [limb.key for limb in LIMBS]
        doc["scales"] = [scale_to_dict(s) for s in catalog.scales]
    return doc


def serialize_catalog(catalog: Catalog) -> str:
    return yaml.safe_dump(catalog_to_dict(catalog), sort_keys=False)


def scale_to_dict(scale: DegreeScale) -> dict:
    entry: dict = {"category": scale.category.value}
    if scale.limb_kind is not None:
        entry["limb_kind"] = scale.limb_kind.value
    entry["levels"] = [{"value": lvl.value, "label": lvl.label} for lvl in scale.levels]
    return entry
