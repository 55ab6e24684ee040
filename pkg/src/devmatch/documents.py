"""Shared helpers for the YAML/JSON document formats used across the package."""

from typing import NamedTuple

import yaml


class MalformedDocument(ValueError):
    """Text that cannot be parsed into a mapping at all."""


class FieldError(NamedTuple):
    path: str
    message: str


class InvalidDocument(ValueError):
    """A parsed document with invalid content; carries per-field errors."""

    def __init__(self, errors):
        self.errors = [FieldError(*e) for e in errors]
        detail = "; ".join(f"{e.path}: {e.message}" for e in self.errors)
        super().__init__(detail or "invalid document")


def load_mapping(text: str, what: str = "document") -> dict:
    """Parse YAML (hence also JSON) text into a dict; empty text is an empty dict."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise MalformedDocument(f"{what} is not valid YAML/JSON: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise MalformedDocument(f"{what} must be a mapping, got {type(data).__name__}")
    return data


def require_int(value, path: str, errors: list) -> int | None:
    """Append a FieldError unless value is a plain integer; return it if so."""
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append(FieldError(path, f"expected an integer degree, got {value!r}"))
        return None
    return value
