"""Command-line interface.

Exit codes are a stable contract: 0 success (or feasible plan), 1 infeasible
plan (error-severity findings), 2 invalid input (missing file, malformed or
out-of-range document, unknown device id). Reports go to stdout, diagnostics
to stderr.
"""

import argparse
import os
import sys

from .catalog import (
    Catalog,
    DeviceClass,
    UnknownDevice,
    default_catalog,
    load_catalog,
    serialize_catalog,
)
from .documents import InvalidDocument, MalformedDocument
from .matcher import match_profile
from .process import has_errors, parse_plan, validate_workstation
from .profiles import LIMB_CATEGORIES, PERCEPTION_CATEGORIES, LimbKind, parse_profile
from .report import render_findings_text, render_structured, render_text

CATALOG_ENV_VAR = "DEVMATCH_CATALOG"

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2


class InputError(Exception):
    pass


def _read(path: str, what: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {what} {path!r}: {exc}") from exc


def _resolve_catalog(path) -> Catalog:
    path = path or os.environ.get(CATALOG_ENV_VAR)
    if not path:
        return default_catalog()
    return load_catalog(_read(path, "catalog"))


def _load_profile(path: str):
    return parse_profile(_read(path, "profile"))


def cmd_match(args) -> int:
    catalog = _resolve_catalog(args.catalog)
    profile = _load_profile(args.profile)
    findings = []
    if args.plan:
        plan = parse_plan(_read(args.plan, "plan"))
        findings = validate_workstation(plan, catalog, profile)
    report = match_profile(profile, catalog)
    if args.format == "structured":
        print(render_structured(report, findings))
    else:
        print(render_text(report, findings), end="")
    return EXIT_OK


def cmd_validate(args) -> int:
    catalog = _resolve_catalog(args.catalog)
    profile = _load_profile(args.profile)
    plan = parse_plan(_read(args.plan, "plan"))
    findings = validate_workstation(plan, catalog, profile)
    if findings:
        print(render_findings_text(findings))
    else:
        print("plan is feasible: no findings")
    return EXIT_INFEASIBLE if has_errors(findings) else EXIT_OK


def _format_cells(cells, categories) -> str:
    parts = []
    for cat in categories:
        value = cells.get(cat)
        parts.append(f"{cat.value}={'-' if value is None else value}")
    return "  ".join(parts)


def cmd_catalog(args) -> int:
    catalog = _resolve_catalog(args.catalog)
    if args.catalog_command == "list":
        for device in catalog.list_devices():
            print(f"{device.id:<18} {device.device_class.value:<16} {device.name}")
    elif args.catalog_command == "show":
        device = catalog.device(args.id)
        print(f"id:       {device.id}")
        print(f"name:     {device.name}")
        print(f"class:    {device.device_class.value}")
        if device.modality is not None:
            print(f"modality: {device.modality.value}")
        print(f"arm:        {_format_cells(device.arm, LIMB_CATEGORIES)}")
        print(f"leg:        {_format_cells(device.leg, LIMB_CATEGORIES)}")
        print(f"perception: {_format_cells(device.perception, PERCEPTION_CATEGORIES)}")
    else:
        print(serialize_catalog(catalog), end="")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(catalog=_resolve_catalog(args.catalog), cors=args.cors,
                     ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="devmatch",
        description="Match workstation I/O devices against a person's "
                    "disability degrees and a work-process plan.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_catalog_flag(p):
        p.add_argument("--catalog", metavar="PATH",
                       help="catalog document ('-' for stdin; default: built-in "
                            f"catalog, or ${CATALOG_ENV_VAR} if set)")

    p_match = sub.add_parser("match", help="classify every catalog device for a profile")
    p_match.add_argument("--profile", required=True, metavar="PATH")
    add_catalog_flag(p_match)
    p_match.add_argument("--format", choices=("text", "structured"), default="text")
    p_match.add_argument("--plan", metavar="PATH",
                         help="also run feasibility checks for this plan")
    p_match.set_defaults(func=cmd_match)

    p_validate = sub.add_parser("validate", help="check a workstation plan")
    p_validate.add_argument("--plan", required=True, metavar="PATH")
    p_validate.add_argument("--profile", required=True, metavar="PATH")
    add_catalog_flag(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_catalog = sub.add_parser("catalog", help="inspect or export the catalog")
    add_catalog_flag(p_catalog)
    catalog_sub = p_catalog.add_subparsers(dest="catalog_command", required=True)
    catalog_sub.add_parser("list", help="one line per device")
    p_show = catalog_sub.add_parser("show", help="full requirement cells of one device")
    p_show.add_argument("id")
    catalog_sub.add_parser("export", help="print the active catalog document")
    p_catalog.set_defaults(func=cmd_catalog)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    add_catalog_flag(p_serve)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--cors", action="store_true",
                         help="allow cross-origin requests (local UI development)")
    p_serve.add_argument("--ui", metavar="DIR",
                         help="also serve a static web UI from this directory")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, MalformedDocument, UnknownDevice) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InvalidDocument as exc:
        for error in exc.errors:
            print(f"error: {error.path}: {error.message}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
