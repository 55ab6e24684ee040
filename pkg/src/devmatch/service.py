"""HTTP service exposing the matcher and plan validation.

Stateless: every request carries the full profile (and plan), the response
carries the catalog version it was computed against. Malformed request bodies
get 400; structurally valid bodies with bad field values get 422 with a list
of {path, message} entries.
"""

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .catalog import Catalog, UnknownDevice, catalog_to_dict, default_catalog
from .documents import InvalidDocument, MalformedDocument, load_mapping
from .matcher import match_profile
from .process import finding_to_dict, plan_from_dict, validate_workstation
from .profiles import profile_from_dict
from .report import report_to_dict


def _error_response(status: int, message: str, errors=None) -> JSONResponse:
    body = {"detail": message}
    if errors is not None:
        body["errors"] = [{"path": e.path, "message": e.message} for e in errors]
    return JSONResponse(body, status_code=status)


async def _read_document(request: Request) -> dict:
    text = (await request.body()).decode("utf-8", errors="replace")
    return load_mapping(text, "request body")


def _split_match_body(doc: dict):
    # Accept either a bare profile document or {"profile": ..., "plan": ...}.
    if "profile" in doc:
        profile_doc = doc["profile"]
        plan_doc = doc.get("plan")
        extra = set(doc) - {"profile", "plan"}
        if extra:
            raise MalformedDocument(
                f"unexpected top-level keys: {', '.join(sorted(extra))}")
        if not isinstance(profile_doc, dict):
            raise MalformedDocument("'profile' must be a mapping")
        if plan_doc is not None and not isinstance(plan_doc, dict):
            raise MalformedDocument("'plan' must be a mapping")
        return profile_doc, plan_doc
    return doc, None


def create_app(catalog: Catalog = None, cors: bool = False, ui_dir=None) -> FastAPI:
    catalog = catalog or default_catalog()
    app = FastAPI(title="devmatch", docs_url=None, redoc_url=None)

    if cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(CORSMiddleware, allow_origins=["*"],
                           allow_methods=["*"], allow_headers=["*"])

    @app.get("/api/catalog")
    def get_catalog() -> Response:
        return JSONResponse(catalog_to_dict(catalog, with_scales=True))

    @app.post("/api/match")
    async def post_match(request: Request) -> Response:
        try:
            doc = await _read_document(request)
            profile_doc, plan_doc = _split_match_body(doc)
            profile = profile_from_dict(profile_doc)
            findings = []
            if plan_doc is not None:
                plan = plan_from_dict(plan_doc)
                findings = validate_workstation(plan, catalog, profile)
        except MalformedDocument as exc:
            return _error_response(400, str(exc))
        except UnknownDevice as exc:
            return _error_response(400, str(exc))
        except InvalidDocument as exc:
            return _error_response(422, str(exc), exc.errors)
        report = match_profile(profile, catalog)
        return JSONResponse(report_to_dict(report, findings))

    @app.post("/api/validate")
    async def post_validate(request: Request) -> Response:
        try:
            doc = await _read_document(request)
            if not isinstance(doc.get("profile"), dict):
                raise MalformedDocument("'profile' must be a mapping")
            if not isinstance(doc.get("plan"), dict):
                raise MalformedDocument("'plan' must be a mapping")
            extra = set(doc) - {"profile", "plan"}
            if extra:
                raise MalformedDocument(
                    f"unexpected top-level keys: {', '.join(sorted(extra))}")
            profile = profile_from_dict(doc["profile"])
            plan = plan_from_dict(doc["plan"])
            findings = validate_workstation(plan, catalog, profile)
        except (MalformedDocument, UnknownDevice) as exc:
            return _error_response(400, str(exc))
        except InvalidDocument as exc:
            return _error_response(400, str(exc), exc.errors)
        return JSONResponse({
            "catalog_version": catalog.version,
            "feasible": not any(f.severity.value == "error" for f in findings),
            "findings": [finding_to_dict(f) for f in findings],
        })

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
