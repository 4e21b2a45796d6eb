"""Read-only local query service backing the what-if UI.

The dataset is loaded once, immutable, and shared across request threads;
each request computes independently, so any interleaving of concurrent
requests yields the same responses as serial execution. Nothing the service
does can mutate the dataset: what-ifs are per-request and ephemeral.

Endpoints (all JSON, application/json; charset=utf-8):
  GET  /api/v1/dataset                 full dataset document with provenance
  GET  /api/v1/score?profile=default   baseline ranking for a stored profile
  POST /api/v1/whatif                  body: {profile?, weights?, overrides?, category?}
  POST /api/v1/sweep                   body: {parameter, from, to, steps, profile?, category?}
  GET  /                               built UI assets, when available

Errors: 400 malformed body (field-level message), 404 unknown path or
profile, 422 override targets that fail validation.
"""

from __future__ import annotations

import json
import mimetypes
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import parse_qs, urlparse

from .dataset import Dataset
from .discrepancy import discrepancy_report
from .errors import UnknownOverrideTargetError
from .levels import parse_level
from .published import PublishedTables
from .scoring import CATEGORY_FILTERS
from .sensitivity import RatingOverride, WhatIfRequest, weight_sweep, what_if


class BadRequest(Exception):
    """400: the request body or query is malformed."""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(message)


def _parse_overrides(raw, field: str) -> tuple[RatingOverride, ...]:
    if not isinstance(raw, list):
        raise BadRequest("overrides must be a list", field)
    overrides = []
    for i, item in enumerate(raw):
        where = f"{field}[{i}]"
        if not isinstance(item, dict):
            raise BadRequest("override must be an object", where)
        unknown = set(item) - {"subject", "parameter", "sub_parameter", "level", "score", "raw"}
        if unknown:
            raise BadRequest(f"unknown fields {sorted(unknown)}", where)
        try:
            subject = item["subject"]
            parameter = item["parameter"]
        except KeyError as exc:
            raise BadRequest(f"missing field {exc}", where) from None
        level = item.get("level")
        try:
            overrides.append(
                RatingOverride(
                    subject=subject,
                    parameter=parameter,
                    sub_parameter=item.get("sub_parameter"),
                    level=parse_level(level) if level is not None else None,
                    score=item.get("score"),
                    raw=item.get("raw"),
                )
            )
        except ValueError as exc:
            raise BadRequest(str(exc), where) from None
    return tuple(overrides)


def _parse_whatif_body(data: dict) -> WhatIfRequest:
    if not isinstance(data, dict):
        raise BadRequest("body must be a JSON object")
    unknown = set(data) - {"profile", "weights", "overrides", "category"}
    if unknown:
        raise BadRequest(f"unknown fields {sorted(unknown)}")
    weights = data.get("weights", {})
    if not isinstance(weights, dict):
        raise BadRequest("weights must be an object of parameter -> weight", "weights")
    try:
        weights = {str(k): float(v) for k, v in weights.items()}
    except (TypeError, ValueError):
        raise BadRequest("weights must map parameter ids to numbers", "weights") from None
    category = data.get("category", "all")
    if category not in CATEGORY_FILTERS:
        raise BadRequest(
            f"category must be one of {list(CATEGORY_FILTERS)}, got {category!r}", "category"
        )
    return WhatIfRequest(
        profile=str(data.get("profile", "default")),
        weights=weights,
        overrides=_parse_overrides(data.get("overrides", []), "overrides"),
        category=category,
    )


def _score_payload(result) -> dict:
    return {
        "profile": result.profile.name,
        "category": result.category,
        "ranking": list(result.ranking),
        "scorecards": [card.to_json() for card in result.scorecards],
    }


class _Handler(BaseHTTPRequestHandler):
    server_version = "langscore"
    protocol_version = "HTTP/1.1"

    # -- plumbing ----------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default; tests rely on stdout
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _error(self, status: int, message: str, field: Optional[str] = None) -> None:
        payload = {"error": message}
        if field:
            payload["field"] = field
        self._send_json(status, payload)

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise BadRequest("empty body; expected a JSON object")
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise BadRequest(f"malformed JSON body: {exc}") from None

    # -- routes ------------------------------------------------------------

    def do_GET(self) -> None:
        url = urlparse(self.path)
        app: ServiceApp = self.server.app
        if url.path == "/api/v1/dataset":
            self._send_json(200, app.dataset.to_json())
            return
        if url.path == "/api/v1/score":
            params = parse_qs(url.query)
            profile = params.get("profile", ["default"])[0]
            try:
                result = what_if(app.dataset, WhatIfRequest(profile=profile))
            except KeyError:
                self._error(404, f"unknown profile {profile!r}")
                return
            self._send_json(200, _score_payload(result))
            return
        if url.path == "/api/v1/discrepancies":
            if app.published is None:
                self._error(404, "no published tables loaded")
                return
            self._send_json(200, discrepancy_report(app.dataset, app.published).to_json())
            return
        if url.path.startswith("/api/"):
            self._error(404, f"unknown path {url.path}")
            return
        self._serve_static(url.path)

    def do_POST(self) -> None:
        url = urlparse(self.path)
        app: ServiceApp = self.server.app
        try:
            if url.path == "/api/v1/whatif":
                request = _parse_whatif_body(self._read_body())
                try:
                    result = what_if(app.dataset, request)
                except KeyError:
                    self._error(404, f"unknown profile {request.profile!r}")
                    return
                except UnknownOverrideTargetError as exc:
                    self._error(422, str(exc))
                    return
                except ValueError as exc:
                    self._error(422, str(exc))
                    return
                self._send_json(200, _score_payload(result))
                return
            if url.path == "/api/v1/sweep":
                data = self._read_body()
                if not isinstance(data, dict):
                    raise BadRequest("body must be a JSON object")
                unknown = set(data) - {"parameter", "from", "to", "steps", "profile", "category"}
                if unknown:
                    raise BadRequest(f"unknown fields {sorted(unknown)}")
                for required in ("parameter", "from", "to", "steps"):
                    if required not in data:
                        raise BadRequest(f"missing field {required!r}", required)
                category = data.get("category", "all")
                if category not in CATEGORY_FILTERS:
                    raise BadRequest(f"unknown category {category!r}", "category")
                try:
                    profile = app.dataset.profile(str(data.get("profile", "default")))
                except KeyError:
                    self._error(404, f"unknown profile {data.get('profile')!r}")
                    return
                try:
                    result = weight_sweep(
                        app.dataset,
                        str(data["parameter"]),
                        float(data["from"]),
                        float(data["to"]),
                        int(data["steps"]),
                        profile=profile,
                        category=category,
                    )
                except UnknownOverrideTargetError as exc:
                    self._error(422, str(exc))
                    return
                except (TypeError, ValueError) as exc:
                    self._error(422, str(exc))
                    return
                self._send_json(200, result.to_json())
                return
            self._error(404, f"unknown path {url.path}")
        except BadRequest as exc:
            self._error(400, str(exc), exc.field)

    # -- static assets -----------------------------------------------------

    def _serve_static(self, path: str) -> None:
        app: ServiceApp = self.server.app
        if app.ui_dir is None:
            if path == "/":
                self._send_json(
                    200,
                    {
                        "service": "langscore",
                        "endpoints": [
                            "GET /api/v1/dataset",
                            "GET /api/v1/score?profile=default",
                            "GET /api/v1/discrepancies",
                            "POST /api/v1/whatif",
                            "POST /api/v1/sweep",
                        ],
                        "ui": "not built; pass --ui DIR to serve static assets",
                    },
                )
                return
            self._error(404, f"unknown path {path}")
            return
        relative = path.lstrip("/") or "index.html"
        target = (app.ui_dir / relative).resolve()
        if not str(target).startswith(str(app.ui_dir.resolve())) or not target.is_file():
            # single-page app fallback keeps client-side routes working
            target = app.ui_dir / "index.html"
            if not target.is_file():
                self._error(404, f"unknown path {path}")
                return
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


class ServiceApp:
    """Shared immutable state handed to request handlers."""

    def __init__(
        self,
        dataset: Dataset,
        published: Optional[PublishedTables] = None,
        ui_dir: Optional[str | Path] = None,
    ):
        self.dataset = dataset
        self.published = published
        self.ui_dir = Path(ui_dir) if ui_dir is not None else None


class LangscoreServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, app: ServiceApp):
        super().__init__(address, _Handler)
        self.app = app


def create_server(
    host: str,
    port: int,
    dataset: Dataset,
    published: Optional[PublishedTables] = None,
    ui_dir: Optional[str | Path] = None,
) -> LangscoreServer:
    """Bind a server without starting it (port 0 picks a free port)."""
    return LangscoreServer((host, port), ServiceApp(dataset, published, ui_dir))


def serve(
    host: str,
    port: int,
    dataset: Dataset,
    published: Optional[PublishedTables] = None,
    ui_dir: Optional[str | Path] = None,
) -> None:
    """Run the service until interrupted."""
    server = create_server(host, port, dataset, published, ui_dir)
    bound = server.server_address
    print(f"serving on http://{bound[0]}:{bound[1]}/ (dataset: {dataset.name})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def run_in_thread(server: LangscoreServer) -> threading.Thread:
    """Start a bound server on a daemon thread (used by tests and demos)."""
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return thread
