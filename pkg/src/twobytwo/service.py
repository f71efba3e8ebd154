"""Read-only HTTP/JSON service over the prebuilt atlas.

Endpoints:

    GET  /api/games/{idOrName}
    GET  /api/games/{idOrName}/neighbors?moves=adjacent|all|...
    GET  /api/games/{idOrName}/classification
    POST /api/path            {"from": ..., "goal": ..., "moves": ..., "costs": ...}
    GET  /api/census?set=strict|complete
    GET  /api/chart.svg?which=strict|complete

Everything is derived from the immutable atlas, so identical queries always
return identical bytes.  404 for unknown games, 400 for malformed queries,
422 for unsatisfiable path goals.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, unquote, urlparse

from .atlas import build_atlas, symmetric_catalog
from .classify import census, census_records
from .cli import MOVE_SETS, UserError, resolve_game, resolve_move_set
from .naming import UnknownCode
from .records import dumps, game_record
from .topology import (
    CostModel,
    NoPath,
    goal_from_text,
    path_records,
    shortest_path,
)

DEFAULT_PORT = 8224


class ServiceState:
    """Atlas plus the derived artifacts the endpoints serve."""

    def __init__(self):
        self.atlas = build_atlas()
        self._self_check()
        self._census_cache: dict[str, str] = {}
        self._chart_cache: dict[str, str] = {}

    def _self_check(self) -> None:
        ok = (
            len(self.atlas) == 1413
            and len(self.atlas.strict_ids) == 144
            and len(symmetric_catalog().distinct) == 38
        )
        if not ok:
            raise AssertionError("atlas self-check failed (expected 1413/144/38)")

    def census_json(self, which: str) -> str:
        if which not in ("strict", "complete"):
            raise UserError(f"unknown set {which!r}")
        if which not in self._census_cache:
            games = (
                self.atlas.strict_games() if which == "strict" else self.atlas.games
            )
            self._census_cache[which] = dumps(
                {"set": which, "rows": census_records(census(games))}
            )
        return self._census_cache[which]

    def chart_svg(self, which: str) -> str:
        from .chart import layout_complete, layout_strict, render_svg

        if which not in ("strict", "complete"):
            raise UserError(f"unknown chart {which!r}")
        if which not in self._chart_cache:
            layout = (
                layout_strict(self.atlas) if which == "strict" else layout_complete(self.atlas)
            )
            self._chart_cache[which] = render_svg(layout)
        return self._chart_cache[which]


class _Handler(BaseHTTPRequestHandler):
    state: ServiceState

    # Silence per-request logging; the service is often run under tests.
    def log_message(self, fmt, *args):  # noqa: A002
        pass

    def _send(self, status: int, body: str, content_type="application/json"):
        payload = body.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def _error(self, status: int, message: str):
        self._send(status, dumps({"error": message}))

    def do_GET(self):  # noqa: N802
        try:
            self._route_get()
        except UserError as e:
            self._error(404 if "unknown game" in str(e) else 400, str(e))
        except (UnknownCode, KeyError) as e:
            self._error(404, str(e))
        except Exception as e:  # pragma: no cover - defensive
            self._error(500, f"internal error: {e}")

    def _route_get(self):
        url = urlparse(self.path)
        query = {k: v[0] for k, v in parse_qs(url.query).items()}
        parts = [unquote(p) for p in url.path.split("/") if p]
        if parts[:2] == ["api", "games"] and len(parts) in (3, 4):
            g = resolve_game(self.state.atlas, parts[2])
            if len(parts) == 3:
                self._send(200, dumps(game_record(self.state.atlas, g)))
                return
            if parts[3] == "neighbors":
                move_set = resolve_move_set(query.get("moves", "adjacent"))
                record = game_record(self.state.atlas, g, move_set)
                self._send(200, dumps(record["neighbors"]))
                return
            if parts[3] == "classification":
                record = game_record(self.state.atlas, g)
                self._send(200, dumps(record["classification"]))
                return
            self._error(400, f"unknown resource {parts[3]!r}")
            return
        if parts == ["api", "census"]:
            self._send(200, self.state.census_json(query.get("set", "strict")))
            return
        if parts == ["api", "chart.svg"]:
            svg = self.state.chart_svg(query.get("which", "strict"))
            self._send(200, svg, content_type="image/svg+xml")
            return
        self._error(400, f"unknown endpoint {url.path!r}")

    def do_POST(self):  # noqa: N802
        url = urlparse(self.path)
        if url.path != "/api/path":
            self._error(400, f"unknown endpoint {url.path!r}")
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
            start = resolve_game(self.state.atlas, str(body["from"]))
            goal = goal_from_text(str(body["goal"]))
            move_set = resolve_move_set(str(body.get("moves", "adjacent")))
            costs = (
                CostModel.graded()
                if body.get("costs") == "graded"
                else CostModel.uniform()
            )
        except UserError as e:
            self._error(404 if "unknown game" in str(e) else 400, str(e))
            return
        except (KeyError, ValueError, UnknownCode, json.JSONDecodeError) as e:
            self._error(400, f"malformed path request: {e}")
            return
        try:
            path = shortest_path(start, goal, move_set, costs)
        except NoPath as e:
            self._error(422, f"{e} (explored {e.explored} games)")
            return
        self._send(200, dumps(path_records(path)))


def make_server(port: int = 0) -> ThreadingHTTPServer:
    """Build (but do not run) the HTTP server; port 0 picks a free port."""
    state = ServiceState()
    handler = type("Handler", (_Handler,), {"state": state})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int = DEFAULT_PORT, announce=None) -> None:
    server = make_server(port)
    if announce is not None:
        host, actual_port = server.server_address
        announce.write(f"serving on http://{host}:{actual_port}\n")
        announce.flush()
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
