"""Line-oriented session protocol for remote front ends.

The client sends scenario grammar commands, one per line. Every command
that can change state is answered with a ``scene`` block (the current
dump), plus a ``covers`` block while cover reporting is on. ``sense``
answers with a single ``cursor HINT`` line. Errors never kill the
session; they come back as ``err LINE MESSAGE``.

Blocks are framed by a header line carrying the line count and a closing
``end`` line, so clients never need to guess where a block stops.
"""
from __future__ import annotations

import socket
import socketserver
import sys

from .cover import CircleShape, PolygonShape, StripShape
from .errors import ScenarioError
from .harness import ScenarioRunner, fmt


class SessionQuit(Exception):
    pass


class Session:
    def __init__(self):
        self.runner = ScenarioRunner()
        self.covers_on = False
        self.line_no = 0

    # -- block builders -----------------------------------------------------

    def scene_block(self) -> list[str]:
        lines = self.runner.dump().splitlines()
        return [f"scene {len(lines)}", *lines, "end"]

    def covers_block(self) -> list[str]:
        lines = []
        for obj in self.runner.mover.queue:
            for node in obj.cover().nodes:
                shape = node.shape
                if isinstance(shape, CircleShape):
                    geo = f"circle {fmt(shape.center.x)} {fmt(shape.center.y)} {fmt(shape.radius)}"
                elif isinstance(shape, StripShape):
                    geo = (f"strip {fmt(shape.a.x)} {fmt(shape.a.y)} "
                           f"{fmt(shape.b.x)} {fmt(shape.b.y)} {fmt(shape.radius)}")
                else:
                    pts = " ".join(f"{fmt(p.x)} {fmt(p.y)}" for p in shape.apexes)
                    geo = f"poly {len(shape.apexes)} {pts}"
                lines.append(f"{obj.name or '?'} {node.id} {node.freedom.value} "
                             f"{node.cursor.value} {geo}")
        return [f"covers {len(lines)}", *lines, "end"]

    # -- one request --------------------------------------------------------

    def handle(self, raw: str) -> list[str]:
        self.line_no += 1
        line = raw.strip()
        if not line or line.startswith("#"):
            return []
        if line == "quit":
            raise SessionQuit
        if line == "covers on":
            self.covers_on = True
            return self.covers_block()
        if line == "covers off":
            self.covers_on = False
            return []
        tokens = line.split()
        try:
            if tokens[0] == "sense":
                self.runner.execute(self.line_no, tokens)
                return [f"cursor {self.runner.last_cursor}"]
            if tokens == ["dump"]:
                return self.scene_block()
            self.runner.execute(self.line_no, tokens)
        except ScenarioError as exc:
            return [f"err {exc.line} {exc.message}"]
        out = self.scene_block()
        if self.covers_on:
            out += self.covers_block()
        return out


def serve_stdio() -> int:
    """One session over stdin/stdout; ends at EOF or ``quit``."""
    session = Session()
    for raw in sys.stdin:
        try:
            replies = session.handle(raw)
        except SessionQuit:
            break
        for reply in replies:
            sys.stdout.write(reply + "\n")
        sys.stdout.flush()
    return 0


class _Handler(socketserver.StreamRequestHandler):
    def handle(self):
        session = Session()
        for raw_bytes in self.rfile:
            try:
                replies = session.handle(raw_bytes.decode("utf-8", "replace"))
            except SessionQuit:
                break
            payload = "".join(reply + "\n" for reply in replies)
            if payload:
                try:
                    self.wfile.write(payload.encode("utf-8"))
                    self.wfile.flush()
                except (BrokenPipeError, ConnectionResetError):
                    break


class _Server(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True


def serve_tcp(port: int) -> int:
    """Listen on localhost; one independent session per connection.

    Prints ``listening PORT`` once the socket is bound so callers that
    asked for port 0 can learn the real port.
    """
    with _Server(("127.0.0.1", port), _Handler) as server:
        print(f"listening {server.server_address[1]}", flush=True)
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
    return 0


def serve_web(port: int, static_dir: str | None = None) -> int:
    """Same line protocol carried over a WebSocket at /ws (one session per
    socket), with optional static file hosting for a browser client."""
    try:
        import uvicorn
        from fastapi import FastAPI, WebSocket, WebSocketDisconnect
        from fastapi.staticfiles import StaticFiles
    except ImportError as exc:  # pragma: no cover - depends on extras
        print(f"the web transport needs the [web] extra: {exc}", file=sys.stderr)
        return 1

    app = FastAPI()

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket):  # pragma: no cover - exercised manually
        await ws.accept()
        session = Session()
        try:
            while True:
                raw = await ws.receive_text()
                for line in raw.splitlines():
                    try:
                        replies = session.handle(line)
                    except SessionQuit:
                        await ws.close()
                        return
                    if replies:
                        await ws.send_text("\n".join(replies))
        except WebSocketDisconnect:
            return

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
    return 0
