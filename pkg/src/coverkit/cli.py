"""``coverkit`` command line: run a scenario file or serve interactive sessions."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ScenarioError
from .harness import run_scenario


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="coverkit",
                                     description="moveable-object scene engine")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a scenario file and print its dumps")
    run_p.add_argument("script", help="scenario file")
    run_p.add_argument("--out", help="write dumps here instead of stdout")

    serve_p = sub.add_parser("serve", help="speak the session protocol")
    mode = serve_p.add_mutually_exclusive_group()
    mode.add_argument("--port", type=int, help="listen on a TCP port (0 picks a free one)")
    mode.add_argument("--stdio", action="store_true", help="use stdin/stdout")
    mode.add_argument("--web", type=int, metavar="PORT",
                      help="serve the protocol over a WebSocket at /ws")
    serve_p.add_argument("--static", help="static directory for --web")

    args = parser.parse_args(argv)

    if args.command == "run":
        try:
            text = Path(args.script).read_text()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        try:
            result = run_scenario(text)
        except ScenarioError as exc:
            print(f"error: line {exc.line}: {exc.message}", file=sys.stderr)
            return 1
        output = "\n".join(result.dumps)
        if args.out:
            Path(args.out).write_text(output)
        else:
            sys.stdout.write(output)
        return 0

    from . import server
    if args.web is not None:
        return server.serve_web(args.web, args.static)
    if args.stdio or args.port is None:
        return server.serve_stdio()
    return server.serve_tcp(args.port)


if __name__ == "__main__":
    sys.exit(main())
