"""Command-line client.

Each subcommand builds the same request model the HTTP service accepts and,
by default, executes the handler in-process, so batch verification never
needs a running server; `--server URL` switches to posting the request to a
remote service instead. Everything is deterministic: no seeds, and worker
counts never change any emitted byte.

Exit codes: 0 success, 1 file/parse/usage errors, 2 domain rejections
(not outerplanar, not 2-connected, face too long).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .embedding import NotBiconnected, NotOuterplanar
from .graphs import DisconnectedGraph
from .service import handlers
from .service.schemas import (
    AnalyzeRequest,
    BoundRequest,
    EnumerateRequest,
    GenerateRequest,
    QnRequest,
    VerifyRequest,
    WitnessRequest,
)
from .textio import ParseError
from .witness import FaceTooLong

_ENDPOINTS = {
    "analyze": "/analyze",
    "generate": "/generate",
    "witness": "/witness",
    "bound": "/bound",
    "enumerate": "/enumerate",
    "verify": "/verify",
    "qn": "/qn",
}


def _default_workers() -> int:
    raw = os.environ.get("OUTERPLANAR_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _dispatch(server: str | None, command: str, request, handler):
    """Run in-process, or POST the same request to a remote service."""
    if server is None:
        return handler(request).model_dump(by_alias=True)
    import httpx

    resp = httpx.post(server.rstrip("/") + _ENDPOINTS[command], json=request.model_dump(), timeout=None)
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text) if resp.headers.get("content-type", "").startswith("application/json") else resp.text
        raise RuntimeError(f"server returned {resp.status_code}: {detail}")
    return resp.json()


def _emit_json(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(1) from None


def _cmd_analyze(args) -> int:
    req = AnalyzeRequest(
        edges_text=_read_text(args.path),
        embedding_text=_read_text(args.embedding) if args.embedding else None,
        input_name=args.path,
    )
    payload = _dispatch(args.server, "analyze", req, handlers.handle_analyze)
    _emit_json(payload)
    return 0 if payload["status"] == "ok" else 2


def _cmd_generate(args) -> int:
    req = GenerateRequest(family=args.family, n=args.n, q=args.q, nearest=args.nearest)
    payload = _dispatch(args.server, "generate", req, handlers.handle_generate)
    if args.emit == "json":
        _emit_json(payload)
    elif args.emit == "edges":
        if payload.get("note"):
            print(f"# {payload['note']}")
        sys.stdout.write(payload["edges_text"])
    else:
        if payload["embedding_text"] is None:
            print(f"error: family {args.family} has no outerplane embedding", file=sys.stderr)
            return 2
        sys.stdout.write(payload["embedding_text"])
    return 0


def _cmd_witness(args) -> int:
    req = WitnessRequest(edges_text=_read_text(args.path), kind=args.kind)
    payload = _dispatch(args.server, "witness", req, handlers.handle_witness)
    _emit_json(payload)
    return 0


def _cmd_bound(args) -> int:
    req = BoundRequest(which=args.which, n=args.n, q=args.q)
    payload = _dispatch(args.server, "bound", req, handlers.handle_bound)
    if args.format == "json":
        _emit_json(payload)
    elif payload["interval"] is not None:
        lo, hi = payload["interval"]
        print(f"[{lo}, {hi}]")
    else:
        print(f"{payload['value']} = {payload['value_decimal']}")
    return 0


def _cmd_enumerate(args) -> int:
    req = EnumerateRequest(
        n=args.n,
        max_face=args.max_face,
        mops=args.mops,
        canonical=args.canonical,
        out=args.out,
        graph_limit=args.graph_limit,
    )
    payload = _dispatch(args.server, "enumerate", req, handlers.handle_enumerate)
    if args.out == "graphs":
        for chords in payload["graphs"]:
            sys.stdout.write(json.dumps(chords, separators=(",", ":")))
            sys.stdout.write("\n")
    else:
        payload.pop("graphs", None)
        _emit_json(payload)
    return 0


def _cmd_verify(args) -> int:
    req = VerifyRequest(
        n=args.n,
        max_face=args.max_face,
        mode=args.mode,
        radius_cap=args.radius_cap,
        workers=args.workers,
    )
    payload = _dispatch(args.server, "verify", req, handlers.handle_verify)
    _emit_json(payload)
    if args.csv:
        _write_extremal_csv(args.csv, payload)
    return 0 if payload["all_ok"] else 2


def _write_extremal_csv(path: str, payload: dict) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "record", "chords", "value", "max_face", "bound", "gap"])
        pi = payload.get("extremal_pi")
        if pi:
            writer.writerow(
                [payload["n"], "max_proximity", json.dumps(pi["chords"]), pi["proximity"], pi["max_face"], pi["bound"], pi["gap"]]
            )
        rad = payload.get("extremal_rad")
        if rad:
            writer.writerow([payload["n"], "max_radius", json.dumps(rad["chords"]), rad["radius"], "", "", ""])
        wit = payload.get("qn_failing_witness")
        if wit:
            writer.writerow(
                [payload["n"], "qn_failing_witness", json.dumps(wit["chords"]), wit["radius"], wit["max_face"], "", ""]
            )


def _cmd_qn(args) -> int:
    req = QnRequest(n=args.n, workers=args.workers)
    payload = _dispatch(args.server, "qn", req, handlers.handle_qn)
    _emit_json(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outerplanar",
        description="Exact proximity/radius invariants and bound verification for 2-connected outerplanar graphs.",
    )
    parser.add_argument("--server", default=None, help="base URL of a running service; default is in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="metrics, embedding and bound checks for an edge-list file")
    p.add_argument("path", help="edge-list file: `n m` header then `u v` lines")
    p.add_argument("--embedding", default=None, help="verify and use this embedding file instead of recognising")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("generate", help="emit a named family member")
    p.add_argument("--family", required=True, choices=["path", "cycle", "hnq", "hn3", "fan", "ladder"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None, help="face length (hnq only)")
    p.add_argument("--nearest", action="store_true", help="hnq: round n down to the nearest valid order")
    p.add_argument("--emit", choices=["edges", "embedding", "json"], default="edges")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("witness", help="emit a proximity or radius witness certificate")
    p.add_argument("path", help="edge-list file")
    p.add_argument("--kind", required=True, choices=["proximity", "radius"])
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("bound", help="evaluate a closed-form bound exactly")
    p.add_argument("--which", required=True, choices=["prox2c", "proxmop", "rho", "rad", "chordal"])
    p.add_argument("--n", type=int, required=True, help="order (diameter for --which chordal)")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("enumerate", help="stream polygon dissections or count them")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-face", type=int, default=None, dest="max_face")
    p.add_argument("--mops", action="store_true", help="triangulations only")
    p.add_argument("--canonical", action="store_true", help="one representative per dihedral orbit")
    p.add_argument("--out", choices=["counts", "graphs"], default="counts")
    p.add_argument("--graph-limit", type=int, default=100_000, dest="graph_limit")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run every theorem check over all dissections of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-face", type=int, default=None, dest="max_face")
    p.add_argument("--mode", choices=["full", "radius"], default="full")
    p.add_argument("--radius-cap", type=int, default=14, dest="radius_cap",
                   help="skip radius-witness checks above this order")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--csv", default=None, help="also write extremal records to this CSV file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("qn", help="largest face cap under which the radius bound holds at order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=_cmd_qn)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotBiconnected, NotOuterplanar, FaceTooLong, DisconnectedGraph) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
