"""Command-line front end: a thin client over the service layer.

Every subcommand builds the same request model the HTTP API takes and either
dispatches it in-process (default) or POSTs it to a running service
(--server URL). Output is JSON by default, or a text rendering with
--format text; both are byte-deterministic for a fixed request.

Exit codes: 0 success, 1 verification failure, 2 usage or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from .errors import WreathmarksError

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _post_remote(server: str, path: str, payload: dict) -> dict:
    url = server.rstrip("/") + path
    data = json.dumps(payload).encode()
    req = urllib.request.Request(url, data=data,
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req) as resp:
            return json.loads(resp.read().decode())
    except urllib.error.HTTPError as exc:
        body = exc.read().decode(errors="replace")
        try:
            detail = json.loads(body).get("detail", body)
        except json.JSONDecodeError:
            detail = body
        raise WreathmarksError(f"server error {exc.code}: {detail}") from None
    except urllib.error.URLError as exc:
        raise WreathmarksError(f"cannot reach server {server}: {exc.reason}") from None


def _dispatch(args, path: str, model_cls, handler, payload: dict) -> dict:
    if args.server:
        return _post_remote(args.server, path, payload)
    req = model_cls.model_validate(payload)
    out = handler(req)
    return out.model_dump(by_alias=True)


def _caps_payload(args) -> dict:
    return {"cap_elements": args.cap_elements, "cap_subgroups": args.cap_subgroups}


def _read_json_arg(text: str) -> dict:
    if text == "-":
        text = sys.stdin.read()
    return json.loads(text)


# ---------------------------------------------------------------------------
# text renderings (from response JSON only, so they work against --server too)


def partition_text(pjson: dict) -> str:
    parts = pjson.get("parts", [])
    if not parts:
        return "()"
    bits = []
    for p in parts:
        head = f"{p['mult']}·" if p["mult"] > 1 else ""
        bits.append(f"{head}([{p['class']}],{p['size']})")
    return "+".join(bits)


def render_marks(out: dict) -> str:
    names = out["classes"]
    width = max(len(n) for n in names) + 2
    lines = [" " * width + " ".join(f"{n:>6}" for n in names)]
    for name, row in zip(names, out["matrix"]):
        lines.append(f"[G/{name}]".ljust(width) + " ".join(f"{v:>6}" for v in row))
    return "\n".join(lines)


def render_parts(out: dict) -> str:
    lines = [f"{out['count']} partitions of {out['n']} over {out['group']}"]
    lines += [partition_text(p) for p in out["partitions"]]
    return "\n".join(lines)


def render_aa(out: dict) -> str:
    if not out["coords"]:
        return "0"
    return " + ".join(f"{e['coeff']}·{{{partition_text(e['partition'])}}}"
                      for e in out["coords"])


def render_parks(out: dict) -> str:
    if not out["values"]:
        return "0"
    return "\n".join(f"{e['value']} at {partition_text(e['partition'])}"
                     for e in out["values"])


def render_induced(out: dict) -> str:
    head = f"{out['kind']}: A({out['from_group']}) -> A({out['to_group']}), degree {out['n']}"
    lines = [head]
    for e in out["entries"]:
        if "partition" in e:  # norm form: class -> partition
            lines.append(f"[{e['class']}] -> {partition_text(e['partition'])}")
        else:
            lines.append(f"{partition_text(e['target'])} <- "
                         f"{partition_text(e['source'])}: {e['value']}")
    return "\n".join(lines)


def render_verify(out: dict) -> str:
    lines = [f"suite {out['suite']} on {out['group']} (n={out['n']})"]
    for case in out["cases"]:
        status = case["status"].upper()
        detail = f" — {case['detail']}" if case["detail"] else ""
        lines.append(f"{status:<5} {case['name']}{detail}")
    c = out["counts"]
    lines.append(f"{'PASS' if out['ok'] else 'FAIL'}: "
                 f"{c['pass']} passed, {c['fail']} failed, {c['skip']} skipped, {c['info']} info")
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathmarks",
        description="Exact Burnside-ring computations for wreath products")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default is in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--cap-elements", type=int, default=10_000, dest="cap_elements")
        p.add_argument("--cap-subgroups", type=int, default=400, dest="cap_subgroups")

    p = sub.add_parser("marks", help="table of marks of a group")
    p.add_argument("--group", required=True)
    common(p)

    p = sub.add_parser("parts", help="decorated partitions of n over Conj(G)")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("power", help="total power operation P_n of a virtual G-set")
    p.add_argument("--group", default=None)
    p.add_argument("--element", required=True,
                   help='Burnside element JSON ({"group":..,"coords":[..]}; "-" for stdin)')
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("parks-char", help="parks character of a subring element")
    p.add_argument("--group", default=None)
    p.add_argument("--element", required=True, help='AA element JSON ("-" for stdin)')
    common(p)

    p = sub.add_parser("star", help="transfer product of two subring elements")
    p.add_argument("--group", default=None)
    p.add_argument("--x", required=True, help="AA element JSON")
    p.add_argument("--y", required=True, help="AA element JSON")
    common(p)

    p = sub.add_parser("induced-map", help="induced map on parks, as a matrix")
    p.add_argument("--kind", choices=("restriction", "transfer", "fw", "norm"), required=True)
    p.add_argument("--from", dest="from_spec", default=None)
    p.add_argument("--to", dest="to_spec", required=True)
    p.add_argument("--n", type=int, default=1)
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--group", default="C2")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--no-oracle", action="store_true",
                   help="skip the explicit-set oracle comparisons")
    common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn
        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    from .service import schemas
    from .service.app import (handle_induced_map, handle_marks, handle_parks_char,
                              handle_parts, handle_power, handle_star, handle_verify)

    try:
        if args.command == "marks":
            payload = {"group": args.group, **_caps_payload(args)}
            out = _dispatch(args, "/marks", schemas.MarksRequest, handle_marks, payload)
            render = render_marks
        elif args.command == "parts":
            payload = {"group": args.group, "n": args.n, **_caps_payload(args)}
            out = _dispatch(args, "/parts", schemas.PartsRequest, handle_parts, payload)
            render = render_parts
        elif args.command == "power":
            element = _read_json_arg(args.element)
            payload = {"group": args.group, "element": element, "n": args.n,
                       **_caps_payload(args)}
            out = _dispatch(args, "/power", schemas.PowerRequest, handle_power, payload)
            render = render_aa
        elif args.command == "parks-char":
            payload = {"group": args.group, "element": _read_json_arg(args.element),
                       **_caps_payload(args)}
            out = _dispatch(args, "/parks-char", schemas.ParksCharRequest,
                            handle_parks_char, payload)
            render = render_parks
        elif args.command == "star":
            payload = {"group": args.group, "x": _read_json_arg(args.x),
                       "y": _read_json_arg(args.y), **_caps_payload(args)}
            out = _dispatch(args, "/star", schemas.StarRequest, handle_star, payload)
            render = render_aa
        elif args.command == "induced-map":
            payload = {"kind": args.kind, "from": args.from_spec, "to": args.to_spec,
                       "n": args.n, **_caps_payload(args)}
            out = _dispatch(args, "/induced-map", schemas.InducedMapRequest,
                            handle_induced_map, payload)
            render = render_induced
        elif args.command == "verify":
            payload = {"suite": args.suite, "group": args.group, "n": args.n,
                       "oracle": not args.no_oracle, **_caps_payload(args)}
            out = _dispatch(args, "/verify", schemas.VerifyRequest, handle_verify, payload)
            render = render_verify
        else:  # pragma: no cover
            raise WreathmarksError(f"unknown command {args.command}")
    except (WreathmarksError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    print(json.dumps(out, indent=2) if args.format == "json" else render(out))
    if args.command == "verify" and not out.get("ok", False):
        return VERIFY_FAILURE
    return 0


if __name__ == "__main__":
    sys.exit(main())
