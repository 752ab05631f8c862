"""Command-line front end: a thin client of the evaluation service.

By default the client speaks HTTP to the in-process ASGI app, so no server
needs to be running; ``--url`` points it at a live instance instead, and
``serve`` starts one.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


def _client(url):
    if url:
        return httpx.Client(base_url=url)
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _load_point(path):
    try:
        with open(path) as fh:
            spec = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read point file {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    if not isinstance(spec, dict) or "n" not in spec or "y" not in spec:
        print(f"error: point file {path} must be an object with 'n' and 'y'", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    return spec


def _post(client, route, payload):
    resp = client.post(route, json=payload)
    if resp.status_code == 422:
        print(f"error: invalid request: {resp.text}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    if resp.status_code == 400:
        detail = resp.json()
        print(f"error: {detail.get('code', 'error')}: {detail.get('message', '')}", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)
    resp.raise_for_status()
    return resp.json()


def _emit(obj):
    print(json.dumps(obj, separators=(", ", ": ")))


def cmd_eval(args):
    point = _load_point(args.point)
    payload = {"point": point, "s": args.s, "method": args.method}
    if args.radius is not None:
        payload["radius"] = args.radius
    if args.tail is not None:
        payload["tail"] = args.tail
    if args.qtol is not None:
        payload["qtol"] = args.qtol
    with _client(args.url) as client:
        _emit(_post(client, "/eval", payload))
    return EXIT_OK


def cmd_laurent(args):
    point = _load_point(args.point)
    with _client(args.url) as client:
        _emit(_post(client, "/laurent", {"point": point, "series": args.series}))
    return EXIT_OK


def cmd_verify(args):
    with _client(args.url) as client:
        report = _post(client, "/verify", {"suite": args.suite, "seed": args.seed})
    for case in report["cases"]:
        _emit(case)
    _emit(
        {
            "suite": report["suite"],
            "seed": report["seed"],
            "passed": report["passed"],
            "max_error": report["max_error"],
        }
    )
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="kronlim")
    parser.add_argument("--url", default=None, help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the completed series at a point")
    p_eval.add_argument("--point", required=True, help="path to a tau-point JSON file")
    p_eval.add_argument("--s", type=float, required=True)
    p_eval.add_argument("--method", choices=("direct", "fast", "primitive"), default="fast")
    p_eval.add_argument("--radius", type=int, default=None)
    p_eval.add_argument("--tail", type=float, default=None)
    p_eval.add_argument("--qtol", type=float, default=None)
    p_eval.set_defaults(fn=cmd_eval)

    p_lau = sub.add_parser("laurent", help="pole coefficient and constant term at s=1")
    p_lau.add_argument("--point", required=True)
    p_lau.add_argument("--series", choices=("estar", "eprime"), required=True)
    p_lau.set_defaults(fn=cmd_laurent)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", required=True)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(fn=cmd_verify)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
