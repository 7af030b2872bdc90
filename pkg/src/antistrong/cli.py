"""Command-line client.

By default commands run in-process through the same dispatch the HTTP
service uses; --url sends them to a running service instead.  Exit
codes: 0 = holds / artifact produced, 1 = certified negative, 2 =
usage or input error, 3 = declared open problem.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

from .errors import AntistrongError
from .schemas import CommandResponse
from .service import OPEN_TOPICS, run_command

EXIT_BY_STATUS = {"ok": 0, "negative": 1, "open": 3}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise AntistrongError(f"cannot read {path}: {exc}") from exc


def _call(args, command: str, body: dict[str, Any]) -> CommandResponse:
    if args.url:
        import httpx

        resp = httpx.post(
            args.url.rstrip("/") + "/v1/" + command, json=body, timeout=300.0
        )
        if resp.status_code in (400, 422):
            detail = resp.json().get("detail", resp.text)
            raise AntistrongError(str(detail))
        resp.raise_for_status()
        return CommandResponse.model_validate(resp.json())
    return run_command(command, body)


def _emit(args, resp: CommandResponse) -> int:
    if getattr(args, "json", False):
        print(json.dumps(resp.model_dump(), indent=2))
        return EXIT_BY_STATUS[resp.status]
    print(resp.message)
    if resp.certificate is not None:
        blob = json.dumps(resp.certificate.model_dump(), indent=2) + "\n"
        out = getattr(args, "out", None)
        if out:
            Path(out).write_text(blob)
            print(f"certificate written to {out}")
        else:
            sys.stdout.write(blob)
    return EXIT_BY_STATUS[resp.status]


def _emit_gen(args, resp: CommandResponse) -> int:
    if getattr(args, "json", False):
        print(json.dumps(resp.model_dump(), indent=2))
        return EXIT_BY_STATUS[resp.status]
    text = resp.data["instance"]
    lines = [f"# {resp.message}"]
    if "s" in resp.data:
        lines.append(f"# terminals: s={resp.data['s']} t={resp.data['t']}")
    banner = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(banner, end="")
        print(f"instance written to {args.out}")
    else:
        sys.stdout.write(banner + text)
    return 0


def _cmd_verify_dir(args) -> int:
    root = Path(args.dir)
    certs = sorted(root.glob("*.cert.json"))
    if not certs:
        print(f"no *.cert.json files under {root}", file=sys.stderr)
        return 2
    failures = 0
    for cert_path in certs:
        stem = cert_path.name[: -len(".cert.json")]
        inst_path = root / f"{stem}.txt"
        if not inst_path.exists():
            print(f"{cert_path.name}: missing instance {inst_path.name}", file=sys.stderr)
            return 2
        body = {
            "instance": inst_path.read_text(),
            "certificate": json.loads(cert_path.read_text()),
        }
        resp = _call(args, "verify", body)
        status = "ok" if resp.status == "ok" else "FAIL"
        print(f"{stem}: {status}")
        if resp.status != "ok":
            failures += 1
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="antistrong",
        description="antistrong digraph toolkit: recognition, orientation,"
        " augmentation, packing, reductions",
    )
    top.add_argument("--url", help="send commands to a running service")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, *, inst=True, helptext=""):
        p = sub.add_parser(name, help=helptext)
        if inst:
            p.add_argument("instance", help="instance file path")
        p.add_argument("--out", help="write the certificate/instance here")
        p.add_argument("--json", action="store_true", help="print the full response")
        return p

    add("check", helptext="is the digraph antistrong?")
    p = add("trail", helptext="forward antidirected (x,y)-trail")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p = add("kcheck", helptext="is the digraph k-arc-antistrong?")
    p.add_argument("k", type=int)
    add("augment", helptext="fewest new arcs to antistrongness")
    p = add("augment-k", helptext="fewest new arcs to k disjoint antistrong spanning subdigraphs")
    p.add_argument("k", type=int)
    add("orient", helptext="antistrong orientation or partition certificate")
    add("decompose", helptext="forest + odd pseudoforest partition")
    add("decompose-appendix", helptext="same split via the exchange algorithm")
    add("detach", helptext="good 2-detachment or partition certificate")
    p = add("pack", helptext="k arc-disjoint antistrong spanning subdigraphs")
    p.add_argument("k", type=int)
    add("nonsep", helptext="antistrong spanning subdigraph with connected remainder")
    p = add("mixed-pack", helptext="k antistrong + ell connected-underlying classes")
    p.add_argument("k", type=int)
    p.add_argument("ell", type=int)
    p = add("anticonnect", helptext="anticonnected orientation (BFS layering)")
    p.add_argument("--root", type=int, default=0)

    p = sub.add_parser("gen", help="instance generators")
    p.add_argument(
        "kind", choices=["sat-reduction", "kstrong", "kkk-k4"]
    )
    p.add_argument("k", type=int, nargs="?", help="size parameter (kstrong, kkk-k4)")
    p.add_argument("--cnf", help="DIMACS CNF file (sat-reduction)")
    p.add_argument("--variables", type=int, default=3)
    p.add_argument("--clauses", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the instance here")
    p.add_argument("--json", action="store_true")

    p = add("solve-antipath", helptext="exact antidirected (x,y)-path search")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--budget", type=int, default=2_000_000)

    p = sub.add_parser("verify", help="re-verify certificates")
    p.add_argument("instance", nargs="?", help="instance file path")
    p.add_argument("--cert", help="certificate JSON file")
    p.add_argument("--dir", help="verify every *.cert.json + *.txt pair")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("open", help="reserved subcommands for open problems")
    p.add_argument("topic", choices=sorted(OPEN_TOPICS))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8023)
    return top


def _body_for(args) -> tuple[str, dict[str, Any]]:
    cmd = args.command
    if cmd in {"check", "augment", "orient", "decompose", "decompose-appendix",
               "detach", "nonsep"}:
        return cmd, {"instance": _read(args.instance)}
    if cmd == "trail":
        return cmd, {"instance": _read(args.instance), "x": args.x, "y": args.y}
    if cmd in {"kcheck", "augment-k", "pack"}:
        return cmd, {"instance": _read(args.instance), "k": args.k}
    if cmd == "mixed-pack":
        return cmd, {
            "instance": _read(args.instance), "k": args.k, "ell": args.ell,
        }
    if cmd == "anticonnect":
        return cmd, {"instance": _read(args.instance), "root": args.root}
    if cmd == "gen":
        body: dict[str, Any] = {"kind": args.kind, "seed": args.seed}
        if args.k is not None:
            body["k"] = args.k
        if args.cnf:
            body["cnf"] = _read(args.cnf)
        else:
            body["variables"] = args.variables
            body["clauses"] = args.clauses
        return cmd, body
    if cmd == "solve-antipath":
        return cmd, {
            "instance": _read(args.instance),
            "x": args.x,
            "y": args.y,
            "node_budget": args.budget,
        }
    if cmd == "verify":
        if not args.instance or not args.cert:
            raise AntistrongError("verify needs an instance and --cert (or --dir)")
        return cmd, {
            "instance": _read(args.instance),
            "certificate": json.loads(_read(args.cert)),
        }
    if cmd == "open":
        return cmd, {"topic": args.topic}
    raise AntistrongError(f"unhandled command {cmd!r}")


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "serve":
            import uvicorn

            from .service import create_app

            uvicorn.run(create_app(), host=args.host, port=args.port)
            return 0
        if args.command == "verify" and args.dir:
            return _cmd_verify_dir(args)
        command, body = _body_for(args)
        resp = _call(args, command, body)
        if command == "gen":
            return _emit_gen(args, resp)
        return _emit(args, resp)
    except ValidationError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return 2
    except AntistrongError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"bad JSON: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
